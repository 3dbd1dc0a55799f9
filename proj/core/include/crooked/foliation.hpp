#pragma once

// Verification of candidate crooked foliations: the infinitesimal (tangent
// quadrant) criterion at grid samples and pairwise disjointness on the grid.

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crooked/crooked_plane.hpp"
#include "crooked/flows.hpp"

namespace crooked {

/// Which null direction every director of an asymptotic family shares.
enum class SharedNull { none, minus, plus };

std::string_view to_string(SharedNull s);

struct FoliationSpec {
  std::function<AffinePoint(double)> vertex;
  std::function<LorentzVector(double)> director;
  /// Closed-form derivative of `vertex`; finite differences when empty.
  std::function<LorentzVector(double)> velocity;
  DirectorFamily family = DirectorFamily::ultraparallel;
  /// Parameters where only one-sided derivatives exist.
  std::vector<double> breakpoints;
  double domain_lo = -std::numeric_limits<double>::infinity();
  double domain_hi = std::numeric_limits<double>::infinity();
  bool sampled = false;
  std::string label;
};

FoliationSpec hyperbolic_spec(const HyperbolicFlow& flow, const OrbitParams& orbit, DirectorFamily family);
FoliationSpec parabolic_spec(const ParabolicFlow& flow);

/// Piecewise-linear vertex and director curves through the samples; every
/// interior sample is a breakpoint. Throws InvalidParams unless the three
/// lists have equal length >= 2 and `t` is strictly increasing.
FoliationSpec sampled_spec(std::vector<double> t, std::vector<AffinePoint> points,
                           std::vector<LorentzVector> directors, DirectorFamily family);

/// The spec t -> spec(a t + b); throws InvalidParams unless a > 0.
FoliationSpec reparametrized(const FoliationSpec& spec, double a, double b);

/// n equally spaced values from lo to hi inclusive (n >= 2, lo < hi).
std::vector<double> uniform_grid(double lo, double hi, std::size_t n = 33);
/// Inserts the midpoint of every gap.
std::vector<double> refine_grid(const std::vector<double>& grid);

double default_tolerance(const FoliationSpec& spec);

/// Shared null direction of the directors at the two ends of the grid.
SharedNull detect_shared_null(const FoliationSpec& spec, const std::vector<double>& grid);

/// consistently_oriented(-u_t, u_s) for t = grid.front(), s = grid.back();
/// also checks that no two grid directors cross. Throws CrossingDirectors
/// (and DegeneratePair for parallel directors).
bool check_normalized(const FoliationSpec& spec, const std::vector<double>& grid);

enum class DerivativeSide { central, left, right };

std::string_view to_string(DerivativeSide s);

struct InfinitesimalRecord {
  double t = 0.0;
  DerivativeSide side = DerivativeSide::central;
  double dot_u = 0.0;
  double dot_minus = 0.0;
  double dot_plus = 0.0;
  bool pass = false;
  std::string reason;  // empty on pass
};

/// Velocity of the vertex curve; finite differences with step
/// 1e-5 max(1, |t|) unless the spec carries a closed form and side is central.
LorentzVector vertex_velocity(const FoliationSpec& spec, double t, DerivativeSide side);

/// Tests p'(t) in the closed stem quadrant of u_t. With a shared null
/// direction the ray along it is excluded. Throws ZeroDerivative.
InfinitesimalRecord infinitesimal_check(const FoliationSpec& spec, double t, double tol,
                                        SharedNull shared = SharedNull::none,
                                        DerivativeSide side = DerivativeSide::central);

struct PairRecord {
  double t = 0.0;
  double s = 0.0;
  std::optional<bool> dg;  // set only for ultraparallel pairs
  double dg_margin = 0.0;
  bool cone = false;
  double cone_margin = 0.0;
  bool pass = false;
  std::string note;
};

/// All pairs t < s of the grid.
std::vector<PairRecord> pairwise_check(const FoliationSpec& spec, const std::vector<double>& grid);

struct VerificationReport {
  bool normalized_ok = false;
  SharedNull shared_null = SharedNull::none;
  double tolerance = 0.0;
  std::vector<InfinitesimalRecord> infinitesimal;
  std::vector<PairRecord> pairwise;
  std::vector<double> failing_samples;
  std::vector<std::pair<double, double>> failing_pairs;

  bool infinitesimal_ok() const;
  bool pairwise_ok() const;
  bool pass() const { return normalized_ok && infinitesimal_ok() && pairwise_ok(); }
};

/// Aggregates the three checks; tol <= 0 selects default_tolerance(spec).
VerificationReport verify(const FoliationSpec& spec, const std::vector<double>& grid, double tol = 0.0);

}  // namespace crooked
