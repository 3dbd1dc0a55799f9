#pragma once

// One-parameter hyperbolic and parabolic isometry groups in closed form,
// their orbits and director curves, the orbit taxonomy of a hyperbolic flow,
// admissibility of one-parameter crooked foliations and calibration of a pair
// of crooked planes onto a hyperbolic orbit.

#include <algorithm>
#include <optional>
#include <string_view>

#include "crooked/minkowski.hpp"

namespace crooked {

enum class DirectorFamily { ultraparallel, asymptotic };

std::string_view to_string(DirectorFamily f);

/// gamma_t = conjugator o gamma^N_t o conjugator^{-1}, where the normalised
/// model gamma^N_t has linear part
///   [[cosh lt, 0, sinh lt], [0, 1, 0], [sinh lt, 0, cosh lt]]
/// and translational part (0, alpha t, 0).
struct HyperbolicFlow {
  double l = 1.0;
  double alpha = 1.0;
  Isometry conjugator;

  /// Generalised Margulis invariant alpha / l.
  double mu() const { return alpha / l; }

  friend bool operator==(const HyperbolicFlow&, const HyperbolicFlow&) = default;
};

/// Throws InvalidParams unless l > 0 and alpha > 0.
HyperbolicFlow make_hyperbolic_flow(double l, double alpha, const Isometry& conjugator = Isometry());

Mat3 hyp_linear(const HyperbolicFlow& flow, double t);
Isometry hyp_isometry(const HyperbolicFlow& flow, double t);

enum class RegionKind { axis, timelike, wplus, wminus, spacelike };

std::string_view to_string(RegionKind r);

/// Region of a point relative to the invariant axis. `k` is |k| for the
/// spacelike cylinders S_k and the Lorentzian length of the transverse part for
/// the other regions (0 on the axis and on W+-).
struct Region {
  RegionKind kind = RegionKind::axis;
  double k = 0.0;
};

/// Closed-form orbit family. `k` keeps its sign; it is ignored on the axis.
struct OrbitParams {
  RegionKind region = RegionKind::axis;
  double k = 0.0;
  double t0 = 0.0;
  /// Position along the invariant axis at t = 0 (the alpha t coordinate is
  /// offset by this amount).
  double shift = 0.0;

  friend constexpr bool operator==(const OrbitParams&, const OrbitParams&) = default;
};

/// Axis: (0, alpha t, 0); T: (k sinh l(t+t0), alpha t, k cosh l(t+t0));
/// W+-: (k e^{+-l(t+t0)}, alpha t, +-k e^{+-l(t+t0)});
/// S: (k cosh l(t+t0), alpha t, k sinh l(t+t0)); conjugated into the working
/// frame. Throws BadRegionParams when k == 0 off the axis.
AffinePoint hyp_orbit(const HyperbolicFlow& flow, const OrbitParams& params, double t);
LorentzVector hyp_orbit_velocity(const HyperbolicFlow& flow, const OrbitParams& params, double t);

/// Ultraparallel family (cosh lt, 0, sinh lt); asymptotic family
/// (e^{lt}, 1, e^{lt}); both pushed through the conjugator's linear part.
LorentzVector hyp_director(const HyperbolicFlow& flow, double t, DirectorFamily family);

Region region_classify(const HyperbolicFlow& flow, const AffinePoint& p);

/// Orbit parameters (with t = 0 at p) of the orbit through p.
OrbitParams orbit_through(const HyperbolicFlow& flow, const AffinePoint& p);

/// Whether the orbit through p, paired with the ultraparallel director curve
/// starting at the flow's u_0, is a one-parameter crooked foliation: on the
/// axis, or on S_k with k <= mu and t0 = 0.
bool hyp_admits_ultraparallel(const HyperbolicFlow& flow, const AffinePoint& p);

/// The orbit through p admitting a foliation by the asymptotic director curve,
/// when p lies on one: W- with k = mu/2, T with k = -mu e^{l t0}, S with
/// k = mu e^{l t0} and t0 <= 0. Empty on the axis, on W+ and off those orbits.
std::optional<OrbitParams> hyp_admits_asymptotic(const HyperbolicFlow& flow, const AffinePoint& p);

/// Parabolic flow whose gamma_1 has translational part (a, b, c) in the basis
/// B = ((0,1,1), (1,0,0), (0,2,0)); the orbit is that of the origin.
struct ParabolicFlow {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  friend constexpr bool operator==(const ParabolicFlow&, const ParabolicFlow&) = default;
};

/// Columns are the vectors of B.
Mat3 parabolic_basis();
/// Gram matrix of the scalar product in B: [[0,0,2],[0,1,0],[2,0,4]].
Mat3 parabolic_gram();
/// [g_t]_B = [[1, t, -t^2], [0, 1, -2t], [0, 0, 1]].
Mat3 par_linear(double t);
/// g_t in standard coordinates.
Mat3 par_linear_standard(double t);
LorentzVector par_to_standard(const LorentzVector& in_basis);
LorentzVector par_from_standard(const LorentzVector& v);
/// Scalar product of two B-coordinate vectors via the Gram matrix.
double par_gram_dot(const LorentzVector& x, const LorentzVector& y);

/// The cumulative translation matrix [[t, (t-1)t/2, -(t-1)t(2t-1)/6],
/// [0, t, -(t-1)t], [0, 0, t]] in B.
Mat3 par_cumulative(double t);
Isometry par_isometry(const ParabolicFlow& flow, double t);
AffinePoint par_orbit(const ParabolicFlow& flow, double t);
LorentzVector par_orbit_velocity(const ParabolicFlow& flow, double t);
/// Director (t, 1, 0)_B in standard coordinates.
LorentzVector par_director(double t);
/// u- = (1,0,0)_B, u+ = (1, 2t/(t^2+1), -1/(t^2+1))_B, in standard coordinates.
NullFrame par_director_frame(double t);

/// b = -c, c > 0, a >= -4c/3.
bool par_admits(const ParabolicFlow& flow, double eps = 1e-12);

/// Outcome of placing two vertex/director pairs on one hyperbolic orbit.
struct Calibration {
  HyperbolicFlow flow;
  /// Orbit of p0 in the normalised model of `flow`; region is spacelike (S)
  /// or, in the axis case, axis.
  OrbitParams orbit;
  double t0 = 0.0;
  /// ln of the ratio (dp . x-) / (dp . x+) in the normalised frame.
  double log_ratio = 0.0;
  bool calibrated = false;
  /// p1 - p0 is parallel to the invariant axis direction.
  bool axis_case = false;
  /// Calibrated and |k| <= mu, i.e. the orbit carries a foliation.
  bool admits_foliation = false;
  /// Directors oriented so that (-u0, u1) is consistent and g_1(u0) = u1.
  LorentzVector u0, u1;
};

/// Tolerance on |log_ratio - l| for "calibrated".
inline double calibration_tolerance(double l) { return 1e-8 * std::max(1.0, l); }

/// Throws NotUltraparallel, NotDisjoint.
Calibration calibrate(const AffinePoint& p0, const LorentzVector& u0, const AffinePoint& p1,
                      const LorentzVector& u1);

}  // namespace crooked
