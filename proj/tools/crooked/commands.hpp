#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "crooked/oracle.hpp"
#include "crooked/scene.hpp"

namespace crooked::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitInvalid = 2,
  kExitDisagree = 3,
  kExitVerifyFailed = 4,
  kExitNotDisjoint = 5,
  kExitAxisCase = 6,
};

inline constexpr double kDefaultExtent = 10.0;
inline constexpr int kDefaultResolution = 64;
inline constexpr int kDefaultSamples = 33;
inline constexpr std::pair<double, double> kDefaultInterval{-2.0, 2.0};

/// "%.17g"; the one number format used in every report and mesh.
std::string fmt(double x);

int cmd_classify(const Scene& scene, std::ostream& out);

struct DisjointOptions {
  std::string plane1, plane2;  // empty: the scene's only two planes
  std::string method = "all";  // dg | cone | oracle | all
  double extent = kDefaultExtent;
  int resolution = kDefaultResolution;
};
int cmd_disjoint(const Scene& scene, const DisjointOptions& opt, std::ostream& out);

struct SamplingOptions {
  std::optional<std::pair<double, double>> interval;
  std::optional<int> samples;
};

/// Grid from the command line, else the spec entry, else the defaults.
std::vector<double> spec_grid(const Scene& scene, const std::string& spec, const SamplingOptions& opt);

struct VerifyOptions {
  std::string spec;  // empty: the scene's only spec
  SamplingOptions sampling;
  double tol = 0.0;  // <= 0: library default
};
int cmd_verify(const Scene& scene, const VerifyOptions& opt, std::ostream& out);

struct FoliateOptions {
  std::string spec;
  SamplingOptions sampling;
  int count = 7;
  double extent = kDefaultExtent;
  int resolution = kDefaultResolution;
  std::string out_dir = "leaves";
  bool force = false;
};
int cmd_foliate(const Scene& scene, const FoliateOptions& opt, std::ostream& out);

struct CalibrateOptions {
  std::string plane1, plane2;
  std::string emit_path;  // optional file for the emitted scene
};
int cmd_calibrate(const Scene& scene, const CalibrateOptions& opt, std::ostream& out);

struct MeshOptions {
  std::string plane;
  double extent = kDefaultExtent;
  int resolution = kDefaultResolution;
  std::string out_path;  // empty: stdout
};
int cmd_mesh(const Scene& scene, const MeshOptions& opt, std::ostream& out);

/// Wavefront OBJ text for one crooked plane mesh: one object, faces grouped
/// by piece (stem, wing_plus, wing_minus).
std::string mesh_to_obj(const TriangleMesh& mesh, const std::string& object_name, const std::string& comment = {});

}  // namespace crooked::cli
