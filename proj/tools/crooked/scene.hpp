#pragma once

// Scene documents: named vectors, points, crooked planes, flows and foliation
// specs in YAML. See docs/scene-format.md.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crooked/crooked_plane.hpp"
#include "crooked/flows.hpp"
#include "crooked/foliation.hpp"

namespace crooked::cli {

/// Parse or validation failure; `line` is 1-based, 0 when unknown.
class SceneError : public std::runtime_error {
 public:
  SceneError(const std::string& source, int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

template <class T>
struct Named {
  std::string name;
  T value;

  friend bool operator==(const Named&, const Named&) = default;
};

struct PlaneDef {
  AffinePoint vertex;
  LorentzVector director;

  friend bool operator==(const PlaneDef&, const PlaneDef&) = default;
};

enum class FlowKind { hyperbolic, parabolic };

struct FlowDef {
  FlowKind kind = FlowKind::hyperbolic;
  HyperbolicFlow hyperbolic;
  ParabolicFlow parabolic;

  friend bool operator==(const FlowDef&, const FlowDef&) = default;
};

struct SampledCurve {
  std::vector<double> t;
  std::vector<AffinePoint> points;
  std::vector<LorentzVector> directors;

  friend bool operator==(const SampledCurve&, const SampledCurve&) = default;
};

struct SpecDef {
  std::string flow;  // empty for sampled specs
  OrbitParams orbit;
  DirectorFamily family = DirectorFamily::ultraparallel;
  std::optional<std::pair<double, double>> interval;
  std::optional<int> samples;
  std::optional<SampledCurve> sampled;

  friend bool operator==(const SpecDef&, const SpecDef&) = default;
};

struct Scene {
  std::vector<Named<LorentzVector>> vectors;
  std::vector<Named<AffinePoint>> points;
  std::vector<Named<PlaneDef>> planes;
  std::vector<Named<FlowDef>> flows;
  std::vector<Named<SpecDef>> specs;
  /// Source line of each named entry, keyed "section/name"; not compared.
  std::map<std::string, int> lines;
  std::string source = "<scene>";

  const PlaneDef& plane(const std::string& name) const;
  const FlowDef& flow(const std::string& name) const;
  const SpecDef& spec(const std::string& name) const;
  int line_of(const std::string& section, const std::string& name) const;

  friend bool operator==(const Scene& a, const Scene& b) {
    return a.vectors == b.vectors && a.points == b.points && a.planes == b.planes && a.flows == b.flows &&
           a.specs == b.specs;
  }
};

Scene parse_scene(const std::string& text, const std::string& source = "<scene>");
/// "-" reads standard input.
Scene load_scene(const std::string& path);
/// Deterministic YAML with 17 significant digits; parse_scene(emit_scene(s)) == s.
std::string emit_scene(const Scene& scene);

/// Library spec for a scene entry. Throws SceneError for unknown flows and
/// GeometryError for invalid parameters.
FoliationSpec build_spec(const Scene& scene, const std::string& name);

std::string region_name(RegionKind r);
std::string family_name(DirectorFamily f);

}  // namespace crooked::cli
