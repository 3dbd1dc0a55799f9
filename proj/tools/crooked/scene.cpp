#include "crooked/scene.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "crooked/expr.hpp"

namespace crooked::cli {

SceneError::SceneError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what),
      line_(line) {}

namespace {

template <class T>
const T& find_named(const std::vector<Named<T>>& list, const std::string& name, const char* what,
                    const std::string& source) {
  for (const auto& n : list)
    if (n.name == name) return n.value;
  throw SceneError(source, 0, std::string("no ") + what + " named '" + name + "'");
}

}  // namespace

const PlaneDef& Scene::plane(const std::string& name) const { return find_named(planes, name, "crooked plane", source); }
const FlowDef& Scene::flow(const std::string& name) const { return find_named(flows, name, "flow", source); }
const SpecDef& Scene::spec(const std::string& name) const { return find_named(specs, name, "foliation spec", source); }

int Scene::line_of(const std::string& section, const std::string& name) const {
  const auto it = lines.find(section + "/" + name);
  return it == lines.end() ? 0 : it->second;
}

std::string region_name(RegionKind r) { return std::string(to_string(r)); }
std::string family_name(DirectorFamily f) { return std::string(to_string(f)); }

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  Scene read(const YAML::Node& root) {
    Scene scene;
    scene.source = source_;
    if (!root || root.IsNull()) return scene;
    if (!root.IsMap()) fail(root, "the document must be a mapping");
    static const std::set<std::string> known{"vectors", "points", "crooked_planes", "flows", "foliation_specs"};
    for (const auto& kv : root) {
      const std::string key = kv.first.as<std::string>();
      if (!known.count(key)) fail(kv.first, "unknown section '" + key + "'");
    }
    // Sections are read in dependency order regardless of document order.
    section(root, "vectors", [&](const std::string& name, const YAML::Node& n) {
      scene.vectors.push_back({name, vector3(n)});
    }, scene);
    section(root, "points", [&](const std::string& name, const YAML::Node& n) {
      scene.points.push_back({name, kOrigin + vector3(n)});
    }, scene);
    section(root, "crooked_planes", [&](const std::string& name, const YAML::Node& n) {
      scene.planes.push_back({name, plane(n, scene)});
    }, scene);
    section(root, "flows", [&](const std::string& name, const YAML::Node& n) {
      scene.flows.push_back({name, flow(n)});
    }, scene);
    section(root, "foliation_specs", [&](const std::string& name, const YAML::Node& n) {
      scene.specs.push_back({name, spec(n, scene)});
    }, scene);
    return scene;
  }

 private:
  std::string source_;

  [[noreturn]] void fail(const YAML::Node& at, const std::string& what) const {
    throw SceneError(source_, at.Mark().is_null() ? 0 : at.Mark().line + 1, what);
  }

  template <class F>
  void section(const YAML::Node& root, const char* key, F&& each, Scene& scene) {
    const YAML::Node sec = root[key];
    if (!sec || sec.IsNull()) return;
    if (!sec.IsMap()) fail(sec, std::string("section '") + key + "' must be a mapping of names");
    std::set<std::string> seen;
    for (const auto& kv : sec) {
      const std::string name = kv.first.as<std::string>();
      if (!seen.insert(name).second) fail(kv.first, "duplicate name '" + name + "' in " + key);
      scene.lines[std::string(key) + "/" + name] = kv.first.Mark().line + 1;
      each(name, kv.second);
    }
  }

  double scalar(const YAML::Node& n) const {
    if (!n || !n.IsScalar()) fail(n, "expected a number");
    try {
      return eval_expression(n.Scalar());
    } catch (const std::invalid_argument& e) {
      fail(n, e.what());
    }
  }

  int integer(const YAML::Node& n) const {
    const double v = scalar(n);
    if (v != static_cast<double>(static_cast<int>(v))) fail(n, "expected an integer");
    return static_cast<int>(v);
  }

  LorentzVector vector3(const YAML::Node& n) const {
    if (!n.IsSequence() || n.size() != 3) fail(n, "expected a list of three numbers");
    return {scalar(n[0]), scalar(n[1]), scalar(n[2])};
  }

  void only_keys(const YAML::Node& n, const std::set<std::string>& allowed) const {
    if (!n.IsMap()) fail(n, "expected a mapping");
    for (const auto& kv : n) {
      const std::string key = kv.first.as<std::string>();
      if (!allowed.count(key)) fail(kv.first, "unknown key '" + key + "'");
    }
  }

  const YAML::Node required(const YAML::Node& n, const char* key) const {
    const YAML::Node v = n[key];
    if (!v) fail(n, std::string("missing key '") + key + "'");
    return v;
  }

  PlaneDef plane(const YAML::Node& n, const Scene& scene) const {
    only_keys(n, {"vertex", "director"});
    PlaneDef def;
    const YAML::Node v = required(n, "vertex"), d = required(n, "director");
    if (v.IsScalar()) {
      bool found = false;
      for (const auto& p : scene.points)
        if (p.name == v.Scalar()) {
          def.vertex = p.value;
          found = true;
        }
      if (!found) fail(v, "no point named '" + v.Scalar() + "'");
    } else {
      def.vertex = kOrigin + vector3(v);
    }
    if (d.IsScalar()) {
      bool found = false;
      for (const auto& u : scene.vectors)
        if (u.name == d.Scalar()) {
          def.director = u.value;
          found = true;
        }
      if (!found) fail(d, "no vector named '" + d.Scalar() + "'");
    } else {
      def.director = vector3(d);
    }
    if (!is_spacelike(def.director)) fail(d, "director is not spacelike");
    return def;
  }

  Mat3 matrix(const YAML::Node& n) const {
    if (!n.IsSequence() || n.size() != 3) fail(n, "expected three rows");
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r) {
      const LorentzVector row = vector3(n[r]);
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = row[c];
    }
    return m;
  }

  FlowDef flow(const YAML::Node& n) const {
    if (!n.IsMap()) fail(n, "expected a mapping");
    const YAML::Node kind = required(n, "kind");
    FlowDef def;
    try {
      if (kind.Scalar() == "hyperbolic") {
        only_keys(n, {"kind", "l", "alpha", "conjugator"});
        Isometry conj;
        if (const YAML::Node c = n["conjugator"]) {
          only_keys(c, {"linear", "translation"});
          const Mat3 lin = c["linear"] ? matrix(c["linear"]) : Mat3::identity();
          const LorentzVector tr = c["translation"] ? vector3(c["translation"]) : LorentzVector{};
          try {
            conj = Isometry(lin, tr);
          } catch (const GeometryError& e) {
            fail(c, e.what());
          }
        }
        def.kind = FlowKind::hyperbolic;
        def.hyperbolic = make_hyperbolic_flow(scalar(required(n, "l")), scalar(required(n, "alpha")), conj);
      } else if (kind.Scalar() == "parabolic") {
        only_keys(n, {"kind", "a", "b", "c"});
        def.kind = FlowKind::parabolic;
        def.parabolic = {scalar(required(n, "a")), scalar(required(n, "b")), scalar(required(n, "c"))};
      } else {
        fail(kind, "flow kind must be hyperbolic or parabolic");
      }
    } catch (const GeometryError& e) {
      fail(n, e.what());
    }
    return def;
  }

  RegionKind region(const YAML::Node& n) const {
    const std::string s = n.Scalar();
    if (s == "axis" || s == "Axis") return RegionKind::axis;
    if (s == "timelike" || s == "T") return RegionKind::timelike;
    if (s == "wplus" || s == "W+") return RegionKind::wplus;
    if (s == "wminus" || s == "W-") return RegionKind::wminus;
    if (s == "spacelike" || s == "S") return RegionKind::spacelike;
    fail(n, "unknown region '" + s + "'");
  }

  DirectorFamily family(const YAML::Node& n) const {
    const std::string s = n.Scalar();
    if (s == "ultraparallel") return DirectorFamily::ultraparallel;
    if (s == "asymptotic") return DirectorFamily::asymptotic;
    fail(n, "family must be ultraparallel or asymptotic");
  }

  SpecDef spec(const YAML::Node& n, const Scene& scene) const {
    only_keys(n, {"flow", "region", "k", "t0", "shift", "family", "interval", "samples", "sampled"});
    SpecDef def;
    if (const YAML::Node iv = n["interval"]) {
      if (!iv.IsSequence() || iv.size() != 2) fail(iv, "interval must be [lo, hi]");
      def.interval = std::pair{scalar(iv[0]), scalar(iv[1])};
      if (!(def.interval->first < def.interval->second)) fail(iv, "interval needs lo < hi");
    }
    if (const YAML::Node s = n["samples"]) {
      def.samples = integer(s);
      if (*def.samples < 2) fail(s, "samples must be at least 2");
    }
    if (const YAML::Node f = n["family"]) def.family = family(f);

    if (const YAML::Node sm = n["sampled"]) {
      if (n["flow"]) fail(n, "a spec has either a flow or sampled data");
      only_keys(sm, {"t", "points", "directors"});
      SampledCurve curve;
      const YAML::Node t = required(sm, "t"), p = required(sm, "points"), d = required(sm, "directors");
      if (!t.IsSequence() || !p.IsSequence() || !d.IsSequence()) fail(sm, "t, points and directors must be lists");
      for (const auto& x : t) curve.t.push_back(scalar(x));
      for (const auto& x : p) curve.points.push_back(kOrigin + vector3(x));
      for (const auto& x : d) {
        curve.directors.push_back(vector3(x));
        if (!is_spacelike(curve.directors.back())) fail(x, "director is not spacelike");
      }
      try {
        (void)sampled_spec(curve.t, curve.points, curve.directors, def.family);
      } catch (const GeometryError& e) {
        fail(sm, e.what());
      }
      def.sampled = std::move(curve);
      return def;
    }

    const YAML::Node fl = required(n, "flow");
    bool found = false;
    FlowKind kind = FlowKind::hyperbolic;
    for (const auto& f : scene.flows)
      if (f.name == fl.Scalar()) {
        found = true;
        kind = f.value.kind;
      }
    if (!found) fail(fl, "no flow named '" + fl.Scalar() + "'");
    def.flow = fl.Scalar();
    if (kind == FlowKind::parabolic) {
      for (const char* key : {"region", "k", "t0", "shift"})
        if (n[key]) fail(n[key], std::string("'") + key + "' does not apply to a parabolic flow");
      if (n["family"] && def.family != DirectorFamily::asymptotic)
        fail(n["family"], "parabolic orbits carry the asymptotic director family");
      def.family = DirectorFamily::asymptotic;
      return def;
    }
    if (const YAML::Node r = n["region"]) def.orbit.region = region(r);
    if (const YAML::Node k = n["k"]) def.orbit.k = scalar(k);
    if (const YAML::Node t0 = n["t0"]) def.orbit.t0 = scalar(t0);
    if (const YAML::Node sh = n["shift"]) def.orbit.shift = scalar(sh);
    if (def.orbit.region != RegionKind::axis && def.orbit.k == 0.0)
      fail(n, "BadRegionParams: k must be nonzero off the axis");
    return def;
  }
};

void emit_vector(YAML::Emitter& out, const LorentzVector& v) {
  out << YAML::Flow << YAML::BeginSeq << v.x1 << v.x2 << v.x3 << YAML::EndSeq;
}

}  // namespace

Scene parse_scene(const std::string& text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw SceneError(source, e.mark.is_null() ? 0 : e.mark.line + 1, e.msg);
  }
  try {
    return Reader(source).read(root);
  } catch (const YAML::Exception& e) {
    throw SceneError(source, e.mark.is_null() ? 0 : e.mark.line + 1, e.msg);
  }
}

Scene load_scene(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return parse_scene(buf.str(), "<stdin>");
  }
  std::ifstream in(path);
  if (!in) throw SceneError(path, 0, "cannot open file");
  buf << in.rdbuf();
  return parse_scene(buf.str(), path);
}

std::string emit_scene(const Scene& scene) {
  YAML::Emitter out;
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
  if (!scene.vectors.empty()) {
    out << YAML::Key << "vectors" << YAML::Value << YAML::BeginMap;
    for (const auto& v : scene.vectors) {
      out << YAML::Key << v.name << YAML::Value;
      emit_vector(out, v.value);
    }
    out << YAML::EndMap;
  }
  if (!scene.points.empty()) {
    out << YAML::Key << "points" << YAML::Value << YAML::BeginMap;
    for (const auto& p : scene.points) {
      out << YAML::Key << p.name << YAML::Value;
      emit_vector(out, p.value.from_origin());
    }
    out << YAML::EndMap;
  }
  if (!scene.planes.empty()) {
    out << YAML::Key << "crooked_planes" << YAML::Value << YAML::BeginMap;
    for (const auto& p : scene.planes) {
      out << YAML::Key << p.name << YAML::Value << YAML::BeginMap;
      out << YAML::Key << "vertex" << YAML::Value;
      emit_vector(out, p.value.vertex.from_origin());
      out << YAML::Key << "director" << YAML::Value;
      emit_vector(out, p.value.director);
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  if (!scene.flows.empty()) {
    out << YAML::Key << "flows" << YAML::Value << YAML::BeginMap;
    for (const auto& f : scene.flows) {
      out << YAML::Key << f.name << YAML::Value << YAML::BeginMap;
      if (f.value.kind == FlowKind::hyperbolic) {
        const HyperbolicFlow& h = f.value.hyperbolic;
        out << YAML::Key << "kind" << YAML::Value << "hyperbolic";
        out << YAML::Key << "l" << YAML::Value << h.l;
        out << YAML::Key << "alpha" << YAML::Value << h.alpha;
        if (!(h.conjugator == Isometry())) {
          out << YAML::Key << "conjugator" << YAML::Value << YAML::BeginMap;
          out << YAML::Key << "linear" << YAML::Value << YAML::BeginSeq;
          const Mat3& m = h.conjugator.linear();
          for (std::size_t r = 0; r < 3; ++r) emit_vector(out, {m(r, 0), m(r, 1), m(r, 2)});
          out << YAML::EndSeq;
          out << YAML::Key << "translation" << YAML::Value;
          emit_vector(out, h.conjugator.translation());
          out << YAML::EndMap;
        }
      } else {
        const ParabolicFlow& p = f.value.parabolic;
        out << YAML::Key << "kind" << YAML::Value << "parabolic";
        out << YAML::Key << "a" << YAML::Value << p.a;
        out << YAML::Key << "b" << YAML::Value << p.b;
        out << YAML::Key << "c" << YAML::Value << p.c;
      }
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  if (!scene.specs.empty()) {
    out << YAML::Key << "foliation_specs" << YAML::Value << YAML::BeginMap;
    for (const auto& s : scene.specs) {
      const SpecDef& d = s.value;
      out << YAML::Key << s.name << YAML::Value << YAML::BeginMap;
      if (d.sampled) {
        out << YAML::Key << "family" << YAML::Value << family_name(d.family);
        out << YAML::Key << "sampled" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "t" << YAML::Value << YAML::Flow << d.sampled->t;
        out << YAML::Key << "points" << YAML::Value << YAML::BeginSeq;
        for (const auto& p : d.sampled->points) emit_vector(out, p.from_origin());
        out << YAML::EndSeq;
        out << YAML::Key << "directors" << YAML::Value << YAML::BeginSeq;
        for (const auto& u : d.sampled->directors) emit_vector(out, u);
        out << YAML::EndSeq << YAML::EndMap;
      } else {
        out << YAML::Key << "flow" << YAML::Value << d.flow;
        const bool hyperbolic = scene.flow(d.flow).kind == FlowKind::hyperbolic;
        if (hyperbolic) {
          out << YAML::Key << "region" << YAML::Value << region_name(d.orbit.region);
          out << YAML::Key << "k" << YAML::Value << d.orbit.k;
          out << YAML::Key << "t0" << YAML::Value << d.orbit.t0;
          out << YAML::Key << "shift" << YAML::Value << d.orbit.shift;
        }
        out << YAML::Key << "family" << YAML::Value << family_name(d.family);
      }
      if (d.interval) {
        out << YAML::Key << "interval" << YAML::Value << YAML::Flow << YAML::BeginSeq << d.interval->first
            << d.interval->second << YAML::EndSeq;
      }
      if (d.samples) out << YAML::Key << "samples" << YAML::Value << *d.samples;
      out << YAML::EndMap;
    }
    out << YAML::EndMap;
  }
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

FoliationSpec build_spec(const Scene& scene, const std::string& name) {
  const SpecDef& d = scene.spec(name);
  FoliationSpec spec;
  if (d.sampled) {
    spec = sampled_spec(d.sampled->t, d.sampled->points, d.sampled->directors, d.family);
  } else {
    const FlowDef& f = scene.flow(d.flow);
    spec = f.kind == FlowKind::hyperbolic ? hyperbolic_spec(f.hyperbolic, d.orbit, d.family)
                                          : parabolic_spec(f.parabolic);
  }
  spec.label = name;
  return spec;
}

}  // namespace crooked::cli
