#include "crooked/commands.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace crooked::cli {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

YAML::Emitter& operator<<(YAML::Emitter& out, const LorentzVector& v) {
  return out << YAML::Flow << YAML::BeginSeq << v.x1 << v.x2 << v.x3 << YAML::EndSeq;
}

YAML::Emitter& operator<<(YAML::Emitter& out, const AffinePoint& p) { return out << p.from_origin(); }

void start(YAML::Emitter& out) {
  out.SetDoublePrecision(17);
  out << YAML::BeginMap;
}

void finish(YAML::Emitter& out, std::ostream& os) {
  out << YAML::EndMap;
  os << out.c_str() << "\n";
}

std::string region_label(const Region& r) {
  switch (r.kind) {
    case RegionKind::axis: return "Axis";
    case RegionKind::timelike: return "T";
    case RegionKind::wplus: return "W+";
    case RegionKind::wminus: return "W-";
    case RegionKind::spacelike: return "S(" + fmt(r.k) + ")";
  }
  return "?";
}

std::pair<std::string, std::string> pick_two(const Scene& scene, const std::string& a, const std::string& b) {
  if (!a.empty() && !b.empty()) return {a, b};
  if (a.empty() && b.empty() && scene.planes.size() == 2) return {scene.planes[0].name, scene.planes[1].name};
  throw SceneError(scene.source, 0, "name two crooked planes (the scene has " + std::to_string(scene.planes.size()) + ")");
}

std::string pick_spec(const Scene& scene, const std::string& name) {
  if (!name.empty()) return name;
  if (scene.specs.size() == 1) return scene.specs.front().name;
  throw SceneError(scene.source, 0, "name a foliation spec (the scene has " + std::to_string(scene.specs.size()) + ")");
}

CrookedPlane make_plane(const Scene& scene, const std::string& name) {
  const PlaneDef& d = scene.plane(name);
  return {d.vertex, d.director};
}

}  // namespace

int cmd_classify(const Scene& scene, std::ostream& os) {
  YAML::Emitter out;
  start(out);
  out << YAML::Key << "vectors" << YAML::Value << YAML::BeginMap;
  for (const auto& v : scene.vectors) {
    const CausalClass c = causal_class(v.value);
    out << YAML::Key << v.name << YAML::Value << YAML::Flow << YAML::BeginMap << YAML::Key << "class"
        << YAML::Value << std::string(to_string(c.kind));
    if (c.kind == CausalKind::spacelike) out << YAML::Key << "unit" << YAML::Value << c.unit;
    out << YAML::EndMap;
  }
  out << YAML::EndMap;

  out << YAML::Key << "pairs" << YAML::Value << YAML::BeginSeq;
  for (std::size_t i = 0; i < scene.vectors.size(); ++i)
    for (std::size_t j = i + 1; j < scene.vectors.size(); ++j) {
      const auto& a = scene.vectors[i];
      const auto& b = scene.vectors[j];
      if (!is_spacelike(a.value) || !is_spacelike(b.value)) continue;
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "a" << YAML::Value << a.name << YAML::Key << "b"
          << YAML::Value << b.name;
      try {
        const PairClass pc = pair_class(a.value, b.value);
        out << YAML::Key << "class" << YAML::Value << std::string(to_string(pc));
        if (pc != PairClass::crossing)
          out << YAML::Key << "consistently_oriented" << YAML::Value << consistently_oriented(a.value, b.value);
      } catch (const GeometryError& e) {
        out << YAML::Key << "class" << YAML::Value << std::string(to_string(e.code()));
      }
      out << YAML::EndMap;
    }
  out << YAML::EndSeq;

  out << YAML::Key << "planes" << YAML::Value << YAML::BeginSeq;
  for (std::size_t i = 0; i < scene.planes.size(); ++i)
    for (std::size_t j = i + 1; j < scene.planes.size(); ++j) {
      const auto& a = scene.planes[i];
      const auto& b = scene.planes[j];
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "a" << YAML::Value << a.name << YAML::Key << "b"
          << YAML::Value << b.name;
      try {
        out << YAML::Key << "class" << YAML::Value
            << std::string(to_string(pair_class(a.value.director, b.value.director)));
      } catch (const GeometryError& e) {
        out << YAML::Key << "class" << YAML::Value << std::string(to_string(e.code()));
      }
      out << YAML::EndMap;
    }
  out << YAML::EndSeq;

  out << YAML::Key << "flows" << YAML::Value << YAML::BeginMap;
  for (const auto& f : scene.flows) {
    out << YAML::Key << f.name << YAML::Value << YAML::Flow << YAML::BeginMap;
    if (f.value.kind == FlowKind::hyperbolic) {
      const Mat3 g1 = hyp_linear(f.value.hyperbolic, 1.0);
      out << YAML::Key << "kind" << YAML::Value << "hyperbolic" << YAML::Key << "linear_class" << YAML::Value
          << std::string(to_string(linear_class(g1))) << YAML::Key << "mu" << YAML::Value
          << f.value.hyperbolic.mu();
    } else {
      out << YAML::Key << "kind" << YAML::Value << "parabolic" << YAML::Key << "linear_class" << YAML::Value
          << std::string(to_string(linear_class(par_linear_standard(1.0)))) << YAML::Key << "admits_foliation"
          << YAML::Value << par_admits(f.value.parabolic);
    }
    out << YAML::EndMap;
  }
  out << YAML::EndMap;

  out << YAML::Key << "regions" << YAML::Value << YAML::BeginSeq;
  for (const auto& f : scene.flows) {
    if (f.value.kind != FlowKind::hyperbolic) continue;
    for (const auto& p : scene.points) {
      const Region r = region_classify(f.value.hyperbolic, p.value);
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "point" << YAML::Value << p.name << YAML::Key << "flow"
          << YAML::Value << f.name << YAML::Key << "region" << YAML::Value << region_label(r) << YAML::EndMap;
    }
  }
  out << YAML::EndSeq;
  finish(out, os);
  return kExitOk;
}

int cmd_disjoint(const Scene& scene, const DisjointOptions& opt, std::ostream& os) {
  const auto [n1, n2] = pick_two(scene, opt.plane1, opt.plane2);
  const CrookedPlane a = make_plane(scene, n1), b = make_plane(scene, n2);
  const bool all = opt.method == "all";
  if (!all && opt.method != "dg" && opt.method != "cone" && opt.method != "oracle")
    throw SceneError(scene.source, 0, "unknown method '" + opt.method + "'");

  YAML::Emitter out;
  start(out);
  out << YAML::Key << "planes" << YAML::Value << YAML::Flow << YAML::BeginSeq << n1 << n2 << YAML::EndSeq;
  PairClass pc = PairClass::crossing;
  bool degenerate = false;
  try {
    pc = pair_class(a.director(), b.director());
    out << YAML::Key << "pair_class" << YAML::Value << std::string(to_string(pc));
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::DegeneratePair) throw;
    degenerate = true;
    out << YAML::Key << "pair_class" << YAML::Value << "parallel";
  }

  std::vector<bool> verdicts;
  if (all || opt.method == "dg") {
    out << YAML::Key << "dg" << YAML::Value << YAML::BeginMap;
    if (!degenerate && pc == PairClass::ultraparallel) {
      const DgTerms t = dg_terms(a, b);
      const bool d = t.lhs - t.rhs > 0.0;
      verdicts.push_back(d);
      out << YAML::Key << "verdict" << YAML::Value << (d ? "disjoint" : "not_disjoint") << YAML::Key << "lhs"
          << YAML::Value << t.lhs << YAML::Key << "rhs" << YAML::Value << t.rhs;
    } else if (all) {
      out << YAML::Key << "verdict" << YAML::Value << "not_applicable";
    } else {
      throw GeometryError(ErrorCode::NotUltraparallel, "the dg method needs ultraparallel directors");
    }
    out << YAML::EndMap;
  }
  if (all || opt.method == "cone") {
    out << YAML::Key << "cone" << YAML::Value << YAML::BeginMap;
    if (degenerate || pc == PairClass::crossing) {
      // Crossing or parallel directors never give disjoint planes.
      verdicts.push_back(false);
      out << YAML::Key << "verdict" << YAML::Value << "not_disjoint" << YAML::Key << "reason" << YAML::Value
          << (degenerate ? "parallel directors" : "crossing directors");
    } else {
      const double m = cone_margin(a, b);
      verdicts.push_back(m > 0.0);
      out << YAML::Key << "verdict" << YAML::Value << (m > 0.0 ? "disjoint" : "not_disjoint") << YAML::Key
          << "margin" << YAML::Value << m;
    }
    out << YAML::EndMap;
  }
  if (all || opt.method == "oracle") {
    const OracleResult r = oracle_disjoint(a, b, opt.extent, opt.resolution);
    verdicts.push_back(!r.intersecting);
    out << YAML::Key << "oracle" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "verdict" << YAML::Value << (r.intersecting ? "intersecting" : "no_intersection_found");
    out << YAML::Key << "extent" << YAML::Value << opt.extent << YAML::Key << "resolution" << YAML::Value
        << opt.resolution;
    if (r.intersecting) {
      out << YAML::Key << "witness" << YAML::Value << r.witness;
      out << YAML::Key << "pieces" << YAML::Value << YAML::Flow << YAML::BeginSeq
          << std::string(to_string(r.piece1)) << std::string(to_string(r.piece2)) << YAML::EndSeq;
    }
    out << YAML::EndMap;
  }
  const bool agree = std::all_of(verdicts.begin(), verdicts.end(), [&](bool v) { return v == verdicts.front(); });
  if (all) out << YAML::Key << "agree" << YAML::Value << agree;
  finish(out, os);
  return agree ? kExitOk : kExitDisagree;
}

std::vector<double> spec_grid(const Scene& scene, const std::string& spec, const SamplingOptions& opt) {
  const SpecDef& d = scene.spec(spec);
  auto interval = opt.interval ? opt.interval : d.interval;
  if (!interval && d.sampled) interval = std::pair{d.sampled->t.front(), d.sampled->t.back()};
  const auto [lo, hi] = interval.value_or(kDefaultInterval);
  const int n = opt.samples.value_or(d.samples.value_or(kDefaultSamples));
  return uniform_grid(lo, hi, static_cast<std::size_t>(n));
}

namespace {

void emit_report(YAML::Emitter& out, const VerificationReport& rep, const std::vector<double>& grid) {
  out << YAML::Key << "interval" << YAML::Value << YAML::Flow << YAML::BeginSeq << grid.front() << grid.back()
      << YAML::EndSeq;
  out << YAML::Key << "samples" << YAML::Value << grid.size();
  out << YAML::Key << "tolerance" << YAML::Value << rep.tolerance;
  out << YAML::Key << "normalized" << YAML::Value << rep.normalized_ok;
  out << YAML::Key << "shared_null" << YAML::Value << std::string(to_string(rep.shared_null));
  out << YAML::Key << "infinitesimal_ok" << YAML::Value << rep.infinitesimal_ok();
  out << YAML::Key << "pairwise_ok" << YAML::Value << rep.pairwise_ok();
  out << YAML::Key << "pass" << YAML::Value << rep.pass();
  out << YAML::Key << "infinitesimal" << YAML::Value << YAML::BeginSeq;
  for (const auto& r : rep.infinitesimal) {
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "t" << YAML::Value << r.t;
    if (r.side != DerivativeSide::central) out << YAML::Key << "side" << YAML::Value << std::string(to_string(r.side));
    out << YAML::Key << "dot_u" << YAML::Value << r.dot_u << YAML::Key << "dot_minus" << YAML::Value << r.dot_minus
        << YAML::Key << "dot_plus" << YAML::Value << r.dot_plus << YAML::Key << "pass" << YAML::Value << r.pass;
    if (!r.pass) out << YAML::Key << "reason" << YAML::Value << r.reason;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "pairs_checked" << YAML::Value << rep.pairwise.size();
  out << YAML::Key << "pairs_failed" << YAML::Value << rep.failing_pairs.size();
  out << YAML::Key << "witnesses" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "samples" << YAML::Value << YAML::Flow << rep.failing_samples;
  out << YAML::Key << "pairs" << YAML::Value << YAML::BeginSeq;
  constexpr std::size_t kMaxPairs = 20;
  std::size_t shown = 0;
  for (const auto& r : rep.pairwise) {
    if (r.pass) continue;
    if (shown++ == kMaxPairs) break;
    out << YAML::Flow << YAML::BeginMap << YAML::Key << "t" << YAML::Value << r.t << YAML::Key << "s" << YAML::Value
        << r.s << YAML::Key << "cone_margin" << YAML::Value << r.cone_margin;
    if (r.dg) out << YAML::Key << "dg_margin" << YAML::Value << r.dg_margin;
    if (!r.note.empty()) out << YAML::Key << "note" << YAML::Value << r.note;
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
}

}  // namespace

int cmd_verify(const Scene& scene, const VerifyOptions& opt, std::ostream& os) {
  const std::string name = pick_spec(scene, opt.spec);
  const auto grid = spec_grid(scene, name, opt.sampling);
  const VerificationReport rep = verify(build_spec(scene, name), grid, opt.tol);
  YAML::Emitter out;
  start(out);
  out << YAML::Key << "spec" << YAML::Value << name;
  emit_report(out, rep, grid);
  finish(out, os);
  return rep.pass() ? kExitOk : kExitVerifyFailed;
}

std::string mesh_to_obj(const TriangleMesh& mesh, const std::string& object_name, const std::string& comment) {
  std::string s;
  if (!comment.empty()) s += "# " + comment + "\n";
  s += "o " + object_name + "\n";
  for (const auto& v : mesh.vertices) s += "v " + fmt(v.x1) + " " + fmt(v.x2) + " " + fmt(v.x3) + "\n";
  std::optional<CrookedPiece> group;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    if (group != mesh.pieces[i]) {
      group = mesh.pieces[i];
      s += "g " + std::string(to_string(*group)) + "\n";
    }
    const auto& t = mesh.triangles[i];
    s += "f " + std::to_string(t[0] + 1) + " " + std::to_string(t[1] + 1) + " " + std::to_string(t[2] + 1) + "\n";
  }
  return s;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

}  // namespace

int cmd_foliate(const Scene& scene, const FoliateOptions& opt, std::ostream& os) {
  const std::string name = pick_spec(scene, opt.spec);
  const FoliationSpec spec = build_spec(scene, name);
  const auto grid = spec_grid(scene, name, opt.sampling);
  const VerificationReport rep = verify(spec, grid);
  if (!rep.pass() && !opt.force) {
    YAML::Emitter out;
    start(out);
    out << YAML::Key << "spec" << YAML::Value << name << YAML::Key << "written" << YAML::Value << 0;
    emit_report(out, rep, grid);
    finish(out, os);
    return kExitVerifyFailed;
  }
  if (opt.count < 1) throw SceneError(scene.source, 0, "count must be positive");
  const std::vector<double> leaves = opt.count == 1 ? std::vector<double>{0.5 * (grid.front() + grid.back())}
                                                    : uniform_grid(grid.front(), grid.back(), static_cast<std::size_t>(opt.count));
  const std::filesystem::path dir(opt.out_dir);
  std::filesystem::create_directories(dir);

  YAML::Emitter man;
  start(man);
  man << YAML::Key << "spec" << YAML::Value << name;
  man << YAML::Key << "verified" << YAML::Value << rep.pass();
  man << YAML::Key << "forced" << YAML::Value << (opt.force && !rep.pass());
  man << YAML::Key << "extent" << YAML::Value << opt.extent << YAML::Key << "resolution" << YAML::Value
      << opt.resolution;
  man << YAML::Key << "leaves" << YAML::Value << YAML::BeginSeq;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const double t = leaves[i];
    const CrookedPlane cp(spec.vertex(t), spec.director(t));
    char file[32];
    std::snprintf(file, sizeof file, "leaf_%03zu.obj", i);
    write_file(dir / file, mesh_to_obj(mesh_crooked_plane(cp, opt.extent, opt.resolution), "leaf_" + std::to_string(i),
                                       "crooked plane at t = " + fmt(t)));
    man << YAML::BeginMap << YAML::Key << "file" << YAML::Value << std::string(file) << YAML::Key << "t"
        << YAML::Value << t << YAML::Key << "vertex" << YAML::Value << cp.vertex() << YAML::Key << "director"
        << YAML::Value << cp.director() << YAML::Key << "u_minus" << YAML::Value << cp.frame().minus << YAML::Key
        << "u_plus" << YAML::Value << cp.frame().plus << YAML::EndMap;
  }
  man << YAML::EndSeq << YAML::EndMap;
  write_file(dir / "manifest.yaml", std::string(man.c_str()) + "\n");

  YAML::Emitter out;
  start(out);
  out << YAML::Key << "spec" << YAML::Value << name << YAML::Key << "written" << YAML::Value << leaves.size()
      << YAML::Key << "directory" << YAML::Value << dir.string() << YAML::Key << "verified" << YAML::Value
      << rep.pass();
  finish(out, os);
  return kExitOk;
}

int cmd_calibrate(const Scene& scene, const CalibrateOptions& opt, std::ostream& os) {
  const auto [n1, n2] = pick_two(scene, opt.plane1, opt.plane2);
  const PlaneDef& a = scene.plane(n1);
  const PlaneDef& b = scene.plane(n2);
  YAML::Emitter out;
  start(out);
  out << YAML::Key << "planes" << YAML::Value << YAML::Flow << YAML::BeginSeq << n1 << n2 << YAML::EndSeq;
  Calibration c;
  try {
    c = calibrate(a.vertex, a.director, b.vertex, b.director);
  } catch (const GeometryError& e) {
    if (e.code() != ErrorCode::NotDisjoint) throw;
    out << YAML::Key << "error" << YAML::Value << "NotDisjoint";
    finish(out, os);
    return kExitNotDisjoint;
  }
  out << YAML::Key << "l" << YAML::Value << c.flow.l << YAML::Key << "alpha" << YAML::Value << c.flow.alpha
      << YAML::Key << "mu" << YAML::Value << c.flow.mu();
  out << YAML::Key << "axis_case" << YAML::Value << c.axis_case;
  if (!c.axis_case) {
    out << YAML::Key << "log_ratio" << YAML::Value << c.log_ratio << YAML::Key << "t0" << YAML::Value << c.t0
        << YAML::Key << "k" << YAML::Value << c.orbit.k;
  }
  out << YAML::Key << "calibrated" << YAML::Value << c.calibrated;
  out << YAML::Key << "admits_foliation" << YAML::Value << c.admits_foliation;

  if (c.calibrated) {
    Scene emitted;
    emitted.flows.push_back({"calibrated", {FlowKind::hyperbolic, c.flow, {}}});
    SpecDef s;
    s.flow = "calibrated";
    s.orbit = c.orbit;
    s.family = DirectorFamily::ultraparallel;
    s.interval = std::pair{0.0, 1.0};
    s.samples = kDefaultSamples;
    emitted.specs.push_back({"foliation", s});
    const std::string doc = emit_scene(emitted);
    out << YAML::Key << "scene" << YAML::Value << YAML::Literal << doc;
    if (!opt.emit_path.empty()) write_file(opt.emit_path, doc);
  }
  finish(out, os);
  return c.axis_case ? kExitAxisCase : kExitOk;
}

int cmd_mesh(const Scene& scene, const MeshOptions& opt, std::ostream& os) {
  const std::string name = !opt.plane.empty() ? opt.plane
                           : scene.planes.size() == 1 ? scene.planes.front().name
                                                      : throw SceneError(scene.source, 0, "name a crooked plane");
  const CrookedPlane cp = make_plane(scene, name);
  const std::string obj = mesh_to_obj(mesh_crooked_plane(cp, opt.extent, opt.resolution), name);
  if (opt.out_path.empty()) {
    os << obj;
  } else {
    write_file(opt.out_path, obj);
  }
  return kExitOk;
}

}  // namespace crooked::cli
