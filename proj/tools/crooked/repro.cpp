#include "crooked/repro.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include "crooked/crooked_plane.hpp"
#include "crooked/flows.hpp"
#include "crooked/foliation.hpp"
#include "crooked/oracle.hpp"

namespace crooked::cli {
namespace {

// Collects named checks and prints them as one YAML report.
class Report {
 public:
  explicit Report(const std::string& name) {
    out_.SetDoublePrecision(17);
    out_ << YAML::BeginMap << YAML::Key << "repro" << YAML::Value << name;
    out_ << YAML::Key << "checks" << YAML::Value << YAML::BeginSeq;
  }

  void check(const std::string& what, const std::string& expected, const std::string& computed, bool ok) {
    all_ok_ = all_ok_ && ok;
    out_ << YAML::BeginMap << YAML::Key << "check" << YAML::Value << what << YAML::Key << "expected"
         << YAML::Value << expected << YAML::Key << "computed" << YAML::Value << computed << YAML::Key
         << "reproduced" << YAML::Value << ok << YAML::EndMap;
  }

  void numeric(const std::string& what, double expected, double computed, double tol) {
    all_ok_ = all_ok_ && std::abs(expected - computed) <= tol;
    out_ << YAML::BeginMap << YAML::Key << "check" << YAML::Value << what << YAML::Key << "expected"
         << YAML::Value << expected << YAML::Key << "computed" << YAML::Value << computed << YAML::Key
         << "tolerance" << YAML::Value << tol << YAML::Key << "reproduced" << YAML::Value
         << (std::abs(expected - computed) <= tol) << YAML::EndMap;
  }

  /// Free-form finding; does not affect the outcome.
  void note(const std::string& text) { notes_.push_back(text); }

  YAML::Emitter& extra() { return out_; }

  int finish(std::ostream& os) {
    out_ << YAML::EndSeq;
    if (!notes_.empty()) out_ << YAML::Key << "findings" << YAML::Value << notes_;
    out_ << YAML::Key << "reproduced" << YAML::Value << all_ok_ << YAML::EndMap;
    os << out_.c_str() << "\n";
    return all_ok_ ? 0 : 1;
  }

 private:
  YAML::Emitter out_;
  std::vector<std::string> notes_;
  bool all_ok_ = true;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

const std::vector<double> kGrid = uniform_grid(-2.0, 2.0, 33);

HyperbolicFlow unit_flow() { return make_hyperbolic_flow(1.0, 1.0); }

VerificationReport verify_orbit(const HyperbolicFlow& f, const OrbitParams& o, DirectorFamily fam) {
  return verify(hyperbolic_spec(f, o, fam), kGrid);
}

std::string verdict(const VerificationReport& r) {
  if (r.pass()) return "pass";
  std::string s = "fail";
  if (!r.infinitesimal_ok()) s += " (infinitesimal)";
  if (!r.pairwise_ok()) s += " (pairwise, " + std::to_string(r.failing_pairs.size()) + " pairs)";
  return s;
}

int repro_basicex(std::ostream& os) {
  Report rep("basicex");
  double worst_rel = 0.0, worst_rhs = 0.0;
  bool all_dg = true, all_cone = true;
  int pairs = 0;
  for (double alpha : {0.5, 1.0, 2.0})
    for (double t : {-1.5, -0.25, 0.0, 0.8})
      for (double s : {-1.0, 0.1, 0.5, 2.0}) {
        if (!(s > t)) continue;
        const CrookedPlane a({0, alpha * t, 0}, {std::cosh(t), 0, std::sinh(t)});
        const CrookedPlane b({0, alpha * s, 0}, {std::cosh(s), 0, std::sinh(s)});
        const DgTerms d = dg_terms(a, b);
        const double expect = alpha * (s - t) * std::sinh(s - t);
        worst_rel = std::max(worst_rel, std::abs(d.lhs - expect) / std::max(1.0, std::abs(expect)));
        worst_rhs = std::max(worst_rhs, std::abs(d.rhs));
        all_dg = all_dg && dg_disjoint(a, b);
        all_cone = all_cone && cone_disjoint(a, b);
        ++pairs;
      }
  rep.numeric("max relative error of the left side against alpha (s-t) sinh(s-t)", 0.0, worst_rel, 1e-9);
  rep.numeric("max |right side|", 0.0, worst_rhs, 1e-12);
  rep.check("dg disjoint on " + std::to_string(pairs) + " pairs", "true", yes_no(all_dg), all_dg);
  rep.check("cone disjoint on " + std::to_string(pairs) + " pairs", "true", yes_no(all_cone), all_cone);

  const CrookedPlane a({0, 0, 0}, {1, 0, 0});
  const CrookedPlane b({0, 1, 0}, {std::cosh(1.0), 0, std::sinh(1.0)});
  const OracleResult o = oracle_disjoint(a, b, 10.0, 32);
  rep.check("oracle, alpha = 1, t = 0, s = 1", "no_intersection_found",
            o.intersecting ? "intersecting" : "no_intersection_found", !o.intersecting);
  const VerificationReport v = verify(hyperbolic_spec(unit_flow(), {}, DirectorFamily::ultraparallel),
                                      std::vector<double>{-1.0, 0.0, 0.5, 2.0});
  rep.check("axis foliation on grid {-1, 0, 0.5, 2}", "pass", verdict(v), v.pass());
  rep.note("the left side equals alpha (s-t) sinh(s-t) exactly and the right side vanishes");
  return rep.finish(os);
}

int repro_alpha_kl(std::ostream& os) {
  Report rep("alpha-kl");
  bool reduction = true, agree = true;
  int samples = 0;
  for (double l : {0.5, 1.0, 2.0})
    for (double alpha : {0.5, 1.0, 3.0}) {
      const HyperbolicFlow f = make_hyperbolic_flow(l, alpha);
      const OrbitParams o{RegionKind::spacelike, f.mu(), 0.0, 0.0};
      for (double d = 0.05; d <= 5.0 + 1e-12; d += 0.05) {
        const double g = l * d * std::sinh(l * d) - 2.0 * (std::cosh(l * d) - 1.0);
        const CrookedPlane a(hyp_orbit(f, o, 0.0), hyp_director(f, 0.0, DirectorFamily::ultraparallel));
        const CrookedPlane b(hyp_orbit(f, o, d), hyp_director(f, d, DirectorFamily::ultraparallel));
        reduction = reduction && g > 0.0;
        agree = agree && (dg_margin(a, b) > 0.0) == (g > 0.0);
        ++samples;
      }
    }
  rep.check("l d sinh(l d) > 2 (cosh(l d) - 1) for d in (0, 5]", "true on " + std::to_string(samples) + " samples",
            yes_no(reduction), reduction);
  rep.check("dg verdict on the k = mu orbit matches the reduced inequality", "true", yes_no(agree), agree);
  const VerificationReport v = verify_orbit(unit_flow(), {RegionKind::spacelike, 1.0, 0.0, 0.0},
                                            DirectorFamily::ultraparallel);
  rep.check("verify, l = alpha = 1, k = mu = 1", "pass", verdict(v), v.pass());
  return rep.finish(os);
}

int repro_ss_boundary(std::ostream& os) {
  Report rep("ss-boundary");
  const HyperbolicFlow f = unit_flow();
  for (double k : {0.25, 0.5, 1.0, 1.01, 2.0}) {
    const VerificationReport v = verify_orbit(f, {RegionKind::spacelike, k, 0.0, 0.0}, DirectorFamily::ultraparallel);
    const bool expect = k <= f.mu();
    rep.check("S orbit k = " + num(k) + ", t0 = 0", expect ? "pass" : "fail", verdict(v), v.pass() == expect);
  }
  const VerificationReport v = verify_orbit(f, {RegionKind::spacelike, 0.5, 0.2, 0.0}, DirectorFamily::ultraparallel);
  rep.check("S orbit k = 0.5, t0 = 0.2", "fail", verdict(v), !v.pass());

  // Unit-step pair on k just above mu: disjoint, yet no foliation.
  const double l = 1.0;
  const double kmax = l * std::sinh(l) / (2.0 * (std::cosh(l) - 1.0));
  const OrbitParams o{RegionKind::spacelike, 1.05, 0.0, 0.0};
  const CrookedPlane a(hyp_orbit(f, o, 0.0), hyp_director(f, 0.0, DirectorFamily::ultraparallel));
  const CrookedPlane b(hyp_orbit(f, o, 1.0), hyp_director(f, 1.0, DirectorFamily::ultraparallel));
  rep.check("pair t = 0, s = 1 on k = 1.05 (mu < k < " + num(kmax) + ")", "disjoint",
            dg_disjoint(a, b) ? "disjoint" : "not_disjoint", dg_disjoint(a, b));
  rep.note("two planes one unit apart on an S orbit stay disjoint for mu < k < mu l sinh l / (2 (cosh l - 1)), "
           "so a disjoint calibrated pair need not extend to a foliation along its own orbit");
  return rep.finish(os);
}

int repro_parabolic(std::ostream& os) {
  Report rep("parabolic");
  for (double a : {-2.0, -4.0 / 3.0, 0.0, 1.0}) {
    const ParabolicFlow pf{a, -1.0, 1.0};
    const VerificationReport v = verify(parabolic_spec(pf), kGrid);
    const bool expect = a >= -4.0 / 3.0;
    rep.check("(a, b, c) = (" + num(a) + ", -1, 1)", expect ? "pass" : "fail", verdict(v), v.pass() == expect);
    rep.check("par_admits(" + num(a) + ", -1, 1)", yes_no(expect), yes_no(par_admits(pf)), par_admits(pf) == expect);
  }
  const ParabolicFlow pf{0.7, -1.3, 1.3};
  const ParabolicFlow gen{0.7, -0.4, 1.3};
  double e1 = 0.0, e2 = 0.0, e3 = 0.0, e4 = 0.0;
  for (double t : kGrid) {
    const double h = 1e-5;
    const LorentzVector v = (par_orbit(pf, t + h) - par_orbit(pf, t - h)) / (2.0 * h);
    const NullFrame fr = par_director_frame(t);
    const double u = lorentz_dot(v, par_director(t));
    e1 = std::max(e1, std::abs(u - (pf.b + pf.c)));
    const double minus = lorentz_dot(v, fr.minus);
    const double plus = lorentz_dot(v, fr.plus);
    e2 = std::max(e2, std::abs(minus - 2.0 * pf.c));
    e3 = std::max(e3, std::abs(plus + 2.0 * (pf.a + 4.0 * pf.c / 3.0) / (t * t + 1)));
    const LorentzVector w = (par_orbit(gen, t + h) - par_orbit(gen, t - h)) / (2.0 * h);
    e4 = std::max(e4, std::abs(lorentz_dot(w, fr.plus) - (-2.0 * gen.a + gen.b - 5.0 * gen.c / 3.0) / (t * t + 1)));
  }
  rep.numeric("max |p'.u - (b + c)|, finite differences", 0.0, e1, 1e-6);
  rep.numeric("max |p'.u- - 2c|", 0.0, e2, 1e-6);
  rep.numeric("max |p'.u+ + 2 (a + 4c/3) / (t^2 + 1)|, b = -c", 0.0, e3, 1e-6);
  rep.numeric("max |p'.u+ - (-2a + b - 5c/3) / (t^2 + 1)|, b != -c", 0.0, e4, 1e-6);
  rep.note("without b = -c the u+ component is (-2a + b - 5c/3) / (t^2 + 1)");
  return rep.finish(os);
}

void hyperbolic_asymptotic_cases(Report& rep) {
  const HyperbolicFlow f = unit_flow();
  const double mu = f.mu();
  rep.check("Case 1: axis point", "none", hyp_admits_asymptotic(f, {0, 0.3, 0}) ? "orbit" : "none",
            !hyp_admits_asymptotic(f, {0, 0.3, 0}));
  rep.check("W+ point (1, 0, 1)", "none", hyp_admits_asymptotic(f, {1, 0, 1}) ? "orbit" : "none",
            !hyp_admits_asymptotic(f, {1, 0, 1}));

  struct Case {
    std::string name;
    OrbitParams orbit;
  };
  const double t0 = -0.3;
  const std::vector<Case> cases = {
      {"Case 2: W- orbit k = mu/2", {RegionKind::wminus, mu / 2, 0.0, 0.0}},
      {"Case 3: T orbit k = -mu e^{l t0}, t0 = 0.3", {RegionKind::timelike, -mu * std::exp(0.3), 0.3, 0.0}},
      {"Case 4: S orbit k = mu e^{l t0}, t0 = -0.3", {RegionKind::spacelike, mu * std::exp(t0), t0, 0.0}},
  };
  for (const auto& c : cases) {
    const VerificationReport v = verify_orbit(f, c.orbit, DirectorFamily::asymptotic);
    rep.check(c.name, "pass", verdict(v), v.pass());
    const auto found = hyp_admits_asymptotic(f, hyp_orbit(f, c.orbit, 0.0));
    rep.check(c.name + ", detected from its point at t = 0", "orbit", found ? "orbit" : "none", found.has_value());
    for (double scale : {0.95, 1.05}) {
      OrbitParams p = c.orbit;
      p.k *= scale;
      bool any_fail = false;
      for (double t : kGrid)
        any_fail = any_fail ||
                   !infinitesimal_check(hyperbolic_spec(f, p, DirectorFamily::asymptotic), t, 1e-9, SharedNull::plus).pass;
      rep.check(c.name + ", k scaled by " + num(scale), "infinitesimal failure", any_fail ? "infinitesimal failure" : "pass",
                any_fail);
    }
  }
  const OrbitParams late{RegionKind::spacelike, mu * std::exp(0.3), 0.3, 0.0};
  const VerificationReport v = verify_orbit(f, late, DirectorFamily::asymptotic);
  rep.check("S orbit k = mu e^{l t0} with t0 = 0.3", "fail", verdict(v), !v.pass());
  rep.note("on S, p'.u- = alpha (1 - e^{2 l t0}) / (2 cosh l t); it is negative for t0 > 0, so only t0 <= 0 is admissible");
}

int repro_asymptotic_cases(std::ostream& os) {
  Report rep("asymptotic-cases");
  hyperbolic_asymptotic_cases(rep);
  return rep.finish(os);
}

int repro_table1(std::ostream& os) {
  Report rep("table1");
  const HyperbolicFlow f = unit_flow();

  // ultraparallel directors, hyperbolic flow
  bool up_hyp = true;
  for (double k : {0.5, 1.0}) up_hyp = up_hyp && verify_orbit(f, {RegionKind::spacelike, k, 0.0, 0.0},
                                                              DirectorFamily::ultraparallel).pass();
  up_hyp = up_hyp && !verify_orbit(f, {RegionKind::spacelike, 1.01, 0.0, 0.0}, DirectorFamily::ultraparallel).pass();
  up_hyp = up_hyp && !verify_orbit(f, {RegionKind::timelike, 1.0, 0.0, 0.0}, DirectorFamily::ultraparallel).pass();
  rep.check("ultraparallel / hyperbolic", "|k| <= mu on S with t0 = 0, or the axis", up_hyp ? "matches" : "differs",
            up_hyp);

  // ultraparallel directors, parabolic flow
  const PairClass pc = pair_class(par_director(0.0), par_director(1.0));
  rep.check("ultraparallel / parabolic", "impossible (parabolic directors are pairwise asymptotic)",
            std::string(to_string(pc)), pc == PairClass::asymptotic);

  // asymptotic directors, hyperbolic flow
  int passing = 0;
  for (const OrbitParams& o :
       {OrbitParams{RegionKind::wminus, 0.5, 0.0, 0.0}, OrbitParams{RegionKind::timelike, -std::exp(0.3), 0.3, 0.0},
        OrbitParams{RegionKind::spacelike, std::exp(-0.3), -0.3, 0.0}})
    passing += verify_orbit(f, o, DirectorFamily::asymptotic).pass();
  int perturbed = 0;
  for (double k : {0.45, 0.55}) perturbed += verify_orbit(f, {RegionKind::wminus, k, 0.0, 0.0}, DirectorFamily::asymptotic).pass();
  rep.check("asymptotic / hyperbolic", "very rare (isolated orbits)",
            std::to_string(passing) + " of 3 isolated orbits pass, " + std::to_string(perturbed) + " perturbed pass",
            passing == 3 && perturbed == 0);

  // asymptotic directors, parabolic flow
  const ParabolicFlow boundary{-4.0 / 3.0, -1.0, 1.0};
  const VerificationReport vb = verify(parabolic_spec(boundary), kGrid);
  const bool strict_inside = verify(parabolic_spec({-1.0, -1.0, 1.0}), kGrid).pass();
  const bool outside = verify(parabolic_spec({-1.5, -1.0, 1.0}), kGrid).pass();
  const bool off_b = verify(parabolic_spec({0.0, -0.5, 1.0}), kGrid).pass();
  const CrookedPlane a(par_orbit(boundary, 0.0), par_director(0.0));
  const CrookedPlane b(par_orbit(boundary, 1.0), par_director(1.0));
  const OracleResult o = oracle_disjoint(a, b, 10.0, 32);
  const bool ok = strict_inside && !outside && !off_b && vb.pass() && !o.intersecting;
  rep.check("asymptotic / parabolic", "3a + 4c > 0, b = -c, c > 0",
            std::string("a = -1 ") + (strict_inside ? "pass" : "fail") + ", a = -1.5 " + (outside ? "pass" : "fail") +
                ", b != -c " + (off_b ? "pass" : "fail") + ", boundary a = -4c/3 " + verdict(vb) +
                ", boundary oracle t = 0, s = 1 " + (o.intersecting ? "intersecting" : "no_intersection_found"),
            ok);
  rep.note("the boundary 3a + 4c = 0 passes verification and the oracle finds no intersection, so the "
           "non-strict form a >= -4c/3 is the right one");
  return rep.finish(os);
}

}  // namespace

const std::vector<std::string>& repro_names() {
  static const std::vector<std::string> names = {"basicex", "alpha-kl", "ss-boundary",
                                                 "parabolic", "table1", "asymptotic-cases"};
  return names;
}

int cmd_repro(const std::string& name, std::ostream& out) {
  static const std::map<std::string, std::function<int(std::ostream&)>> table = {
      {"basicex", repro_basicex},   {"alpha-kl", repro_alpha_kl}, {"ss-boundary", repro_ss_boundary},
      {"parabolic", repro_parabolic}, {"table1", repro_table1},   {"asymptotic-cases", repro_asymptotic_cases},
  };
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown repro '" + name + "'");
  return it->second(out);
}

}  // namespace crooked::cli
