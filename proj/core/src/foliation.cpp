#include "crooked/foliation.hpp"

#include <algorithm>
#include <cmath>

#include "crooked/parallel.hpp"

namespace crooked {

std::string_view to_string(SharedNull s) {
  switch (s) {
    case SharedNull::none: return "none";
    case SharedNull::minus: return "minus";
    case SharedNull::plus: return "plus";
  }
  return "unknown";
}

std::string_view to_string(DerivativeSide s) {
  switch (s) {
    case DerivativeSide::central: return "central";
    case DerivativeSide::left: return "left";
    case DerivativeSide::right: return "right";
  }
  return "unknown";
}

FoliationSpec hyperbolic_spec(const HyperbolicFlow& flow, const OrbitParams& orbit, DirectorFamily family) {
  FoliationSpec spec;
  spec.vertex = [flow, orbit](double t) { return hyp_orbit(flow, orbit, t); };
  spec.velocity = [flow, orbit](double t) { return hyp_orbit_velocity(flow, orbit, t); };
  spec.director = [flow, family](double t) { return hyp_director(flow, t, family); };
  spec.family = family;
  spec.label = "hyperbolic/" + std::string(to_string(orbit.region));
  return spec;
}

FoliationSpec parabolic_spec(const ParabolicFlow& flow) {
  FoliationSpec spec;
  spec.vertex = [flow](double t) { return par_orbit(flow, t); };
  spec.velocity = [flow](double t) { return par_orbit_velocity(flow, t); };
  spec.director = [](double t) { return par_director(t); };
  spec.family = DirectorFamily::asymptotic;
  spec.label = "parabolic";
  return spec;
}

namespace {

// Segment index i with t[i] <= x <= t[i+1], clamped to the ends.
std::size_t segment(const std::vector<double>& t, double x) {
  const auto it = std::upper_bound(t.begin(), t.end(), x);
  const std::size_t hi = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(it - t.begin(), 1, static_cast<std::ptrdiff_t>(t.size()) - 1));
  return hi - 1;
}

template <class V>
V lerp(const V& a, const V& b, double w) {
  return a + w * (b - a);
}

}  // namespace

FoliationSpec sampled_spec(std::vector<double> t, std::vector<AffinePoint> points,
                           std::vector<LorentzVector> directors, DirectorFamily family) {
  if (t.size() < 2 || points.size() != t.size() || directors.size() != t.size())
    throw GeometryError(ErrorCode::InvalidParams, "sampled curves need matching lists of at least two samples");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1]))
      throw GeometryError(ErrorCode::InvalidParams, "sample parameters must be strictly increasing");

  FoliationSpec spec;
  spec.family = family;
  spec.sampled = true;
  spec.domain_lo = t.front();
  spec.domain_hi = t.back();
  spec.breakpoints.assign(t.begin() + 1, t.end() - 1);
  spec.label = "sampled";
  spec.vertex = [t, points](double x) {
    const std::size_t i = segment(t, x);
    const double w = (x - t[i]) / (t[i + 1] - t[i]);
    return points[i] + w * (points[i + 1] - points[i]);
  };
  spec.director = [t, directors](double x) {
    const std::size_t i = segment(t, x);
    return lerp(directors[i], directors[i + 1], (x - t[i]) / (t[i + 1] - t[i]));
  };
  return spec;
}

FoliationSpec reparametrized(const FoliationSpec& spec, double a, double b) {
  if (!(a > 0.0)) throw GeometryError(ErrorCode::InvalidParams, "reparametrization needs a > 0");
  FoliationSpec out = spec;
  out.vertex = [f = spec.vertex, a, b](double t) { return f(a * t + b); };
  out.director = [f = spec.director, a, b](double t) { return f(a * t + b); };
  if (spec.velocity) out.velocity = [f = spec.velocity, a, b](double t) { return a * f(a * t + b); };
  for (double& x : out.breakpoints) x = (x - b) / a;
  out.domain_lo = (spec.domain_lo - b) / a;
  out.domain_hi = (spec.domain_hi - b) / a;
  return out;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2 || !(lo < hi)) throw GeometryError(ErrorCode::InvalidParams, "grid needs n >= 2 and lo < hi");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = hi;
  return g;
}

std::vector<double> refine_grid(const std::vector<double>& grid) {
  std::vector<double> out;
  if (grid.empty()) return out;
  out.reserve(2 * grid.size());
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    out.push_back(grid[i]);
    out.push_back(0.5 * (grid[i] + grid[i + 1]));
  }
  out.push_back(grid.back());
  return out;
}

double default_tolerance(const FoliationSpec& spec) { return spec.sampled ? 1e-6 : 1e-9; }

SharedNull detect_shared_null(const FoliationSpec& spec, const std::vector<double>& grid) {
  if (spec.family != DirectorFamily::asymptotic || grid.size() < 2) return SharedNull::none;
  const NullFrame a = null_frame(spec.director(grid.front()));
  const NullFrame b = null_frame(spec.director(grid.back()));
  constexpr double tol = 1e-7;
  if (euclid_norm(a.minus - b.minus) <= tol) return SharedNull::minus;
  if (euclid_norm(a.plus - b.plus) <= tol) return SharedNull::plus;
  return SharedNull::none;
}

bool check_normalized(const FoliationSpec& spec, const std::vector<double>& grid) {
  if (grid.size() < 2) throw GeometryError(ErrorCode::InvalidParams, "normalization check needs two samples");
  std::vector<LorentzVector> u(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) u[i] = spec.director(grid[i]);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (pair_class(u[i], u[j]) == PairClass::crossing)
        throw GeometryError(ErrorCode::CrossingDirectors,
                            "directors at t = " + std::to_string(grid[i]) + " and s = " + std::to_string(grid[j]) + " cross");
  return consistently_oriented(-u.front(), u.back());
}

namespace {

// Largest step usable on `side` of t without crossing a breakpoint or the
// domain boundary.
double step_limit(const FoliationSpec& spec, double t, int direction) {
  double room = direction > 0 ? spec.domain_hi - t : t - spec.domain_lo;
  for (double b : spec.breakpoints) {
    const double d = direction > 0 ? b - t : t - b;
    if (d > 1e-12 * std::max(1.0, std::abs(t))) room = std::min(room, d);
  }
  return room;
}

}  // namespace

LorentzVector vertex_velocity(const FoliationSpec& spec, double t, DerivativeSide side) {
  if (side == DerivativeSide::central && spec.velocity) return spec.velocity(t);
  double h = 1e-5 * std::max(1.0, std::abs(t));
  const auto p = [&](double x) { return spec.vertex(x).from_origin(); };
  switch (side) {
    case DerivativeSide::central: {
      h = std::min({h, 0.5 * step_limit(spec, t, 1), 0.5 * step_limit(spec, t, -1)});
      return (p(t + h) - p(t - h)) / (2.0 * h);
    }
    case DerivativeSide::right: {
      h = std::min(h, 0.25 * step_limit(spec, t, 1));
      return (-3.0 * p(t) + 4.0 * p(t + h) - p(t + 2.0 * h)) / (2.0 * h);
    }
    case DerivativeSide::left: {
      h = std::min(h, 0.25 * step_limit(spec, t, -1));
      return (3.0 * p(t) - 4.0 * p(t - h) + p(t - 2.0 * h)) / (2.0 * h);
    }
  }
  return {};
}

InfinitesimalRecord infinitesimal_check(const FoliationSpec& spec, double t, double tol, SharedNull shared,
                                        DerivativeSide side) {
  const LorentzVector v = vertex_velocity(spec, t, side);
  const double vn = euclid_norm(v);
  if (!(vn > 1e-12))
    throw GeometryError(ErrorCode::ZeroDerivative, "vertex curve is not regular at t = " + std::to_string(t));
  const NullFrame f = null_frame(spec.director(t));

  InfinitesimalRecord r;
  r.t = t;
  r.side = side;
  r.dot_u = lorentz_dot(v, f.u);
  r.dot_minus = lorentz_dot(v, f.minus);
  r.dot_plus = lorentz_dot(v, f.plus);
  const double tu = tol * std::max(1.0, vn * euclid_norm(f.u));
  const double tm = tol * std::max(1.0, vn * euclid_norm(f.minus));
  const double tp = tol * std::max(1.0, vn * euclid_norm(f.plus));

  if (std::abs(r.dot_u) > tu)
    r.reason = "velocity leaves the director's orthogonal plane";
  else if (r.dot_minus < -tm)
    r.reason = "velocity.u- < 0";
  else if (r.dot_plus > tp)
    r.reason = "velocity.u+ > 0";
  else if (shared == SharedNull::minus && !(r.dot_minus > tm))
    r.reason = "velocity on the shared null ray (u-)";
  else if (shared == SharedNull::plus && !(r.dot_plus < -tp))
    r.reason = "velocity on the shared null ray (u+)";
  r.pass = r.reason.empty();
  return r;
}

std::vector<PairRecord> pairwise_check(const FoliationSpec& spec, const std::vector<double>& grid) {
  const std::size_t n = grid.size();
  std::vector<PairRecord> out;
  if (n < 2) return out;
  std::vector<AffinePoint> p(n);
  std::vector<LorentzVector> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = spec.vertex(grid[i]);
    u[i] = spec.director(grid[i]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  out.resize(pairs.size());

  parallel_for(pairs.size(), [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    PairRecord& r = out[k];
    r.t = grid[i];
    r.s = grid[j];
    try {
      const CrookedPlane a(p[i], u[i]), b(p[j], u[j]);
      if (pair_class(u[i], u[j]) == PairClass::ultraparallel) {
        r.dg_margin = dg_margin(a, b);
        r.dg = r.dg_margin > 0.0;
      }
      r.cone_margin = cone_margin(a, b);
      r.cone = r.cone_margin > 0.0;
      r.pass = r.cone && r.dg.value_or(true);
      if (r.dg && *r.dg != r.cone) r.note = "criteria disagree";
    } catch (const GeometryError& e) {
      r.pass = false;
      r.note = e.what();
    }
  });
  return out;
}

bool VerificationReport::infinitesimal_ok() const {
  return std::all_of(infinitesimal.begin(), infinitesimal.end(), [](const auto& r) { return r.pass; });
}

bool VerificationReport::pairwise_ok() const {
  return std::all_of(pairwise.begin(), pairwise.end(), [](const auto& r) { return r.pass; });
}

namespace {

std::vector<DerivativeSide> sides_at(const FoliationSpec& spec, double t) {
  const double eps = 1e-12 * std::max(1.0, std::abs(t));
  const bool at_lo = t <= spec.domain_lo + eps;
  const bool at_hi = t >= spec.domain_hi - eps;
  if (at_lo && at_hi) return {};
  if (at_lo) return {DerivativeSide::right};
  if (at_hi) return {DerivativeSide::left};
  const bool is_break = std::any_of(spec.breakpoints.begin(), spec.breakpoints.end(),
                                    [&](double b) { return std::abs(b - t) <= eps; });
  if (is_break) return {DerivativeSide::left, DerivativeSide::right};
  return {DerivativeSide::central};
}

}  // namespace

VerificationReport verify(const FoliationSpec& spec, const std::vector<double>& grid, double tol) {
  VerificationReport rep;
  rep.tolerance = tol > 0.0 ? tol : default_tolerance(spec);
  rep.normalized_ok = check_normalized(spec, grid);
  rep.shared_null = detect_shared_null(spec, grid);

  std::vector<std::vector<InfinitesimalRecord>> per_sample(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    for (DerivativeSide side : sides_at(spec, grid[i]))
      per_sample[i].push_back(infinitesimal_check(spec, grid[i], rep.tolerance, rep.shared_null, side));
  }, 1);
  for (auto& recs : per_sample)
    for (auto& r : recs) {
      if (!r.pass && (rep.failing_samples.empty() || rep.failing_samples.back() != r.t))
        rep.failing_samples.push_back(r.t);
      rep.infinitesimal.push_back(std::move(r));
    }

  rep.pairwise = pairwise_check(spec, grid);
  for (const auto& r : rep.pairwise)
    if (!r.pass) rep.failing_pairs.emplace_back(r.t, r.s);
  return rep;
}

}  // namespace crooked
