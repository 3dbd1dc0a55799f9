#include "crooked/flows.hpp"

#include <cmath>

#include "crooked/crooked_plane.hpp"

namespace crooked {

std::string_view to_string(DirectorFamily f) {
  switch (f) {
    case DirectorFamily::ultraparallel: return "ultraparallel";
    case DirectorFamily::asymptotic: return "asymptotic";
  }
  return "unknown";
}

std::string_view to_string(RegionKind r) {
  switch (r) {
    case RegionKind::axis: return "axis";
    case RegionKind::timelike: return "timelike";
    case RegionKind::wplus: return "wplus";
    case RegionKind::wminus: return "wminus";
    case RegionKind::spacelike: return "spacelike";
  }
  return "unknown";
}

HyperbolicFlow make_hyperbolic_flow(double l, double alpha, const Isometry& conjugator) {
  if (!(l > 0.0) || !std::isfinite(l))
    throw GeometryError(ErrorCode::InvalidParams, "hyperbolic flow needs l > 0");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw GeometryError(ErrorCode::InvalidParams, "hyperbolic flow needs alpha > 0");
  return {l, alpha, conjugator};
}

Mat3 hyp_linear(const HyperbolicFlow& flow, double t) {
  const Mat3& a = flow.conjugator.linear();
  return a * boost_x1x3(flow.l * t) * lorentz_inverse(a);
}

Isometry hyp_isometry(const HyperbolicFlow& flow, double t) {
  const Isometry normal(boost_x1x3(flow.l * t), {0.0, flow.alpha * t, 0.0});
  return compose(flow.conjugator, compose(normal, flow.conjugator.inverse()));
}

namespace {

struct NormalState {
  LorentzVector pos, vel;
};

NormalState normal_orbit(const HyperbolicFlow& flow, const OrbitParams& op, double t) {
  const double l = flow.l, k = op.k;
  const double x2 = flow.alpha * t + op.shift;
  const LorentzVector axis_vel{0.0, flow.alpha, 0.0};
  if (op.region == RegionKind::axis) return {{0.0, x2, 0.0}, axis_vel};
  if (k == 0.0 || !std::isfinite(k))
    throw GeometryError(ErrorCode::BadRegionParams, "k must be nonzero off the axis");
  const double th = l * (t + op.t0);
  switch (op.region) {
    case RegionKind::timelike:
      return {{k * std::sinh(th), x2, k * std::cosh(th)},
              {k * l * std::cosh(th), flow.alpha, k * l * std::sinh(th)}};
    case RegionKind::wplus: {
      const double e = std::exp(th);
      return {{k * e, x2, k * e}, {k * l * e, flow.alpha, k * l * e}};
    }
    case RegionKind::wminus: {
      const double e = std::exp(-th);
      return {{k * e, x2, -k * e}, {-k * l * e, flow.alpha, k * l * e}};
    }
    case RegionKind::spacelike:
      return {{k * std::cosh(th), x2, k * std::sinh(th)},
              {k * l * std::sinh(th), flow.alpha, k * l * std::cosh(th)}};
    default: break;
  }
  throw GeometryError(ErrorCode::BadRegionParams, "unknown region");
}

}  // namespace

AffinePoint hyp_orbit(const HyperbolicFlow& flow, const OrbitParams& params, double t) {
  return apply(flow.conjugator, kOrigin + normal_orbit(flow, params, t).pos);
}

LorentzVector hyp_orbit_velocity(const HyperbolicFlow& flow, const OrbitParams& params, double t) {
  return apply_linear(flow.conjugator, normal_orbit(flow, params, t).vel);
}

LorentzVector hyp_director(const HyperbolicFlow& flow, double t, DirectorFamily family) {
  const double lt = flow.l * t;
  const LorentzVector n = family == DirectorFamily::ultraparallel
                              ? LorentzVector{std::cosh(lt), 0.0, std::sinh(lt)}
                              : LorentzVector{std::exp(lt), 1.0, std::exp(lt)};
  return apply_linear(flow.conjugator, n);
}

namespace {

LorentzVector to_normal(const HyperbolicFlow& flow, const AffinePoint& p) {
  return apply(flow.conjugator.inverse(), p).from_origin();
}

}  // namespace

Region region_classify(const HyperbolicFlow& flow, const AffinePoint& p) {
  const LorentzVector n = to_normal(flow, p);
  const LorentzVector x{n.x1, 0.0, n.x3};
  const double xn = euclid_norm(x);
  if (xn <= kNullTolerance * std::max(1.0, euclid_norm(n))) return {RegionKind::axis, 0.0};
  const double q = lorentz_dot(x, x);
  if (std::abs(q) <= kNullTolerance * xn * xn)
    return {x.x1 * x.x3 > 0.0 ? RegionKind::wplus : RegionKind::wminus, 0.0};
  if (q < 0.0) return {RegionKind::timelike, std::sqrt(-q)};
  return {RegionKind::spacelike, std::sqrt(q)};
}

OrbitParams orbit_through(const HyperbolicFlow& flow, const AffinePoint& p) {
  const LorentzVector n = to_normal(flow, p);
  const Region r = region_classify(flow, p);
  OrbitParams op;
  op.region = r.kind;
  op.shift = n.x2;
  switch (r.kind) {
    case RegionKind::axis: break;
    case RegionKind::spacelike:
      op.k = std::copysign(r.k, n.x1);
      op.t0 = std::atanh(n.x3 / n.x1) / flow.l;
      break;
    case RegionKind::timelike:
      op.k = std::copysign(r.k, n.x3);
      op.t0 = std::atanh(n.x1 / n.x3) / flow.l;
      break;
    case RegionKind::wplus:
    case RegionKind::wminus: op.k = n.x1; break;
  }
  return op;
}

bool hyp_admits_ultraparallel(const HyperbolicFlow& flow, const AffinePoint& p) {
  const OrbitParams op = orbit_through(flow, p);
  if (op.region == RegionKind::axis) return true;
  if (op.region != RegionKind::spacelike) return false;
  const double mu = flow.mu();
  const double tol = 1e-9 * std::max(1.0, mu);
  return std::abs(op.k) <= mu + tol && std::abs(op.t0) <= tol;
}

std::optional<OrbitParams> hyp_admits_asymptotic(const HyperbolicFlow& flow, const AffinePoint& p) {
  const OrbitParams op = orbit_through(flow, p);
  const double mu = flow.mu();
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  switch (op.region) {
    case RegionKind::wminus:
      if (close(op.k, mu / 2.0)) return op;
      break;
    case RegionKind::timelike:
      if (close(op.k, -mu * std::exp(flow.l * op.t0))) return op;
      break;
    case RegionKind::spacelike:
      // p'.u- = alpha (1 - e^{2 l t0}) / (2 cosh lt), so only t0 <= 0 stays in
      // the quadrant.
      if (close(op.k, mu * std::exp(flow.l * op.t0)) && op.t0 <= 1e-9) return op;
      break;
    default: break;
  }
  return std::nullopt;
}

Mat3 parabolic_basis() { return Mat3({0, 1, 0, 1, 0, 2, 1, 0, 0}); }

Mat3 parabolic_gram() { return Mat3({0, 0, 2, 0, 1, 0, 2, 0, 4}); }

Mat3 par_linear(double t) { return Mat3({1, t, -t * t, 0, 1, -2 * t, 0, 0, 1}); }

Mat3 par_linear_standard(double t) {
  const Mat3 p = parabolic_basis();
  return p * par_linear(t) * p.inverse();
}

LorentzVector par_to_standard(const LorentzVector& in_basis) { return parabolic_basis() * in_basis; }

LorentzVector par_from_standard(const LorentzVector& v) { return parabolic_basis().inverse() * v; }

double par_gram_dot(const LorentzVector& x, const LorentzVector& y) {
  return euclid_dot(x, parabolic_gram() * y);
}

Mat3 par_cumulative(double t) {
  const double s = (t - 1.0) * t;
  return Mat3({t, s / 2.0, -s * (2.0 * t - 1.0) / 6.0, 0, t, -s, 0, 0, t});
}

namespace {

// d/dt of par_cumulative.
Mat3 par_cumulative_rate(double t) {
  return Mat3({1, t - 0.5, -t * t + t - 1.0 / 6.0, 0, 1, 1 - 2 * t, 0, 0, 1});
}

LorentzVector params(const ParabolicFlow& f) { return {f.a, f.b, f.c}; }

}  // namespace

Isometry par_isometry(const ParabolicFlow& flow, double t) {
  return Isometry(par_linear_standard(t), par_to_standard(par_cumulative(t) * params(flow)));
}

AffinePoint par_orbit(const ParabolicFlow& flow, double t) {
  return kOrigin + par_to_standard(par_cumulative(t) * params(flow));
}

LorentzVector par_orbit_velocity(const ParabolicFlow& flow, double t) {
  return par_to_standard(par_cumulative_rate(t) * params(flow));
}

LorentzVector par_director(double t) { return par_to_standard({t, 1.0, 0.0}); }

NullFrame par_director_frame(double t) {
  const double d = t * t + 1.0;
  return {par_director(t), par_to_standard({1.0, 0.0, 0.0}),
          par_to_standard({1.0, 2.0 * t / d, -1.0 / d})};
}

bool par_admits(const ParabolicFlow& flow, double eps) {
  const double scale = std::max({1.0, std::abs(flow.b), std::abs(flow.c)});
  return std::abs(flow.b + flow.c) <= eps * scale && flow.c > eps &&
         flow.a >= -4.0 * flow.c / 3.0 - eps * scale;
}

Calibration calibrate(const AffinePoint& p0, const LorentzVector& u0_in, const AffinePoint& p1,
                      const LorentzVector& u1_in) {
  const CrookedPlane c0(p0, u0_in), c1(p1, u1_in);
  if (!dg_disjoint(c0, c1))
    throw GeometryError(ErrorCode::NotDisjoint, "calibration needs disjoint crooked planes");

  const LorentzVector delta = p1 - p0;
  LorentzVector u0 = unit_spacelike(u0_in);
  LorentzVector u1 = unit_spacelike(u1_in);

  // Axis direction of the boost carrying u0 to u1, pointing along the
  // translation.
  LorentzVector x = unit_spacelike(lorentz_cross(u0, u1));
  if (lorentz_dot(delta, x) < 0.0) x = -x;
  const NullFrame xf = null_frame(x);
  const double m = lorentz_dot(xf.minus, xf.plus);

  // u0 = a x- + b x+ with b > 0 makes the third column future pointing.
  if (lorentz_dot(u0, xf.minus) / m < 0.0) u0 = -u0;
  if (lorentz_dot(u1, xf.minus) / m < 0.0) u1 = -u1;
  const double a = lorentz_dot(u0, xf.plus) / m, b = lorentz_dot(u0, xf.minus) / m;
  const double a1 = lorentz_dot(u1, xf.plus) / m, b1 = lorentz_dot(u1, xf.minus) / m;
  const double l = 0.5 * std::log((a * b1) / (b * a1));
  if (!(l > 0.0))
    throw GeometryError(ErrorCode::InvalidParams, "directors do not fit an expanding boost along the translation");

  const LorentzVector e3 = b * xf.plus - a * xf.minus;
  const Mat3 frame = Mat3::from_columns(u0, x, e3);
  const LorentzVector dn = lorentz_inverse(frame) * delta;
  const double alpha = dn.x2;
  const double k1 = 0.5 * (dn.x1 + dn.x3), k2 = 0.5 * (dn.x3 - dn.x1);

  Calibration out;
  out.u0 = u0;
  out.u1 = u1;
  const double transverse_tol = 1e-9 * std::max(1.0, euclid_norm(dn));
  if (std::abs(k1) <= transverse_tol && std::abs(k2) <= transverse_tol) {
    out.flow = make_hyperbolic_flow(l, alpha, Isometry(frame, p0.from_origin()));
    out.orbit = {RegionKind::axis, 0.0, 0.0, 0.0};
    out.axis_case = true;
    out.calibrated = true;
    out.admits_foliation = true;
    out.log_ratio = l;
    return out;
  }

  if (!(k1 / k2 > 0.0)) {
    // Not an S orbit; report the flow with the vertex as origin.
    out.flow = make_hyperbolic_flow(l, alpha, Isometry(frame, p0.from_origin()));
    out.log_ratio = std::nan("");
    return out;
  }

  out.log_ratio = std::log(k1 / k2);
  const double t0 = (out.log_ratio - l) / (2.0 * l);
  const double k = 2.0 * k1 / (std::exp(l * t0) * std::expm1(l));
  const LorentzVector base{k * std::cosh(l * t0), 0.0, k * std::sinh(l * t0)};
  out.flow = make_hyperbolic_flow(l, alpha, Isometry(frame, p0.from_origin() - frame * base));
  out.orbit = {RegionKind::spacelike, k, t0, 0.0};
  out.t0 = t0;
  out.calibrated = std::abs(out.log_ratio - l) <= calibration_tolerance(l);
  const double mu = out.flow.mu();
  out.admits_foliation = out.calibrated && std::abs(k) <= mu + 1e-9 * std::max(1.0, mu);
  return out;
}

}  // namespace crooked
