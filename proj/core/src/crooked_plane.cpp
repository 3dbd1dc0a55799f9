#include "crooked/crooked_plane.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace crooked {

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::crossing: return "crossing";
    case PairClass::ultraparallel: return "ultraparallel";
    case PairClass::asymptotic: return "asymptotic";
  }
  return "unknown";
}

std::string_view to_string(CrookedPiece piece) {
  switch (piece) {
    case CrookedPiece::stem: return "stem";
    case CrookedPiece::wing_plus: return "wing_plus";
    case CrookedPiece::wing_minus: return "wing_minus";
  }
  return "unknown";
}

PairClass pair_class(const LorentzVector& u1, const LorentzVector& u2) {
  if (!is_spacelike(u1) || !is_spacelike(u2))
    throw GeometryError(ErrorCode::NotSpacelike, "pair_class needs spacelike vectors");
  const LorentzVector c = lorentz_cross(u1, u2);
  if (euclid_norm(c) <= 1e-12 * euclid_norm(u1) * euclid_norm(u2))
    throw GeometryError(ErrorCode::DegeneratePair, "directors are parallel");
  switch (causal_class(c).kind) {
    case CausalKind::timelike: return PairClass::crossing;
    case CausalKind::spacelike: return PairClass::ultraparallel;
    default: return PairClass::asymptotic;
  }
}

namespace {

bool oriented_unchecked(const LorentzVector& u1, const LorentzVector& u2) {
  if (!(lorentz_dot(u1, u2) < 0.0)) return false;
  const NullFrame f1 = null_frame(u1);
  const NullFrame f2 = null_frame(u2);
  const auto non_positive = [](const LorentzVector& a, const LorentzVector& null_vec) {
    return lorentz_dot(a, null_vec) <= kNullTolerance * euclid_norm(a) * euclid_norm(null_vec);
  };
  return non_positive(u1, f2.minus) && non_positive(u1, f2.plus) && non_positive(u2, f1.minus) &&
         non_positive(u2, f1.plus);
}

// Worst violation of the sign conditions; used to break numerical ties.
double orientation_slack(const LorentzVector& u1, const LorentzVector& u2) {
  const NullFrame f1 = null_frame(u1);
  const NullFrame f2 = null_frame(u2);
  const double terms[] = {lorentz_dot(u1, f2.minus), lorentz_dot(u1, f2.plus),
                          lorentz_dot(u2, f1.minus), lorentz_dot(u2, f1.plus)};
  return -*std::max_element(std::begin(terms), std::end(terms));
}

}  // namespace

bool consistently_oriented(const LorentzVector& u1, const LorentzVector& u2) {
  if (pair_class(u1, u2) == PairClass::crossing)
    throw GeometryError(ErrorCode::CrossingPair, "consistent orientation is undefined for crossing pairs");
  return oriented_unchecked(u1, u2);
}

std::pair<LorentzVector, LorentzVector> normalize_consistent(const LorentzVector& w1,
                                                             const LorentzVector& w2) {
  if (pair_class(w1, w2) == PairClass::crossing)
    throw GeometryError(ErrorCode::CrossingPair, "cannot orient a crossing pair");
  const LorentzVector a = unit_spacelike(w1);
  const LorentzVector b = unit_spacelike(w2);
  // Exactly one of (a, b), (-a, -b) has negative product with the same sign
  // choice; among the two candidates with a.b < 0 pick the consistent one.
  const double s = lorentz_dot(a, b) < 0.0 ? 1.0 : -1.0;
  const LorentzVector c1 = a, c2 = s * b;
  if (oriented_unchecked(c1, c2)) return {c1, c2};
  if (oriented_unchecked(-c1, -c2)) return {-c1, -c2};
  return orientation_slack(c1, c2) >= orientation_slack(-c1, -c2) ? std::pair{c1, c2}
                                                                   : std::pair{-c1, -c2};
}

QuadrantMembership in_stem_quadrant(const LorentzVector& u, const LorentzVector& x) {
  const NullFrame f = null_frame(u);
  const double xn = euclid_norm(x);
  if (xn == 0.0) return QuadrantMembership::outside;
  if (std::abs(lorentz_dot(x, u)) > kNullTolerance * xn * euclid_norm(u))
    return QuadrantMembership::outside;
  // x = a u- - b u+ ; x.u+ = a m and x.u- = -b m with m = u-.u+ < 0.
  const double m = lorentz_dot(f.minus, f.plus);
  const double a = lorentz_dot(x, f.plus) / m;
  const double b = -lorentz_dot(x, f.minus) / m;
  const double tol = kNullTolerance * xn;
  if (a < -tol || b < -tol) return QuadrantMembership::outside;
  if (std::abs(a) <= tol || std::abs(b) <= tol) return QuadrantMembership::edge;
  return QuadrantMembership::interior;
}

CrookedPlane::CrookedPlane(const AffinePoint& vertex, const LorentzVector& director)
    : vertex_(vertex), frame_(null_frame(director)) {}

CrookedPlane CrookedPlane::transformed(const Isometry& g) const {
  return {apply(g, vertex_), apply_linear(g, frame_.u)};
}

namespace {

struct PlaneCoords {
  double a, b;
  LorentzVector residual;
};

// Orthogonal (Euclidean) projection of x onto span(g1, g2).
PlaneCoords project(const LorentzVector& x, const LorentzVector& g1, const LorentzVector& g2) {
  const double g11 = euclid_dot(g1, g1), g12 = euclid_dot(g1, g2), g22 = euclid_dot(g2, g2);
  const double r1 = euclid_dot(x, g1), r2 = euclid_dot(x, g2);
  const double det = g11 * g22 - g12 * g12;
  const double a = (r1 * g22 - r2 * g12) / det;
  const double b = (g11 * r2 - g12 * r1) / det;
  return {a, b, x - a * g1 - b * g2};
}

double distance_to_ray(const LorentzVector& x, const LorentzVector& g) {
  const double t = std::max(0.0, euclid_dot(x, g) / euclid_dot(g, g));
  return euclid_norm(x - t * g);
}

double distance_to_line(const LorentzVector& x, const LorentzVector& g) {
  const double t = euclid_dot(x, g) / euclid_dot(g, g);
  return euclid_norm(x - t * g);
}

// Closed convex cone {a g1 + b g2 : a, b >= 0}.
double distance_to_quadrant(const LorentzVector& x, const LorentzVector& g1, const LorentzVector& g2) {
  const PlaneCoords pc = project(x, g1, g2);
  if (pc.a >= 0.0 && pc.b >= 0.0) return euclid_norm(pc.residual);
  return std::min(distance_to_ray(x, g1), distance_to_ray(x, g2));
}

// Closed half-plane {a g + b l : a >= 0}.
double distance_to_half_plane(const LorentzVector& x, const LorentzVector& g, const LorentzVector& l) {
  const PlaneCoords pc = project(x, g, l);
  if (pc.a >= 0.0) return euclid_norm(pc.residual);
  return distance_to_line(x, l);
}

}  // namespace

double distance_to_piece(const CrookedPlane& cp, const AffinePoint& q, CrookedPiece piece) {
  const LorentzVector x = q - cp.vertex();
  const NullFrame& f = cp.frame();
  switch (piece) {
    case CrookedPiece::stem:
      return std::min(distance_to_quadrant(x, f.minus, f.plus),
                      distance_to_quadrant(x, -f.minus, -f.plus));
    case CrookedPiece::wing_plus: return distance_to_half_plane(x, f.u, f.plus);
    case CrookedPiece::wing_minus: return distance_to_half_plane(x, -f.u, f.minus);
  }
  return std::numeric_limits<double>::infinity();
}

double distance_to_plane(const CrookedPlane& cp, const AffinePoint& q) {
  return std::min({distance_to_piece(cp, q, CrookedPiece::stem),
                   distance_to_piece(cp, q, CrookedPiece::wing_plus),
                   distance_to_piece(cp, q, CrookedPiece::wing_minus)});
}

bool contains_point(const CrookedPlane& cp, const AffinePoint& q, double tol) {
  return distance_to_plane(cp, q) <= tol;
}

DgTerms dg_terms(const CrookedPlane& cp1, const CrookedPlane& cp2) {
  if (pair_class(cp1.director(), cp2.director()) != PairClass::ultraparallel)
    throw GeometryError(ErrorCode::NotUltraparallel, "the Drumm-Goldman inequality needs ultraparallel directors");
  const auto [u1, u2] = normalize_consistent(cp1.director(), cp2.director());
  const LorentzVector d = cp2.vertex() - cp1.vertex();
  return {lorentz_dot(d, lorentz_cross(u1, u2)), std::abs(lorentz_dot(d, u1)) + std::abs(lorentz_dot(d, u2))};
}

double dg_margin(const CrookedPlane& cp1, const CrookedPlane& cp2) {
  const DgTerms t = dg_terms(cp1, cp2);
  return t.lhs - t.rhs;
}

bool dg_disjoint(const CrookedPlane& cp1, const CrookedPlane& cp2) {
  return dg_margin(cp1, cp2) > 0.0;
}

double cone_margin(const CrookedPlane& cp1, const CrookedPlane& cp2) {
  if (pair_class(cp1.director(), cp2.director()) == PairClass::crossing)
    throw GeometryError(ErrorCode::CrossingPair, "crossing directors never give disjoint crooked planes");
  const auto [v1, v2] = normalize_consistent(cp1.director(), cp2.director());
  // With u_t = -v1 and u_s = v2 the pair (-u_t, u_s) is consistently oriented.
  const NullFrame ft = null_frame(-v1);
  const NullFrame fs = null_frame(v2);
  const LorentzVector d = cp2.vertex() - cp1.vertex();
  double worst = std::min(det3(ft.minus, fs.plus, d), det3(ft.plus, fs.minus, d));
  if (euclid_norm(ft.minus - fs.minus) > kAsymptoticTolerance)
    worst = std::min(worst, det3(ft.minus, fs.minus, d));
  if (euclid_norm(ft.plus - fs.plus) > kAsymptoticTolerance)
    worst = std::min(worst, det3(ft.plus, fs.plus, d));
  return worst;
}

bool cone_disjoint(const CrookedPlane& cp1, const CrookedPlane& cp2) {
  return cone_margin(cp1, cp2) > 0.0;
}

}  // namespace crooked
