#include "crooked/minkowski.hpp"

#include <algorithm>
#include <ostream>

namespace crooked {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSpacelike: return "NotSpacelike";
    case ErrorCode::NotLorentzOrthogonal: return "NotLorentzOrthogonal";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::CrossingPair: return "CrossingPair";
    case ErrorCode::NotUltraparallel: return "NotUltraparallel";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::BadRegionParams: return "BadRegionParams";
    case ErrorCode::CrossingDirectors: return "CrossingDirectors";
    case ErrorCode::ZeroDerivative: return "ZeroDerivative";
    case ErrorCode::InvalidParams: return "InvalidParams";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const LorentzVector& v) {
  return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ')';
}

std::ostream& operator<<(std::ostream& os, const AffinePoint& p) {
  return os << '[' << p.x1 << ", " << p.x2 << ", " << p.x3 << ']';
}

CausalClass causal_class(const LorentzVector& v, double eps) {
  const double n2 = euclid_dot(v, v);
  if (n2 == 0.0) return {CausalKind::zero, false};
  const double q = lorentz_dot(v, v);
  if (std::abs(q) <= eps * n2) return {CausalKind::null, false};
  if (q < 0.0) return {CausalKind::timelike, false};
  return {CausalKind::spacelike, std::abs(q - 1.0) <= eps};
}

LorentzVector unit_spacelike(const LorentzVector& v) {
  if (!is_spacelike(v)) throw GeometryError(ErrorCode::NotSpacelike, "cannot normalise");
  return v / std::sqrt(lorentz_dot(v, v));
}

NullFrame null_frame(const LorentzVector& u) {
  if (!is_spacelike(u)) throw GeometryError(ErrorCode::NotSpacelike, "null frame needs a spacelike vector");
  // Null vectors (y1, y2, 1) of u-perp: y1 u1 + y2 u2 = u3 and y1^2 + y2^2 = 1.
  // u spacelike gives u1^2 + u2^2 > u3^2, so the line meets the unit circle twice.
  const double r2 = u.x1 * u.x1 + u.x2 * u.x2;
  const double r = std::sqrt(r2);
  const double c = u.x3 / r2;
  const double h = std::sqrt(std::max(0.0, 1.0 - (u.x3 * u.x3) / r2));
  const LorentzVector centre{c * u.x1, c * u.x2, 1.0};
  const LorentzVector along{-u.x2 / r * h, u.x1 / r * h, 0.0};
  LorentzVector a = centre + along;
  LorentzVector b = centre - along;
  if (det3(u, a, b) < 0.0) std::swap(a, b);
  return {u, a, b};
}

bool negate_frame_law(const LorentzVector& u, double tol) {
  const NullFrame f = null_frame(u);
  const NullFrame g = null_frame(-u);
  return euclid_norm(g.minus - f.plus) <= tol && euclid_norm(g.plus - f.minus) <= tol;
}

Mat3 Mat3::from_columns(const LorentzVector& c0, const LorentzVector& c1,
                        const LorentzVector& c2) {
  return Mat3({c0.x1, c1.x1, c2.x1, c0.x2, c1.x2, c2.x2, c0.x3, c1.x3, c2.x3});
}

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double Mat3::determinant() const {
  return det3(column(0), column(1), column(2));
}

Mat3 Mat3::inverse() const {
  const double d = determinant();
  if (d == 0.0 || !std::isfinite(d)) throw GeometryError(ErrorCode::InvalidParams, "singular matrix");
  const LorentzVector c0 = column(0), c1 = column(1), c2 = column(2);
  // Rows of the inverse are the cross products of column pairs.
  const LorentzVector r0 = euclid_cross(c1, c2) / d;
  const LorentzVector r1 = euclid_cross(c2, c0) / d;
  const LorentzVector r2 = euclid_cross(c0, c1) / d;
  return Mat3({r0.x1, r0.x2, r0.x3, r1.x1, r1.x2, r1.x3, r2.x1, r2.x2, r2.x3});
}

double Mat3::frobenius_norm() const {
  double s = 0.0;
  for (double x : m_) s += x * x;
  return std::sqrt(s);
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

LorentzVector operator*(const Mat3& a, const LorentzVector& v) {
  return {a(0, 0) * v.x1 + a(0, 1) * v.x2 + a(0, 2) * v.x3,
          a(1, 0) * v.x1 + a(1, 1) * v.x2 + a(1, 2) * v.x3,
          a(2, 0) * v.x1 + a(2, 1) * v.x2 + a(2, 2) * v.x3};
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

double lorentz_orthogonality_defect(const Mat3& a) {
  const Mat3 j = Mat3::lorentz_metric();
  const Mat3 d = a.transpose() * j * a - j;
  double worst = 0.0;
  for (double x : d.data()) worst = std::max(worst, std::abs(x));
  const double n = a.frobenius_norm();
  return worst / std::max(1.0, n * n);
}

Mat3 lorentz_inverse(const Mat3& a) {
  const Mat3 j = Mat3::lorentz_metric();
  return j * a.transpose() * j;
}

LinearClass linear_class(const Mat3& a) {
  if (lorentz_orthogonality_defect(a) > kOrthTolerance)
    throw GeometryError(ErrorCode::NotLorentzOrthogonal, "A^T J A != J");
  const double scale = std::max(1.0, a.frobenius_norm() * a.frobenius_norm());
  const double det = a.determinant();
  if (std::abs(det - 1.0) > kOrthTolerance * scale)
    throw GeometryError(ErrorCode::NotLorentzOrthogonal, "det A != 1");

  // chi(x) = x^3 - c2 x^2 + c1 x - c0 with c0 = det = 1 has the root 1; the
  // remaining factor is x^2 - (c2 - 1) x + c0.
  const double c2 = a.trace();
  const double b = c2 - 1.0;
  const double disc = b * b - 4.0 * det;
  const double eps = kOrthTolerance * scale;
  if (disc > eps) return LinearClass::hyperbolic;
  if (disc < -eps) return LinearClass::elliptic;
  // Double root at b / 2 = +-1.
  if (b < 0.0) return LinearClass::elliptic;
  const Mat3 d = a - Mat3::identity();
  double worst = 0.0;
  for (double x : d.data()) worst = std::max(worst, std::abs(x));
  return worst <= eps ? LinearClass::identity : LinearClass::parabolic;
}

std::string_view to_string(LinearClass c) {
  switch (c) {
    case LinearClass::identity: return "identity";
    case LinearClass::hyperbolic: return "hyperbolic";
    case LinearClass::parabolic: return "parabolic";
    case LinearClass::elliptic: return "elliptic";
  }
  return "unknown";
}

std::string_view to_string(CausalKind k) {
  switch (k) {
    case CausalKind::zero: return "zero";
    case CausalKind::timelike: return "timelike";
    case CausalKind::null: return "null";
    case CausalKind::spacelike: return "spacelike";
  }
  return "unknown";
}

Isometry::Isometry(const Mat3& linear, const LorentzVector& translation)
    : linear_(linear), translation_(translation) {
  if (lorentz_orthogonality_defect(linear) > kOrthTolerance)
    throw GeometryError(ErrorCode::NotLorentzOrthogonal, "linear part does not preserve the scalar product");
  const double n = linear.frobenius_norm();
  if (std::abs(linear.determinant() - 1.0) > kOrthTolerance * std::max(1.0, n * n * n))
    throw GeometryError(ErrorCode::NotLorentzOrthogonal, "linear part must have determinant 1");
}

Isometry Isometry::inverse() const {
  const Mat3 inv = lorentz_inverse(linear_);
  return Isometry(inv, -(inv * translation_));
}

AffinePoint apply(const Isometry& g, const AffinePoint& p) {
  return kOrigin + (g.linear() * p.from_origin() + g.translation());
}

LorentzVector apply_linear(const Isometry& g, const LorentzVector& v) { return g.linear() * v; }

Isometry compose(const Isometry& a, const Isometry& b) {
  return Isometry(a.linear() * b.linear(), a.linear() * b.translation() + a.translation());
}

Mat3 boost_x1x3(double s) {
  const double c = std::cosh(s), h = std::sinh(s);
  return Mat3({c, 0, h, 0, 1, 0, h, 0, c});
}

Mat3 boost_x2x3(double s) {
  const double c = std::cosh(s), h = std::sinh(s);
  return Mat3({1, 0, 0, 0, c, h, 0, h, c});
}

Mat3 rotation_x1x2(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Mat3({c, -s, 0, s, c, 0, 0, 0, 1});
}

}  // namespace crooked
