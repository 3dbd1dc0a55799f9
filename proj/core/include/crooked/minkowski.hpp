#pragma once

// Lorentzian linear and affine algebra on R^{2,1}: the scalar product
// x1*y1 + x2*y2 - x3*y3, causal classes, the Lorentzian cross product,
// null frames and affine isometries.

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

#include "crooked/error.hpp"

namespace crooked {

/// Band used for causal classification of floating inputs.
inline constexpr double kNullTolerance = 1e-9;
/// Tolerance for A^T J A = J and det A = 1.
inline constexpr double kOrthTolerance = 1e-9;

struct LorentzVector {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  constexpr double& operator[](std::size_t i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  constexpr LorentzVector operator-() const { return {-x1, -x2, -x3}; }
  constexpr LorentzVector& operator+=(const LorentzVector& o) {
    x1 += o.x1;
    x2 += o.x2;
    x3 += o.x3;
    return *this;
  }
  constexpr LorentzVector& operator-=(const LorentzVector& o) {
    x1 -= o.x1;
    x2 -= o.x2;
    x3 -= o.x3;
    return *this;
  }
  constexpr LorentzVector& operator*=(double s) {
    x1 *= s;
    x2 *= s;
    x3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const LorentzVector&, const LorentzVector&) = default;
};

constexpr LorentzVector operator+(LorentzVector a, const LorentzVector& b) { return a += b; }
constexpr LorentzVector operator-(LorentzVector a, const LorentzVector& b) { return a -= b; }
constexpr LorentzVector operator*(LorentzVector a, double s) { return a *= s; }
constexpr LorentzVector operator*(double s, LorentzVector a) { return a *= s; }
constexpr LorentzVector operator/(LorentzVector a, double s) { return a *= (1.0 / s); }

/// A point of the affine space E. Only point - point, point + vector and
/// point - vector are defined.
struct AffinePoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  constexpr double operator[](std::size_t i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  /// Position vector p - o.
  constexpr LorentzVector from_origin() const { return {x1, x2, x3}; }

  friend constexpr bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

inline constexpr AffinePoint kOrigin{0.0, 0.0, 0.0};

constexpr LorentzVector operator-(const AffinePoint& p, const AffinePoint& q) {
  return {p.x1 - q.x1, p.x2 - q.x2, p.x3 - q.x3};
}
constexpr AffinePoint operator+(const AffinePoint& p, const LorentzVector& v) {
  return {p.x1 + v.x1, p.x2 + v.x2, p.x3 + v.x3};
}
constexpr AffinePoint operator-(const AffinePoint& p, const LorentzVector& v) {
  return {p.x1 - v.x1, p.x2 - v.x2, p.x3 - v.x3};
}

std::ostream& operator<<(std::ostream& os, const LorentzVector& v);
std::ostream& operator<<(std::ostream& os, const AffinePoint& p);

constexpr double lorentz_dot(const LorentzVector& u, const LorentzVector& v) {
  return u.x1 * v.x1 + u.x2 * v.x2 - u.x3 * v.x3;
}

/// Plain Euclidean helpers; used for scale estimates and geometric distances.
constexpr double euclid_dot(const LorentzVector& u, const LorentzVector& v) {
  return u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3;
}
inline double euclid_norm(const LorentzVector& v) { return std::sqrt(euclid_dot(v, v)); }
constexpr LorentzVector euclid_cross(const LorentzVector& u, const LorentzVector& v) {
  return {u.x2 * v.x3 - u.x3 * v.x2, u.x3 * v.x1 - u.x1 * v.x3, u.x1 * v.x2 - u.x2 * v.x1};
}

/// det[u v w] with u, v, w as columns.
constexpr double det3(const LorentzVector& u, const LorentzVector& v, const LorentzVector& w) {
  return euclid_dot(euclid_cross(u, v), w);
}

/// The unique vector with lorentz_dot(lorentz_cross(u, v), w) == det[u v w].
constexpr LorentzVector lorentz_cross(const LorentzVector& u, const LorentzVector& v) {
  const LorentzVector e = euclid_cross(u, v);
  return {e.x1, e.x2, -e.x3};
}

enum class CausalKind { zero, timelike, null, spacelike };

struct CausalClass {
  CausalKind kind = CausalKind::zero;
  bool unit = false;  // spacelike with v.v == 1 within the null band

  friend constexpr bool operator==(const CausalClass&, const CausalClass&) = default;
};

/// The null band is relative: |v.v| <= eps * |v|^2 (Euclidean) counts as null.
CausalClass causal_class(const LorentzVector& v, double eps = kNullTolerance);

inline bool is_spacelike(const LorentzVector& v) {
  return causal_class(v).kind == CausalKind::spacelike;
}

/// v / sqrt(v.v) for spacelike v.
LorentzVector unit_spacelike(const LorentzVector& v);

/// Null frame (u, u-, u+) attached to a spacelike u: u+- null, orthogonal to u,
/// third coordinate 1, det[u u- u+] > 0.
struct NullFrame {
  LorentzVector u;
  LorentzVector minus;
  LorentzVector plus;
};

/// Throws GeometryError(NotSpacelike).
NullFrame null_frame(const LorentzVector& u);

/// Checks null_frame(-u) = (-u, u+, u-) up to `tol`.
bool negate_frame_law(const LorentzVector& u, double tol = 1e-12);

/// Row-major 3x3 matrix.
class Mat3 {
 public:
  constexpr Mat3() = default;
  constexpr explicit Mat3(const std::array<double, 9>& rows) : m_(rows) {}

  static constexpr Mat3 identity() { return Mat3({1, 0, 0, 0, 1, 0, 0, 0, 1}); }
  static constexpr Mat3 lorentz_metric() { return Mat3({1, 0, 0, 0, 1, 0, 0, 0, -1}); }
  static Mat3 from_columns(const LorentzVector& c0, const LorentzVector& c1,
                           const LorentzVector& c2);

  constexpr double operator()(std::size_t r, std::size_t c) const { return m_[3 * r + c]; }
  constexpr double& operator()(std::size_t r, std::size_t c) { return m_[3 * r + c]; }

  LorentzVector column(std::size_t c) const { return {m_[c], m_[3 + c], m_[6 + c]}; }

  Mat3 transpose() const;
  double determinant() const;
  double trace() const { return m_[0] + m_[4] + m_[8]; }
  /// Throws GeometryError(InvalidParams) when singular.
  Mat3 inverse() const;
  double frobenius_norm() const;

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend LorentzVector operator*(const Mat3& a, const LorentzVector& v);
  friend Mat3 operator-(const Mat3& a, const Mat3& b);
  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;

  const std::array<double, 9>& data() const { return m_; }

 private:
  std::array<double, 9> m_{};
};

/// max |(A^T J A - J)_ij|, normalised by max(1, |A|_F^2).
double lorentz_orthogonality_defect(const Mat3& a);

/// J A^T J; equals A^{-1} for Lorentz-orthogonal A.
Mat3 lorentz_inverse(const Mat3& a);

enum class LinearClass { identity, hyperbolic, parabolic, elliptic };

/// Hyperbolic: three distinct real eigenvalues; parabolic: 1 is the only
/// eigenvalue and A != I; identity separately; elliptic otherwise. Eigenvalues
/// come from the characteristic polynomial deflated by the eigenvalue 1.
/// Throws GeometryError(NotLorentzOrthogonal).
LinearClass linear_class(const Mat3& a);

std::string_view to_string(LinearClass c);
std::string_view to_string(CausalKind k);

/// Orientation-preserving affine isometry x -> A x + v.
class Isometry {
 public:
  Isometry() = default;
  /// Validates A^T J A = J and det A = 1 within kOrthTolerance.
  Isometry(const Mat3& linear, const LorentzVector& translation);

  static Isometry identity() { return {}; }
  static Isometry translation(const LorentzVector& v) { return Isometry(Mat3::identity(), v); }

  const Mat3& linear() const { return linear_; }
  const LorentzVector& translation() const { return translation_; }

  Isometry inverse() const;

  friend bool operator==(const Isometry&, const Isometry&) = default;

 private:
  Mat3 linear_ = Mat3::identity();
  LorentzVector translation_{};
};

AffinePoint apply(const Isometry& g, const AffinePoint& p);
LorentzVector apply_linear(const Isometry& g, const LorentzVector& v);
/// compose(a, b) acts as a after b.
Isometry compose(const Isometry& a, const Isometry& b);

/// Boost of rapidity `s` in the x1 x3 plane (fixes (0,1,0)).
Mat3 boost_x1x3(double s);
/// Boost of rapidity `s` in the x2 x3 plane (fixes (1,0,0)).
Mat3 boost_x2x3(double s);
/// Rotation by `theta` in the x1 x2 plane (fixes (0,0,1)).
Mat3 rotation_x1x2(double theta);

}  // namespace crooked
