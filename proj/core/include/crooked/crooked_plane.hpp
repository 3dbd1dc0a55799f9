#pragma once

#include <string_view>
#include <utility>

#include "crooked/minkowski.hpp"

namespace crooked {

enum class PairClass { crossing, ultraparallel, asymptotic };

std::string_view to_string(PairClass c);

/// Causal type of u1-perp ∩ u2-perp, i.e. of lorentz_cross(u1, u2): timelike
/// means crossing, spacelike ultraparallel, null asymptotic.
/// Throws NotSpacelike, DegeneratePair (parallel directors).
PairClass pair_class(const LorentzVector& u1, const LorentzVector& u2);

/// u1.u2 < 0 and u_i.u_j^{+-} <= 0 for i, j in {1, 2}.
/// Throws CrossingPair on a crossing pair.
bool consistently_oriented(const LorentzVector& u1, const LorentzVector& u2);

/// The unique unit-spacelike (u1, u2), u_i in R w_i, that is consistently
/// oriented. Throws CrossingPair, DegeneratePair.
std::pair<LorentzVector, LorentzVector> normalize_consistent(const LorentzVector& w1,
                                                             const LorentzVector& w2);

enum class QuadrantMembership { interior, edge, outside };

/// Membership of x in the stem quadrant V(u) = {a u- - b u+ : a, b >= 0} \ {0}.
QuadrantMembership in_stem_quadrant(const LorentzVector& u, const LorentzVector& x);

/// Crooked plane C(p, u). The null frame of the director is cached.
class CrookedPlane {
 public:
  /// Throws NotSpacelike.
  CrookedPlane(const AffinePoint& vertex, const LorentzVector& director);

  const AffinePoint& vertex() const { return vertex_; }
  const LorentzVector& director() const { return frame_.u; }
  const NullFrame& frame() const { return frame_; }

  /// The same point set with the director negated.
  CrookedPlane flipped() const { return {vertex_, -frame_.u}; }

  /// Image under an isometry: vertex by the affine action, director by the
  /// linear part.
  CrookedPlane transformed(const Isometry& g) const;

 private:
  AffinePoint vertex_;
  NullFrame frame_;
};

enum class CrookedPiece { stem, wing_plus, wing_minus };

std::string_view to_string(CrookedPiece piece);

/// Euclidean distance from q to the stem, to wing+ = {a u + b u+ : a >= 0}
/// and to wing- = {-a u + b u- : a >= 0}, all translated to the vertex.
double distance_to_piece(const CrookedPlane& cp, const AffinePoint& q, CrookedPiece piece);
double distance_to_plane(const CrookedPlane& cp, const AffinePoint& q);

bool contains_point(const CrookedPlane& cp, const AffinePoint& q, double tol);

struct DgTerms {
  double lhs = 0.0;  // (p2 - p1) . (u1 x u2)
  double rhs = 0.0;  // |(p2 - p1) . u1| + |(p2 - p1) . u2|
};

/// Both sides of the Drumm-Goldman inequality for the consistently oriented
/// unit directors. Throws NotUltraparallel.
DgTerms dg_terms(const CrookedPlane& cp1, const CrookedPlane& cp2);

/// LHS - RHS of the Drumm-Goldman inequality after normalising the directors
/// to the consistently oriented unit pair. Throws NotUltraparallel.
double dg_margin(const CrookedPlane& cp1, const CrookedPlane& cp2);
/// Strict: equality counts as not disjoint.
bool dg_disjoint(const CrookedPlane& cp1, const CrookedPlane& cp2);

/// Smallest of the (three or four) halfspace values that decide whether
/// p2 - p1 lies in the open cone V(u2) + V(u1) for the orientation in which
/// (-u1, u2) is consistent. Throws CrossingPair.
double cone_margin(const CrookedPlane& cp1, const CrookedPlane& cp2);
bool cone_disjoint(const CrookedPlane& cp1, const CrookedPlane& cp2);

/// Null vectors with third coordinate 1 closer than this are treated as equal
/// (the asymptotic case of the cone criterion).
inline constexpr double kAsymptoticTolerance = 1e-9;

}  // namespace crooked
