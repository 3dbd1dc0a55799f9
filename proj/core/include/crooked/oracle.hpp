#pragma once

// Brute-force intersection oracle: crooked planes clipped to a coordinate box,
// meshed with graded cells, and tested triangle against triangle.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "crooked/crooked_plane.hpp"

namespace crooked {

/// The four flat parts of a crooked plane: the stem splits into the quadrant
/// spanned by (u-, u+) and its negative.
enum class PlanePart : std::uint8_t { stem_positive, stem_negative, wing_plus, wing_minus };

CrookedPiece piece_of(PlanePart part);

struct TriangleMesh {
  std::vector<AffinePoint> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::vector<CrookedPiece> pieces;  // per triangle
  std::vector<PlanePart> parts;      // per triangle
  std::vector<std::uint32_t> cells;  // per triangle, row-major cell index within its part

  std::size_t size() const { return triangles.size(); }
  std::array<AffinePoint, 3> triangle(std::size_t i) const {
    return {vertices[triangles[i][0]], vertices[triangles[i][1]], vertices[triangles[i][2]]};
  }
};

/// Each part is clipped to the box [-extent, extent]^3 around the vertex and
/// cut into n x n parameter cells, geometrically graded (ratio 1.5) towards
/// the vertex; clipped cells are fan-triangulated and slivers below 1e-12 area
/// dropped. Throws InvalidParams unless extent > 0 and n >= 2.
TriangleMesh mesh_crooked_plane(const CrookedPlane& cp, double extent, int n);

/// A point of t1 that lies within eps of t2, if the triangles meet.
/// Coplanar (within eps) overlapping triangles count as meeting.
std::optional<AffinePoint> triangle_intersection(const std::array<AffinePoint, 3>& t1,
                                                 const std::array<AffinePoint, 3>& t2, double eps);

struct OracleResult {
  bool intersecting = false;
  AffinePoint witness;
  CrookedPiece piece1 = CrookedPiece::stem;
  CrookedPiece piece2 = CrookedPiece::stem;
  double extent = 0.0;
  std::size_t triangle_tests = 0;
};

/// Exhaustive triangle-pair search between the two meshes. A hit is reported
/// only after its witness is confirmed on both planes within 10 eps; among
/// hits the one with the smallest (part1, cell1, triangle1, part2, cell2,
/// triangle2) key wins, so the result does not depend on scheduling.
/// "No intersection" only speaks for the box. Throws InvalidParams.
OracleResult oracle_disjoint(const CrookedPlane& cp1, const CrookedPlane& cp2, double extent = 20.0,
                             int n = 64, double eps = 1e-9);

/// Repeats oracle_disjoint with the extent doubled until it finds an
/// intersection or the extent would exceed max_extent.
OracleResult oracle_with_doubling(const CrookedPlane& cp1, const CrookedPlane& cp2, double extent,
                                  double max_extent, int n = 64, double eps = 1e-9);

}  // namespace crooked
