#include "crooked/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "crooked/parallel.hpp"

namespace crooked {

CrookedPiece piece_of(PlanePart part) {
  switch (part) {
    case PlanePart::stem_positive:
    case PlanePart::stem_negative: return CrookedPiece::stem;
    case PlanePart::wing_plus: return CrookedPiece::wing_plus;
    case PlanePart::wing_minus: return CrookedPiece::wing_minus;
  }
  return CrookedPiece::stem;
}

namespace {

constexpr std::array<PlanePart, 4> kParts{PlanePart::stem_positive, PlanePart::stem_negative,
                                          PlanePart::wing_plus, PlanePart::wing_minus};

struct P2 {
  double a, b;
};

// c0 a + c1 b <= c2
struct HalfPlane {
  double c0, c1, c2;
  double eval(const P2& p) const { return c0 * p.a + c1 * p.b - c2; }
};

using Poly2 = std::vector<P2>;

Poly2 clip(const Poly2& poly, const HalfPlane& h) {
  Poly2 out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const P2& p = poly[i];
    const P2& q = poly[(i + 1) % n];
    const double fp = h.eval(p), fq = h.eval(q);
    if (fp <= 0.0) out.push_back(p);
    if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
      const double w = fp / (fp - fq);
      out.push_back({p.a + w * (q.a - p.a), p.b + w * (q.b - p.b)});
    }
  }
  return out;
}

Poly2 clip_all(Poly2 poly, const std::vector<HalfPlane>& hs) {
  for (const auto& h : hs) {
    if (poly.empty()) break;
    poly = clip(poly, h);
  }
  return poly;
}

// A flat part: vertex + a g1 + b g2 over a convex parameter polygon.
struct Part {
  PlanePart tag;
  AffinePoint origin;
  LorentzVector g1, g2;
  std::vector<HalfPlane> constraints;
  Poly2 polygon;
  LorentzVector normal;  // unit Euclidean normal

  AffinePoint at(const P2& p) const { return origin + (p.a * g1 + p.b * g2); }
};

Part make_part(const CrookedPlane& cp, PlanePart tag, double extent) {
  const NullFrame& f = cp.frame();
  Part part;
  part.tag = tag;
  part.origin = cp.vertex();
  switch (tag) {
    case PlanePart::stem_positive:
      part.g1 = f.minus;
      part.g2 = f.plus;
      part.constraints = {{-1, 0, 0}, {0, -1, 0}};
      break;
    case PlanePart::stem_negative:
      part.g1 = -f.minus;
      part.g2 = -f.plus;
      part.constraints = {{-1, 0, 0}, {0, -1, 0}};
      break;
    case PlanePart::wing_plus:
      part.g1 = f.u;
      part.g2 = f.plus;
      part.constraints = {{-1, 0, 0}};
      break;
    case PlanePart::wing_minus:
      part.g1 = -f.u;
      part.g2 = f.minus;
      part.constraints = {{-1, 0, 0}};
      break;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    part.constraints.push_back({part.g1[i], part.g2[i], extent});
    part.constraints.push_back({-part.g1[i], -part.g2[i], extent});
  }
  // Any parameter in the box has |(a, b)| <= sqrt(3) extent / sigma_min.
  const double g11 = euclid_dot(part.g1, part.g1), g12 = euclid_dot(part.g1, part.g2),
               g22 = euclid_dot(part.g2, part.g2);
  const double tr = g11 + g22, det = g11 * g22 - g12 * g12;
  const double lmin = det / (0.5 * tr + std::sqrt(std::max(0.0, 0.25 * tr * tr - det)));
  const double r = 2.0 * std::sqrt(3.0) * extent / std::sqrt(lmin);
  part.polygon = clip_all({{-r, -r}, {r, -r}, {r, r}, {-r, r}}, part.constraints);
  const LorentzVector nrm = euclid_cross(part.g1, part.g2);
  part.normal = nrm / euclid_norm(nrm);
  return part;
}

// Cut points of [lo, hi] into m cells, widths growing by 1.5 away from 0 and
// capped after a few steps.
std::vector<double> graded_axis(double lo, double hi, int m) {
  const auto one_side = [](double len, int cells) {
    const int cap = std::min(cells / 4, 6);
    std::vector<double> w(static_cast<std::size_t>(cells));
    double total = 0.0;
    for (int i = 0; i < cells; ++i) total += (w[static_cast<std::size_t>(i)] = std::pow(1.5, std::min(i, cap)));
    std::vector<double> cuts{0.0};
    double acc = 0.0;
    for (double x : w) cuts.push_back(len * ((acc += x) / total));
    cuts.back() = len;
    return cuts;
  };
  std::vector<double> out;
  if (lo >= 0.0 || hi <= 0.0) {
    // 0 sits at an end (or outside): grade from the end nearest to it.
    const bool from_lo = std::abs(lo) <= std::abs(hi);
    for (double c : one_side(hi - lo, m)) out.push_back(from_lo ? lo + c : hi - c);
    if (!from_lo) std::reverse(out.begin(), out.end());
    return out;
  }
  int mneg = static_cast<int>(std::lround(m * (-lo) / (hi - lo)));
  mneg = std::clamp(mneg, 1, m - 1);
  const auto neg = one_side(-lo, mneg);
  const auto pos = one_side(hi, m - mneg);
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) out.push_back(-*it);
  for (std::size_t i = 1; i < pos.size(); ++i) out.push_back(pos[i]);
  out.front() = lo;
  out.back() = hi;
  return out;
}

double tri_area(const AffinePoint& a, const AffinePoint& b, const AffinePoint& c) {
  return 0.5 * euclid_norm(euclid_cross(b - a, c - a));
}

void mesh_part(const Part& part, int n, TriangleMesh& mesh) {
  if (part.polygon.size() < 3) return;
  double amin = std::numeric_limits<double>::infinity(), amax = -amin, bmin = amin, bmax = -amin;
  for (const P2& p : part.polygon) {
    amin = std::min(amin, p.a);
    amax = std::max(amax, p.a);
    bmin = std::min(bmin, p.b);
    bmax = std::max(bmax, p.b);
  }
  const auto acuts = graded_axis(amin, amax, n);
  const auto bcuts = graded_axis(bmin, bmax, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
      const Poly2 cell = clip_all({{acuts[ii], bcuts[jj]}, {acuts[ii + 1], bcuts[jj]},
                                   {acuts[ii + 1], bcuts[jj + 1]}, {acuts[ii], bcuts[jj + 1]}},
                                  part.constraints);
      if (cell.size() < 3) continue;
      const std::size_t base = mesh.vertices.size();
      for (const P2& p : cell) mesh.vertices.push_back(part.at(p));
      for (std::size_t k = 1; k + 1 < cell.size(); ++k) {
        if (tri_area(mesh.vertices[base], mesh.vertices[base + k], mesh.vertices[base + k + 1]) < 1e-12) continue;
        mesh.triangles.push_back({base, base + k, base + k + 1});
        mesh.pieces.push_back(piece_of(part.tag));
        mesh.parts.push_back(part.tag);
        mesh.cells.push_back(static_cast<std::uint32_t>(i * n + j));
      }
    }
}

void check_params(double extent, int n) {
  if (!(extent > 0.0) || !std::isfinite(extent) || n < 2)
    throw GeometryError(ErrorCode::InvalidParams, "meshing needs extent > 0 and n >= 2");
}

}  // namespace

TriangleMesh mesh_crooked_plane(const CrookedPlane& cp, double extent, int n) {
  check_params(extent, n);
  TriangleMesh mesh;
  for (PlanePart tag : kParts) mesh_part(make_part(cp, tag, extent), n, mesh);
  return mesh;
}

namespace {

using Tri = std::array<AffinePoint, 3>;

LorentzVector unit_normal(const Tri& t) {
  const LorentzVector n = euclid_cross(t[1] - t[0], t[2] - t[0]);
  const double len = euclid_norm(n);
  return len > 0.0 ? n / len : LorentzVector{};
}

double signed_distance(const LorentzVector& n, const AffinePoint& on_plane, const AffinePoint& p) {
  return euclid_dot(n, p - on_plane);
}

// Segment where triangle t (distances d to the other plane, already snapped)
// meets that plane.
std::vector<AffinePoint> plane_section(const Tri& t, const std::array<double, 3>& d) {
  std::vector<AffinePoint> pts;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    if (d[i] == 0.0) pts.push_back(t[i]);
    if ((d[i] < 0.0 && d[j] > 0.0) || (d[i] > 0.0 && d[j] < 0.0)) {
      const double w = d[i] / (d[i] - d[j]);
      pts.push_back(t[i] + w * (t[j] - t[i]));
    }
  }
  return pts;
}

struct Proj2 {
  std::size_t i0, i1;
  double x(const AffinePoint& p) const { return p[i0]; }
  double y(const AffinePoint& p) const { return p[i1]; }
};

Proj2 projection_for(const LorentzVector& n) {
  const double ax = std::abs(n.x1), ay = std::abs(n.x2), az = std::abs(n.x3);
  if (ax >= ay && ax >= az) return {1, 2};
  if (ay >= az) return {0, 2};
  return {0, 1};
}

double orient2(double ax, double ay, double bx, double by, double cx, double cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

// Barycentric coordinates of p in t (2D projection); nullopt when outside by
// more than the tolerance.
std::optional<std::array<double, 3>> barycentric_inside(const Tri& t, const AffinePoint& p, const Proj2& pr,
                                                        double eps) {
  const double x0 = pr.x(t[0]), y0 = pr.y(t[0]), x1 = pr.x(t[1]), y1 = pr.y(t[1]), x2 = pr.x(t[2]),
               y2 = pr.y(t[2]);
  const double area = orient2(x0, y0, x1, y1, x2, y2);
  if (area == 0.0) return std::nullopt;
  const double px = pr.x(p), py = pr.y(p);
  const std::array<double, 3> w{orient2(x1, y1, x2, y2, px, py) / area, orient2(x2, y2, x0, y0, px, py) / area,
                                orient2(x0, y0, x1, y1, px, py) / area};
  // w_i |area| / |edge_i| is the distance to edge i.
  const double len = std::max({std::hypot(x1 - x0, y1 - y0), std::hypot(x2 - x1, y2 - y1), std::hypot(x0 - x2, y0 - y2)});
  const double slack = eps * len / std::abs(area);
  for (double wi : w)
    if (wi < -slack) return std::nullopt;
  return w;
}

std::optional<AffinePoint> coplanar_intersection(const Tri& t1, const Tri& t2, const LorentzVector& n1, double eps) {
  const Proj2 pr = projection_for(n1);
  for (const auto& p : t1)
    if (barycentric_inside(t2, p, pr, eps)) return p;
  for (const auto& q : t2)
    if (auto w = barycentric_inside(t1, q, pr, eps))
      return kOrigin + ((*w)[0] * t1[0].from_origin() + (*w)[1] * t1[1].from_origin() + (*w)[2] * t1[2].from_origin());
  for (std::size_t i = 0; i < 3; ++i) {
    const AffinePoint& a = t1[i];
    const AffinePoint& b = t1[(i + 1) % 3];
    for (std::size_t j = 0; j < 3; ++j) {
      const AffinePoint& c = t2[j];
      const AffinePoint& d = t2[(j + 1) % 3];
      const double d1 = orient2(pr.x(c), pr.y(c), pr.x(d), pr.y(d), pr.x(a), pr.y(a));
      const double d2 = orient2(pr.x(c), pr.y(c), pr.x(d), pr.y(d), pr.x(b), pr.y(b));
      const double d3 = orient2(pr.x(a), pr.y(a), pr.x(b), pr.y(b), pr.x(c), pr.y(c));
      const double d4 = orient2(pr.x(a), pr.y(a), pr.x(b), pr.y(b), pr.x(d), pr.y(d));
      if (((d1 < 0.0 && d2 > 0.0) || (d1 > 0.0 && d2 < 0.0)) && ((d3 < 0.0 && d4 > 0.0) || (d3 > 0.0 && d4 < 0.0))) {
        const double w = d1 / (d1 - d2);
        return a + w * (b - a);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<AffinePoint> triangle_intersection(const Tri& t1, const Tri& t2, double eps) {
  const LorentzVector n1 = unit_normal(t1), n2 = unit_normal(t2);
  if (n1 == LorentzVector{} || n2 == LorentzVector{}) return std::nullopt;

  std::array<double, 3> d1{}, d2{};
  for (std::size_t i = 0; i < 3; ++i) {
    d1[i] = signed_distance(n2, t2[0], t1[i]);
    d2[i] = signed_distance(n1, t1[0], t2[i]);
  }
  const auto snap = [eps](std::array<double, 3>& d) {
    for (double& x : d)
      if (std::abs(x) <= eps) x = 0.0;
  };
  snap(d1);
  snap(d2);
  const auto one_side = [](const std::array<double, 3>& d) {
    return (d[0] > 0.0 && d[1] > 0.0 && d[2] > 0.0) || (d[0] < 0.0 && d[1] < 0.0 && d[2] < 0.0);
  };
  if (one_side(d1) || one_side(d2)) return std::nullopt;

  const bool coplanar1 = d1[0] == 0.0 && d1[1] == 0.0 && d1[2] == 0.0;
  const bool coplanar2 = d2[0] == 0.0 && d2[1] == 0.0 && d2[2] == 0.0;
  LorentzVector dir = euclid_cross(n1, n2);
  const double dl = euclid_norm(dir);
  if (coplanar1 || coplanar2 || dl < 1e-12) return coplanar_intersection(t1, t2, n1, eps);
  dir = dir / dl;

  const auto s1 = plane_section(t1, d1);
  const auto s2 = plane_section(t2, d2);
  if (s1.empty() || s2.empty()) return std::nullopt;
  const auto range = [&](const std::vector<AffinePoint>& pts, std::size_t& ilo, std::size_t& ihi) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double v = euclid_dot(dir, pts[i].from_origin());
      if (v < lo) {
        lo = v;
        ilo = i;
      }
      if (v > hi) {
        hi = v;
        ihi = i;
      }
    }
    return std::pair{lo, hi};
  };
  std::size_t a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
  const auto [lo1, hi1] = range(s1, a_lo, a_hi);
  const auto [lo2, hi2] = range(s2, b_lo, b_hi);
  if (lo1 > hi2 + eps || lo2 > hi1 + eps) return std::nullopt;
  // Point of t1's section at the start of the overlap.
  const double target = std::clamp(std::max(lo1, lo2), lo1, hi1);
  if (hi1 - lo1 <= 0.0) return s1[a_lo];
  const double w = (target - lo1) / (hi1 - lo1);
  return s1[a_lo] + w * (s1[a_hi] - s1[a_lo]);
}

namespace {

struct Box {
  double lo[3], hi[3];
  bool overlaps(const Box& o, double eps) const {
    for (int i = 0; i < 3; ++i)
      if (lo[i] > o.hi[i] + eps || o.lo[i] > hi[i] + eps) return false;
    return true;
  }
};

Box box_of(const Tri& t) {
  Box b{};
  for (int i = 0; i < 3; ++i) {
    b.lo[i] = std::min({t[0][static_cast<std::size_t>(i)], t[1][static_cast<std::size_t>(i)], t[2][static_cast<std::size_t>(i)]});
    b.hi[i] = std::max({t[0][static_cast<std::size_t>(i)], t[1][static_cast<std::size_t>(i)], t[2][static_cast<std::size_t>(i)]});
  }
  return b;
}

std::vector<Tri> fan(const Part& part) {
  std::vector<Tri> out;
  for (std::size_t k = 1; k + 1 < part.polygon.size(); ++k)
    out.push_back({part.at(part.polygon[0]), part.at(part.polygon[k]), part.at(part.polygon[k + 1])});
  return out;
}

bool parts_meet(const Part& p, const Part& q, double eps) {
  const auto tp = fan(p), tq = fan(q);
  for (const auto& a : tp)
    for (const auto& b : tq)
      if (triangle_intersection(a, b, eps)) return true;
  return false;
}

struct Candidate {
  Tri tri;
  Box box;
  std::size_t index;  // position in the part's key order
};

// Triangles of `mesh` in part `tag` that can touch the plane of `other`.
std::vector<Candidate> candidates(const TriangleMesh& mesh, PlanePart tag, const std::vector<const Part*>& others,
                                  double eps) {
  std::vector<Candidate> out;
  std::size_t order = 0;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    if (mesh.parts[i] != tag) continue;
    const Tri t = mesh.triangle(i);
    bool keep = false;
    for (const Part* o : others) {
      const double d0 = signed_distance(o->normal, o->origin, t[0]);
      const double d1 = signed_distance(o->normal, o->origin, t[1]);
      const double d2 = signed_distance(o->normal, o->origin, t[2]);
      if ((d0 > eps && d1 > eps && d2 > eps) || (d0 < -eps && d1 < -eps && d2 < -eps)) continue;
      keep = true;
      break;
    }
    if (keep) out.push_back({t, box_of(t), order});
    ++order;
  }
  return out;
}

struct Hit {
  std::size_t tri1 = std::numeric_limits<std::size_t>::max();
  std::size_t part2 = 0;
  std::size_t tri2 = 0;
  AffinePoint witness;
};

}  // namespace

OracleResult oracle_disjoint(const CrookedPlane& cp1, const CrookedPlane& cp2, double extent, int n, double eps) {
  check_params(extent, n);
  OracleResult result;
  result.extent = extent;

  std::array<Part, 4> parts1, parts2;
  for (std::size_t i = 0; i < 4; ++i) {
    parts1[i] = make_part(cp1, kParts[i], extent);
    parts2[i] = make_part(cp2, kParts[i], extent);
  }

  std::optional<TriangleMesh> mesh1, mesh2;
  const double accept = 10.0 * eps;
  for (std::size_t p = 0; p < 4; ++p) {
    if (parts1[p].polygon.size() < 3) continue;
    std::vector<std::size_t> partners;
    for (std::size_t q = 0; q < 4; ++q)
      if (parts2[q].polygon.size() >= 3 && parts_meet(parts1[p], parts2[q], eps)) partners.push_back(q);
    if (partners.empty()) continue;

    if (!mesh1) mesh1 = mesh_crooked_plane(cp1, extent, n);
    if (!mesh2) mesh2 = mesh_crooked_plane(cp2, extent, n);
    std::vector<const Part*> others;
    for (std::size_t q : partners) others.push_back(&parts2[q]);
    const auto c1 = candidates(*mesh1, kParts[p], others, eps);
    std::vector<std::vector<Candidate>> c2;
    for (std::size_t q : partners) c2.push_back(candidates(*mesh2, kParts[q], {&parts1[p]}, eps));

    // Blocks of part-1 triangles in key order; the first block with a
    // confirmed hit decides, and within it the smallest key wins.
    constexpr std::size_t kBlock = 256;
    for (std::size_t start = 0; start < c1.size(); start += kBlock) {
      const std::size_t end = std::min(c1.size(), start + kBlock);
      std::vector<Hit> hits(end - start);
      std::vector<std::size_t> tests(end - start, 0);
      parallel_for(end - start, [&](std::size_t k) {
        const Candidate& a = c1[start + k];
        for (std::size_t qi = 0; qi < partners.size(); ++qi) {
          for (const Candidate& b : c2[qi]) {
            if (!a.box.overlaps(b.box, eps)) continue;
            ++tests[k];
            const auto w = triangle_intersection(a.tri, b.tri, eps);
            if (!w) continue;
            if (!contains_point(cp1, *w, accept) || !contains_point(cp2, *w, accept)) continue;
            hits[k] = {a.index, qi, b.index, *w};
            return;
          }
        }
      }, 8);
      for (std::size_t t : tests) result.triangle_tests += t;
      for (const Hit& h : hits) {
        if (h.tri1 == std::numeric_limits<std::size_t>::max()) continue;
        result.intersecting = true;
        result.witness = h.witness;
        result.piece1 = piece_of(kParts[p]);
        result.piece2 = piece_of(kParts[partners[h.part2]]);
        return result;
      }
    }
  }
  return result;
}

OracleResult oracle_with_doubling(const CrookedPlane& cp1, const CrookedPlane& cp2, double extent,
                                  double max_extent, int n, double eps) {
  OracleResult r = oracle_disjoint(cp1, cp2, extent, n, eps);
  while (!r.intersecting && 2.0 * r.extent <= max_extent) r = oracle_disjoint(cp1, cp2, 2.0 * r.extent, n, eps);
  return r;
}

}  // namespace crooked
