#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "crooked/crooked_plane.hpp"
#include "crooked/flows.hpp"
#include "support/oracles.hpp"

using namespace crooked;

namespace {

const double c1 = std::cosh(1.0), s1 = std::sinh(1.0);

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected GeometryError";
  return ErrorCode::InvalidParams;
}

CrookedPlane plane(const oracle::V& p, const oracle::V& u) { return {AffinePoint{p[0], p[1], p[2]}, oracle::lv(u)}; }

}  // namespace

TEST(PairClass, Examples) {
  EXPECT_EQ(pair_class({1, 0, 0}, {0, 1, 0}), PairClass::crossing);
  EXPECT_EQ(pair_class({1, 0, 0}, {c1, 0, s1}), PairClass::ultraparallel);
  EXPECT_EQ(pair_class({1, 1, 1}, {std::exp(1.0), 1, std::exp(1.0)}), PairClass::asymptotic);
}

TEST(PairClass, Errors) {
  EXPECT_EQ(code_of([] { pair_class({0, 0, 1}, {1, 0, 0}); }), ErrorCode::NotSpacelike);
  EXPECT_EQ(code_of([] { pair_class({1, 0, 0}, {-3, 0, 0}); }), ErrorCode::DegeneratePair);
}

TEST(PairClass, MatchesOracleSign) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5000; ++i) {
    const auto a = oracle::random_spacelike(rng), b = oracle::random_spacelike(rng);
    const int s = oracle::pair_sign(a, b);
    const PairClass pc = pair_class(oracle::lv(a), oracle::lv(b));
    ASSERT_EQ(pc, s > 0 ? PairClass::ultraparallel : s < 0 ? PairClass::crossing : PairClass::asymptotic);
  }
}

TEST(ConsistentlyOriented, Examples) {
  EXPECT_TRUE(consistently_oriented({-1, 0, 0}, {c1, 0, s1}));
  EXPECT_FALSE(consistently_oriented({1, 0, 0}, {c1, 0, s1}));
  // Negating both vectors keeps u1.u2 but swaps the frames; the oracle sign
  // check says this pair is not consistent.
  EXPECT_EQ(consistently_oriented({1, 0, 0}, {-c1, 0, -s1}), oracle::consistent({1, 0, 0}, {-c1, 0, -s1}));
  EXPECT_FALSE(consistently_oriented({1, 0, 0}, {-c1, 0, -s1}));
  EXPECT_EQ(code_of([] { consistently_oriented({1, 0, 0}, {0, 1, 0}); }), ErrorCode::CrossingPair);
}

TEST(ConsistentlyOriented, MatchesOracle) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 5000; ++i) {
    const auto [a, b] = oracle::random_ultraparallel(rng);
    ASSERT_EQ(consistently_oriented(oracle::lv(a), oracle::lv(b)), oracle::consistent(a, b));
  }
}

TEST(NormalizeConsistent, Examples) {
  auto [u1, u2] = normalize_consistent({2, 0, 0}, {-c1, 0, -s1});
  EXPECT_NEAR(u1.x1, -1, 1e-15);
  EXPECT_NEAR(u2.x1, c1, 1e-15);
  EXPECT_NEAR(u2.x3, s1, 1e-15);

  const auto [v1, v2] = normalize_consistent({-1, 0, 0}, {c1, 0, s1});
  EXPECT_NEAR(euclid_norm(v1 - LorentzVector{-1, 0, 0}), 0, 1e-15);
  EXPECT_NEAR(euclid_norm(v2 - LorentzVector{c1, 0, s1}), 0, 1e-15);

  const auto [w1, w2] = normalize_consistent({-3, 0, 0}, {5 * c1, 0, 5 * s1});
  EXPECT_NEAR(euclid_norm(w1 - LorentzVector{-1, 0, 0}), 0, 1e-15);
  EXPECT_NEAR(euclid_norm(w2 - LorentzVector{c1, 0, s1}), 0, 1e-14);

  EXPECT_EQ(code_of([] { normalize_consistent({1, 0, 0}, {0, 1, 0}); }), ErrorCode::CrossingPair);
  EXPECT_EQ(code_of([] { normalize_consistent({1, 0, 0}, {2, 0, 0}); }), ErrorCode::DegeneratePair);
}

TEST(NormalizeConsistent, UniqueAmongSignChoices) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> sc(0.2, 5);
  for (int i = 0; i < 2000; ++i) {
    const auto [a, b] = oracle::random_ultraparallel(rng);
    const auto [u1, u2] = normalize_consistent(oracle::lv(oracle::scale(a, sc(rng))), oracle::lv(oracle::scale(b, -sc(rng))));
    ASSERT_NEAR(lorentz_dot(u1, u1), 1, 1e-12);
    ASSERT_NEAR(lorentz_dot(u2, u2), 1, 1e-12);
    ASSERT_TRUE(oracle::consistent(oracle::v(u1), oracle::v(u2)));
    int consistent_choices = 0;
    for (double x : {1.0, -1.0})
      for (double y : {1.0, -1.0}) consistent_choices += oracle::consistent(oracle::scale(a, x), oracle::scale(b, y));
    ASSERT_EQ(consistent_choices, 1);
  }
}

TEST(StemQuadrant, Examples) {
  const NullFrame f = null_frame({0.3, 1.2, 0.4});
  EXPECT_EQ(in_stem_quadrant(f.u, f.minus), QuadrantMembership::edge);
  EXPECT_EQ(in_stem_quadrant(f.u, f.plus), QuadrantMembership::outside);
  EXPECT_EQ(in_stem_quadrant({1, 0, 0}, {0, 2, 0}), QuadrantMembership::interior);
  EXPECT_EQ(in_stem_quadrant({1, 0, 0}, {0, -2, 0}), QuadrantMembership::outside);
  EXPECT_EQ(in_stem_quadrant({1, 0, 0}, {0, 0, 0}), QuadrantMembership::outside);
  EXPECT_EQ(in_stem_quadrant({1, 0, 0}, {1, 0, 0}), QuadrantMembership::outside);
  EXPECT_EQ(code_of([] { in_stem_quadrant({0, 0, 1}, {1, 0, 0}); }), ErrorCode::NotSpacelike);
}

TEST(StemQuadrant, MembersAreSpacelikeOrNull) {
  // x = a u- - b u+ gives x.x = -2ab (u-.u+) >= 0.
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> c(0.0, 3.0);
  for (int i = 0; i < 5000; ++i) {
    const NullFrame f = null_frame(oracle::lv(oracle::random_spacelike(rng)));
    const double a = c(rng), b = c(rng);
    const LorentzVector x = a * f.minus - b * f.plus;
    if (euclid_norm(x) < 1e-6) continue;
    ASSERT_NE(in_stem_quadrant(f.u, x), QuadrantMembership::outside);
    ASSERT_NEAR(lorentz_dot(x, x), -2 * a * b * lorentz_dot(f.minus, f.plus), 1e-9 * (1 + a * b));
    ASSERT_GE(lorentz_dot(x, x), -1e-12);
  }
}

TEST(StemGeometry, BowtieIsAbNonNegative) {
  // x = a u- + b u+ has x.x = 2ab (u-.u+), negative factor, so x.x <= 0 iff ab >= 0.
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> c(-3.0, 3.0);
  for (int i = 0; i < 5000; ++i) {
    const NullFrame f = null_frame(oracle::lv(oracle::random_spacelike(rng)));
    const double a = c(rng), b = c(rng);
    const LorentzVector x = a * f.minus + b * f.plus;
    ASSERT_NEAR(lorentz_dot(x, x), 2 * a * b * lorentz_dot(f.minus, f.plus), 1e-10 * (1 + std::abs(a * b)));
    ASSERT_EQ(lorentz_dot(x, x) <= 1e-12, a * b >= -1e-12);
    const CrookedPlane cp({0, 0, 0}, f.u);
    if (a * b >= 0) ASSERT_LT(distance_to_piece(cp, kOrigin + x, CrookedPiece::stem), 1e-9);
  }
}

TEST(ContainsPoint, Examples) {
  const CrookedPlane cp({1, -2, 0.5}, {0.3, 1.2, 0.4});
  const NullFrame& f = cp.frame();
  EXPECT_TRUE(contains_point(cp, cp.vertex(), 1e-12));
  EXPECT_TRUE(contains_point(cp, cp.vertex() + f.minus, 1e-12));
  EXPECT_TRUE(contains_point(cp, cp.vertex() + f.u, 1e-12));
  EXPECT_FALSE(contains_point(cp, cp.vertex() - f.u + f.plus, 1e-6));
  EXPECT_TRUE(contains_point(cp, cp.vertex() - f.u + f.minus, 1e-12));
  EXPECT_TRUE(contains_point(cp, cp.vertex() + 2 * f.u - 3 * f.plus, 1e-12));
}

TEST(ContainsPoint, NegatedDirectorSameSet) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> c(-3.0, 3.0);
  for (int i = 0; i < 300; ++i) {
    const CrookedPlane cp(AffinePoint{c(rng), c(rng), c(rng)}, oracle::lv(oracle::random_spacelike(rng)));
    const CrookedPlane neg = cp.flipped();
    for (int j = 0; j < 20; ++j) {
      const AffinePoint q{c(rng), c(rng), c(rng)};
      ASSERT_NEAR(distance_to_plane(cp, q), distance_to_plane(neg, q), 1e-9);
    }
    // Points sampled on every piece of one are on the other.
    const NullFrame& f = cp.frame();
    const double a = std::abs(c(rng)), b = c(rng);
    for (const LorentzVector& x : {a * f.u + b * f.plus, -a * f.u + b * f.minus, a * f.minus + std::abs(b) * f.plus})
      ASSERT_TRUE(contains_point(neg, cp.vertex() + x, 1e-9));
  }
}

TEST(DgDisjoint, Examples) {
  const CrookedPlane a({0, 0, 0}, {1, 0, 0});
  const CrookedPlane b({0, 1, 0}, {c1, 0, s1});
  const DgTerms t = dg_terms(a, b);
  EXPECT_NEAR(t.lhs, s1, 1e-15);
  EXPECT_EQ(t.rhs, 0.0);
  EXPECT_TRUE(dg_disjoint(a, b));

  const CrookedPlane p({1, 0, 0}, {1, 0, 0});
  const CrookedPlane q({c1, 1, s1}, {c1, 0, s1});
  const DgTerms r = dg_terms(p, q);
  EXPECT_NEAR(r.lhs - r.rhs, s1 - 2 * (c1 - 1), 1e-14);
  EXPECT_TRUE(dg_disjoint(p, q));

  EXPECT_FALSE(dg_disjoint(a, CrookedPlane({0, 0, 0}, {c1, 0, s1})));
  EXPECT_EQ(code_of([&] { dg_disjoint(a, CrookedPlane({0, 1, 0}, {0, 1, 0})); }), ErrorCode::NotUltraparallel);
  EXPECT_EQ(code_of([&] { dg_disjoint(CrookedPlane({0, 0, 0}, {1, 1, 1}), CrookedPlane({1, 0, 0}, {2, 1, 2})); }),
            ErrorCode::NotUltraparallel);
}

TEST(DgDisjoint, BoundaryIsNotDisjoint) {
  // Exact binary data: u2 = (5/4, 0, 3/4) is unit, and for dp = (1, 2, 1) both
  // sides equal 3/2.
  const CrookedPlane a({0, 0, 0}, {1, 0, 0});
  const CrookedPlane b({1, 2, 1}, {1.25, 0, 0.75});
  const DgTerms t = dg_terms(a, b);
  EXPECT_EQ(t.lhs, 1.5);
  EXPECT_EQ(t.rhs, 1.5);
  EXPECT_FALSE(dg_disjoint(a, b));
  EXPECT_FALSE(cone_disjoint(a, b));
  EXPECT_TRUE(dg_disjoint(a, CrookedPlane({1, 2.0001, 1}, {1.25, 0, 0.75})));
}

TEST(DgDisjoint, MatchesOracleMargin) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5000; ++i) {
    const auto [w1, w2] = oracle::random_ultraparallel(rng);
    const auto p1 = oracle::random_point(rng, 5), p2 = oracle::random_point(rng, 5);
    const auto ref = oracle::dg_margin(p1, w1, p2, w2);
    ASSERT_TRUE(ref.has_value());
    const double m = dg_margin(plane(p1, w1), plane(p2, w2));
    ASSERT_NEAR(m, *ref, 1e-9 * (1 + std::abs(*ref)));
  }
}

TEST(ConeDisjoint, Examples) {
  const CrookedPlane a({0, 0, 0}, {1, 0, 0});
  const CrookedPlane b({0, 1, 0}, {c1, 0, s1});
  EXPECT_TRUE(cone_disjoint(a, b));
  EXPECT_EQ(cone_disjoint(a, b), dg_disjoint(a, b));

  const double e = std::exp(1.0);
  const CrookedPlane w0({0.5, 0, -0.5}, {1, 1, 1});
  const CrookedPlane w1({0.5 / e, 1, -0.5 / e}, {e, 1, e});
  EXPECT_TRUE(cone_disjoint(w0, w1));

  EXPECT_FALSE(cone_disjoint(a, CrookedPlane({0, 0, 0}, {c1, 0, s1})));
  EXPECT_EQ(code_of([&] { cone_disjoint(a, a); }), ErrorCode::DegeneratePair);
  EXPECT_EQ(code_of([&] { cone_disjoint(a, CrookedPlane({0, 1, 0}, {0, 1, 0})); }), ErrorCode::CrossingPair);
}

TEST(ConeDisjoint, MatchesOpenConeOracle) {
  std::mt19937_64 rng(18);
  int disjoint = 0;
  for (int i = 0; i < 5000; ++i) {
    const auto [w1, w2] = oracle::random_ultraparallel(rng);
    const auto p1 = oracle::random_point(rng, 5), p2 = oracle::random_point(rng, 5);
    const CrookedPlane a = plane(p1, w1), b = plane(p2, w2);
    if (std::abs(cone_margin(a, b)) < 1e-7) continue;
    const bool want = oracle::cone_disjoint(p1, w1, p2, w2);
    ASSERT_EQ(cone_disjoint(a, b), want) << i;
    disjoint += want;
  }
  EXPECT_GT(disjoint, 50);
}

TEST(ConeDisjoint, AsymptoticPairsMatchOracle) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> t(-2, 2), r(0, 2 * M_PI);
  for (int i = 0; i < 2000; ++i) {
    // Directors sharing the null direction n: boosts of one director about n.
    const Mat3 g = rotation_x1x2(r(rng));
    const LorentzVector u0 = g * LorentzVector{1, 1, 1};
    const double s = t(rng);
    const LorentzVector u1 = g * LorentzVector{std::exp(s), 1, std::exp(s)};
    if (std::abs(s) < 1e-3) continue;
    const auto p1 = oracle::random_point(rng, 3), p2 = oracle::random_point(rng, 3);
    const CrookedPlane a(AffinePoint{p1[0], p1[1], p1[2]}, u0), b(AffinePoint{p2[0], p2[1], p2[2]}, u1);
    if (std::abs(cone_margin(a, b)) < 1e-7) continue;
    ASSERT_EQ(cone_disjoint(a, b), oracle::cone_disjoint(p1, oracle::v(u0), p2, oracle::v(u1))) << i;
  }
}

TEST(Criteria, EquivalentAwayFromBoundary) {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 10000; ++i) {
    const auto [w1, w2] = oracle::random_ultraparallel(rng);
    const CrookedPlane a = plane(oracle::random_point(rng, 5), w1), b = plane(oracle::random_point(rng, 5), w2);
    if (std::abs(dg_margin(a, b)) < 1e-7) continue;
    ASSERT_EQ(dg_disjoint(a, b), cone_disjoint(a, b));
  }
}

TEST(Criteria, SymmetricAndNegationInvariant) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 3000; ++i) {
    const auto [w1, w2] = oracle::random_ultraparallel(rng);
    const CrookedPlane a = plane(oracle::random_point(rng, 5), w1), b = plane(oracle::random_point(rng, 5), w2);
    if (std::abs(dg_margin(a, b)) < 1e-7) continue;
    const bool d = dg_disjoint(a, b), c = cone_disjoint(a, b);
    ASSERT_EQ(dg_disjoint(b, a), d);
    ASSERT_EQ(cone_disjoint(b, a), c);
    ASSERT_EQ(dg_disjoint(a.flipped(), b), d);
    ASSERT_EQ(dg_disjoint(a, b.flipped()), d);
    ASSERT_EQ(cone_disjoint(a.flipped(), b), c);
    ASSERT_EQ(cone_disjoint(a.flipped(), b.flipped()), c);
  }
}

TEST(Criteria, IsometryEquivariant) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> d(-1.2, 1.2);
  for (int i = 0; i < 3000; ++i) {
    const auto [w1, w2] = oracle::random_ultraparallel(rng);
    const CrookedPlane a = plane(oracle::random_point(rng, 5), w1), b = plane(oracle::random_point(rng, 5), w2);
    if (std::abs(dg_margin(a, b)) < 1e-6) continue;
    const Isometry g(boost_x1x3(d(rng)) * rotation_x1x2(3 * d(rng)) * boost_x2x3(d(rng)),
                     oracle::lv(oracle::random_point(rng, 4)));
    ASSERT_EQ(dg_disjoint(a.transformed(g), b.transformed(g)), dg_disjoint(a, b));
    ASSERT_EQ(cone_disjoint(a.transformed(g), b.transformed(g)), cone_disjoint(a, b));
  }
}
