#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "crooked/flows.hpp"
#include "crooked/minkowski.hpp"
#include "support/oracles.hpp"

using namespace crooked;

namespace {

void expect_vec(const LorentzVector& got, const LorentzVector& want, double tol) {
  EXPECT_NEAR(got.x1, want.x1, tol);
  EXPECT_NEAR(got.x2, want.x2, tol);
  EXPECT_NEAR(got.x3, want.x3, tol);
}

Mat3 random_lorentz(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  return boost_x1x3(d(rng)) * rotation_x1x2(2 * d(rng)) * boost_x2x3(d(rng)) * rotation_x1x2(d(rng));
}

}  // namespace

TEST(LorentzDot, Examples) {
  EXPECT_EQ(lorentz_dot({1, 0, 0}, {1, 0, 0}), 1.0);
  EXPECT_EQ(lorentz_dot({0, 0, 1}, {0, 0, 1}), -1.0);
  EXPECT_EQ(lorentz_dot({1, 0, 1}, {-1, 0, 1}), -2.0);
}

TEST(LorentzDot, MatchesMetricMatrix) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto a = oracle::random_point(rng, 3), b = oracle::random_point(rng, 3);
    EXPECT_NEAR(lorentz_dot(oracle::lv(a), oracle::lv(b)), oracle::metric(a, b), 1e-12);
    EXPECT_DOUBLE_EQ(lorentz_dot(oracle::lv(a), oracle::lv(b)), lorentz_dot(oracle::lv(b), oracle::lv(a)));
  }
}

TEST(CausalClass, Examples) {
  EXPECT_EQ(causal_class({0, 0, 1}).kind, CausalKind::timelike);
  EXPECT_EQ(causal_class({1, 0, 1}).kind, CausalKind::null);
  const CausalClass c = causal_class({std::cosh(1.0), 0, std::sinh(1.0)});
  EXPECT_EQ(c.kind, CausalKind::spacelike);
  EXPECT_TRUE(c.unit);
  EXPECT_EQ(causal_class({0, 0, 0}).kind, CausalKind::zero);
  EXPECT_FALSE(causal_class({2, 0, 0}).unit);
}

TEST(CausalClass, NullBandIsRelative) {
  EXPECT_EQ(causal_class({1e6, 0, 1e6 * (1 + 1e-12)}).kind, CausalKind::null);
  EXPECT_EQ(causal_class({1, 0, 1 - 1e-3}).kind, CausalKind::spacelike);
}

TEST(LorentzCross, Examples) {
  expect_vec(lorentz_cross({1, 2, 3}, {1, 2, 3}), {0, 0, 0}, 0);
  // det[e1 e2 w] = w3 = (0,0,-1).w
  expect_vec(lorentz_cross({1, 0, 0}, {0, 1, 0}), {0, 0, -1}, 0);
  const LorentzVector c = lorentz_cross({-1, 0, 0}, {std::cosh(1.0), 0, std::sinh(1.0)});
  expect_vec(c, {0, std::sinh(1.0), 0}, 1e-15);
  EXPECT_NEAR(lorentz_dot({0, 2.5, 0}, c), 2.5 * std::sinh(1.0), 1e-15);
}

TEST(LorentzCross, DeterminantIdentityProperty) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10000; ++i) {
    const auto u = oracle::random_point(rng, 4), w = oracle::random_point(rng, 4), x = oracle::random_point(rng, 4);
    const LorentzVector c = lorentz_cross(oracle::lv(u), oracle::lv(w));
    const double d = oracle::det(u, w, x);
    const double scale = oracle::enorm(u) * oracle::enorm(w) * oracle::enorm(x);
    ASSERT_NEAR(lorentz_dot(c, oracle::lv(x)), d, 1e-12 * scale);
    ASSERT_NEAR(lorentz_dot(c, oracle::lv(u)), 0.0, 1e-12 * scale);
    ASSERT_NEAR(lorentz_dot(c, oracle::lv(w)), 0.0, 1e-12 * scale);
    const LorentzVector r = lorentz_cross(oracle::lv(w), oracle::lv(u));
    ASSERT_EQ(r, -c);
  }
}

TEST(NullFrame, DisplayedFrames) {
  const NullFrame a = null_frame({0, 1, 0});
  expect_vec(a.minus, {-1, 0, 1}, 0);
  expect_vec(a.plus, {1, 0, 1}, 0);
  const NullFrame b = null_frame({1, 0, 0});
  expect_vec(b.minus, {0, 1, 1}, 0);
  expect_vec(b.plus, {0, -1, 1}, 0);
  for (double t : {-2.0, -0.3, 0.0, 0.7, 3.0}) {
    const NullFrame f = null_frame({std::cosh(t), 0, std::sinh(t)});
    expect_vec(f.minus, {std::tanh(t), 1 / std::cosh(t), 1}, 1e-13);
    expect_vec(f.plus, {std::tanh(t), -1 / std::cosh(t), 1}, 1e-13);
  }
}

TEST(NullFrame, InvariantsAndOracleAgreement) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> sc(0.1, 10);
  for (int i = 0; i < 10000; ++i) {
    const auto w = oracle::scale(oracle::random_spacelike(rng), sc(rng));
    const NullFrame f = null_frame(oracle::lv(w));
    const auto ref = oracle::frame(w);
    ASSERT_GT(lorentz_dot(f.u, f.u), 0);
    ASSERT_NEAR(lorentz_dot(f.minus, f.minus), 0, 1e-10);
    ASSERT_NEAR(lorentz_dot(f.plus, f.plus), 0, 1e-10);
    ASSERT_NEAR(lorentz_dot(f.u, f.minus) / euclid_norm(f.u), 0, 1e-10);
    ASSERT_NEAR(lorentz_dot(f.u, f.plus) / euclid_norm(f.u), 0, 1e-10);
    ASSERT_EQ(f.minus.x3, 1.0);
    ASSERT_EQ(f.plus.x3, 1.0);
    ASSERT_GT(det3(f.u, f.minus, f.plus), 0);
    ASSERT_LT(lorentz_dot(f.minus, f.plus), 0);
    for (int k = 0; k < 3; ++k) {
      ASSERT_NEAR(f.minus[k], ref.minus[k], 1e-9);
      ASSERT_NEAR(f.plus[k], ref.plus[k], 1e-9);
    }
  }
}

TEST(NullFrame, RejectsNonSpacelike) {
  for (const LorentzVector& v : {LorentzVector{0, 0, 1}, LorentzVector{1, 0, 1}, LorentzVector{0, 0, 0}}) {
    try {
      null_frame(v);
      ADD_FAILURE() << "no throw";
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotSpacelike);
    }
  }
}

TEST(NegateFrameLaw, Examples) {
  expect_vec(null_frame({-1, 0, 0}).minus, {0, -1, 1}, 0);
  expect_vec(null_frame({0, -1, 0}).plus, {-1, 0, 1}, 0);
  EXPECT_TRUE(negate_frame_law({1, 0, 0}));
  EXPECT_TRUE(negate_frame_law({0, 1, 0}));
}

TEST(NegateFrameLaw, RandomDirectors) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10000; ++i) ASSERT_TRUE(negate_frame_law(oracle::lv(oracle::random_spacelike(rng)), 1e-10));
  EXPECT_THROW(negate_frame_law({0, 0, 1}), GeometryError);
}

TEST(LinearClass, Examples) {
  const Mat3 h({std::cosh(1.0), 0, std::sinh(1.0), 0, 1, 0, std::sinh(1.0), 0, std::cosh(1.0)});
  EXPECT_EQ(linear_class(h), LinearClass::hyperbolic);
  EXPECT_EQ(linear_class(par_linear_standard(1.0)), LinearClass::parabolic);
  EXPECT_EQ(linear_class(rotation_x1x2(M_PI / 2)), LinearClass::elliptic);
  EXPECT_EQ(linear_class(Mat3::identity()), LinearClass::identity);
}

TEST(LinearClass, ConjugationInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.05, 2.0);
  for (int i = 0; i < 500; ++i) {
    const Mat3 p = random_lorentz(rng);
    const Mat3 pi = lorentz_inverse(p);
    ASSERT_EQ(linear_class(p * boost_x1x3(d(rng)) * pi), LinearClass::hyperbolic);
    ASSERT_EQ(linear_class(p * rotation_x1x2(d(rng)) * pi), LinearClass::elliptic);
    ASSERT_EQ(linear_class(p * par_linear_standard(d(rng)) * pi), LinearClass::parabolic);
  }
}

TEST(LinearClass, RejectsNonIsometry) {
  try {
    linear_class(Mat3({2, 0, 0, 0, 1, 0, 0, 0, 1}));
    ADD_FAILURE();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLorentzOrthogonal);
  }
}

TEST(Isometry, ApplyAndCompose) {
  const AffinePoint p{1.5, -2, 0.25};
  EXPECT_EQ(apply(Isometry::identity(), p), p);
  EXPECT_EQ(apply(Isometry::translation({1, 2, 3}), kOrigin), (AffinePoint{1, 2, 3}));
  const HyperbolicFlow f = make_hyperbolic_flow(1, 1);
  const AffinePoint q = apply(hyp_isometry(f, 1.0), kOrigin);
  EXPECT_NEAR(q.x1, 0, 1e-15);
  EXPECT_NEAR(q.x2, 1, 1e-15);
  EXPECT_NEAR(q.x3, 0, 1e-15);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const Isometry a(random_lorentz(rng), oracle::lv(oracle::random_point(rng, 2)));
    const Isometry b(random_lorentz(rng), oracle::lv(oracle::random_point(rng, 2)));
    const Isometry c(random_lorentz(rng), oracle::lv(oracle::random_point(rng, 2)));
    const AffinePoint x{0.3, -1, 2};
    const AffinePoint l = apply(compose(compose(a, b), c), x), r = apply(compose(a, compose(b, c)), x);
    const AffinePoint s = apply(a, apply(b, x));
    const AffinePoint t = apply(compose(a, b), x);
    EXPECT_NEAR((l - r).x1, 0, 1e-11);
    EXPECT_NEAR((l - r).x3, 0, 1e-11);
    EXPECT_NEAR(euclid_norm(s - t), 0, 1e-11);
    EXPECT_NEAR(euclid_norm(apply(a.inverse(), apply(a, x)) - x), 0, 1e-10);
  }
}

TEST(Isometry, PreservesScalarProduct) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Mat3 a = random_lorentz(rng);
    const auto u = oracle::random_point(rng, 3), w = oracle::random_point(rng, 3);
    const double lhs = lorentz_dot(a * oracle::lv(u), a * oracle::lv(w));
    ASSERT_NEAR(lhs, oracle::metric(u, w), 1e-9 * std::max(1.0, oracle::enorm(u) * oracle::enorm(w)) *
                                               std::max(1.0, a.frobenius_norm() * a.frobenius_norm()));
  }
}

TEST(Isometry, RejectsNonOrthogonal) {
  try {
    Isometry(Mat3({1, 0, 0, 0, 1, 0, 0, 0, 2}), {});
    ADD_FAILURE();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLorentzOrthogonal);
  }
  // Orientation reversing.
  EXPECT_THROW(Isometry(Mat3({-1, 0, 0, 0, 1, 0, 0, 0, 1}), {}), GeometryError);
}

TEST(AffinePoint, Arithmetic) {
  const AffinePoint p{1, 2, 3}, q{0, 1, -1};
  EXPECT_EQ(p - q, (LorentzVector{1, 1, 4}));
  EXPECT_EQ(q + (LorentzVector{1, 1, 4}), p);
  EXPECT_EQ(p - (LorentzVector{1, 1, 4}), q);
}
