#include <gtest/gtest.h>

#include "generators.hpp"
#include "solenoid/point.hpp"

namespace solenoid {
namespace {

TEST(Point, CanonicalizeMovesIntegerPartToFiber) {
  SolenoidPoint s = canonicalize<Rational>(Rational(-1, 2), embed_int(0, 3));
  EXPECT_EQ(s.leaf(), Rational(1, 2));
  EXPECT_EQ(s.fiber(), embed_int(-1, 3));
  EXPECT_EQ(sigma(Rational(7, 2)), canonicalize<Rational>(Rational(1, 2), embed_int(3)));
}

TEST(Point, AdditionCarries) {
  SolenoidPoint a = canonicalize<Rational>(Rational(1, 3), embed_int(2));
  SolenoidPoint b = canonicalize<Rational>(Rational(2, 3), embed_int(-2));
  SolenoidPoint c = sol_add(a, b);
  EXPECT_EQ(c.leaf(), 0);
  EXPECT_EQ(c.fiber(), embed_int(1));
  EXPECT_EQ(c, sigma(1));
}

TEST(Point, Projection) {
  SolenoidPoint s = canonicalize<Rational>(Rational(1, 2), embed_int(3));
  EXPECT_EQ(project(s, 2).value, Rational(3, 2));
  EXPECT_EQ(project(s, 1).value, Rational(1, 2));
  EXPECT_THROW(project(SolenoidPoint::zero(3), 7), Error);
}

TEST(Point, DistanceClosedForms) {
  const std::size_t m = 8;
  Rational tail = 1 - Rational(1, 256);
  EXPECT_EQ(sol_dist(SolenoidPoint::zero(m), sigma(Rational(1, 2), m)), Rational(1, 2) * tail);
  Rational eps(3, 17);
  EXPECT_EQ(sol_dist(SolenoidPoint::zero(m), sigma(eps, m)), eps * tail);
}

TEST(Point, LiteralRoundTrip) {
  SolenoidPoint s = canonicalize<Rational>(Rational(5, 7), embed_int(100, 4));
  EXPECT_EQ(to_literal(s), "x=5/7; k=(0,0,4,4)");
  EXPECT_EQ(parse_point(to_literal(s)), s);
  EXPECT_EQ(parse_point("x=3/2; k=(0,0,0)"), canonicalize<Rational>(Rational(1, 2), embed_int(1, 3)));
  EXPECT_THROW(parse_point("x=1/2"), Error);
}

TEST(Point, RealModelAgreesWithExact) {
  testing::Gen gen(21);
  for (int i = 0; i < 200; ++i) {
    SolenoidPoint s = gen.point(), t = gen.point();
    RealSolenoidPoint rs = to_real(s), rt = to_real(t);
    EXPECT_NEAR(sol_dist(rs, rt), sol_dist(s, t).get_d(), 1e-12);
    RealSolenoidPoint sum = sol_add(rs, rt);
    EXPECT_NEAR(sum.leaf(), sol_add(s, t).leaf().get_d(), 1e-12);
  }
}

TEST(PointProperty, GroupLaws) {
  testing::Gen gen(22);
  for (int i = 0; i < 1000; ++i) {
    SolenoidPoint a = gen.point(), b = gen.point(), c = gen.point();
    EXPECT_EQ(sol_add(sol_add(a, b), c), sol_add(a, sol_add(b, c)));
    EXPECT_EQ(sol_add(a, b), sol_add(b, a));
    EXPECT_EQ(sol_add(a, SolenoidPoint::zero()), a);
    EXPECT_EQ(sol_add(a, sol_neg(a)), SolenoidPoint::zero());
  }
}

TEST(PointProperty, DeckInvariance) {
  testing::Gen gen(23);
  for (int i = 0; i < 1000; ++i) {
    CoverPair<Rational> p{gen.rational(-50, 50), gen.profinite()};
    Integer t = gen.integer(-1000, 1000);
    EXPECT_EQ(canonicalize(deck(p, t)), canonicalize(p));
  }
}

TEST(PointProperty, ProjectionIsHomomorphism) {
  testing::Gen gen(24);
  for (int i = 0; i < 500; ++i) {
    SolenoidPoint a = gen.point(), b = gen.point();
    for (long n : {1L, 2L, 3L, 4L, 6L, 24L, 40320L}) {
      Rational lhs = project(sol_add(a, b), n).value;
      Rational rhs = mod(project(a, n).value + project(b, n).value, Integer(n));
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(PointProperty, SigmaIsHomomorphism) {
  testing::Gen gen(25);
  for (int i = 0; i < 500; ++i) {
    Rational s = gen.rational(-30, 30), t = gen.rational(-30, 30);
    EXPECT_EQ(sigma(s + t), sol_add(sigma(s), sigma(t)));
  }
}

TEST(PointProperty, DistanceIsTranslationInvariantMetric) {
  testing::Gen gen(26);
  for (int i = 0; i < 300; ++i) {
    SolenoidPoint a = gen.point(), b = gen.point(), c = gen.point();
    Rational ab = sol_dist(a, b);
    EXPECT_EQ(ab, sol_dist(b, a));
    EXPECT_LE(sol_dist(a, c), ab + sol_dist(b, c));
    EXPECT_EQ(sol_dist(sol_add(a, c), sol_add(b, c)), ab);
    EXPECT_EQ(ab == 0, a == b);
  }
}

}  // namespace
}  // namespace solenoid
