#include <gtest/gtest.h>

#include "generators.hpp"
#include "solenoid/error.hpp"
#include "solenoid/hull.hpp"

namespace solenoid {
namespace {

using testing::Gen;

PlLift sawtooth() { return pl_new(1, {{0, Rational(1, 8)}, {Rational(1, 2), Rational(1, 2)}}); }

HullRef hull_of(const PlLift& f) { return Hull::of_displacement(displacement_of(f)); }

TEST(Hull, TranslateAndEval) {
  HullRef h = hull_of(sawtooth());
  Displacement d = displacement_of(sawtooth());
  EXPECT_EQ(hull_translate(h, 0), hull_neutral(h));
  EXPECT_EQ(hull_translate(h, 1), hull_neutral(h));
  EXPECT_EQ(hull_point_eval(hull_translate(h, Rational(1, 3)), Rational(1, 6)), d.eval(Rational(1, 2)));
  EXPECT_EQ(hull_translate(h, Rational(-1, 4)).parameter(), Rational(3, 4));
}

TEST(Hull, Multiplication) {
  HullRef h = hull_of(sawtooth());
  HullPoint a = hull_translate(h, Rational(1, 3));
  EXPECT_EQ(hull_mul(a, hull_neutral(h)), a);
  EXPECT_EQ(hull_mul(a, hull_translate(h, Rational(2, 3))), hull_neutral(h));
  EXPECT_EQ(hull_mul(a, hull_inverse(a)), hull_neutral(h));
  HullRef other = hull_of(rotation(Rational(1, 5)));
  try {
    (void)hull_mul(a, hull_neutral(other));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMixedHulls);
  }
}

TEST(Hull, PeriodIsMinimal) {
  HullRef h = hull_of(embed_degree(sawtooth(), 6));
  EXPECT_EQ(h->period(), 1);
  PlLift two = pl_new(2, {{0, Rational(1, 8)}, {Rational(1, 2), Rational(3, 4)}, {1, Rational(9, 8)}});
  EXPECT_EQ(hull_of(two)->period(), 2);
}

TEST(Hull, SupDistanceSeparatesParameters) {
  HullRef h = hull_of(pl_new(2, {{0, Rational(1, 8)}, {Rational(1, 2), Rational(3, 4)}, {1, Rational(9, 8)}}));
  Gen gen(61);
  for (int i = 0; i < 50; ++i) {
    Rational s = gen.rational(0, 2, 16), t = gen.rational(0, 2, 16);
    HullPoint a = hull_translate(h, s), b = hull_translate(h, t);
    EXPECT_EQ(hull_sup_distance(a, b) == 0, a == b);
  }
}

TEST(Hull, OfFunctionRejectsDecreasing) {
  try {
    (void)Hull::of_function(PlFunction(1, {{0, 1}, {Rational(1, 4), 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotIncreasing);
  }
}

TEST(Hull, KMapOnSigma) {
  HullRef h = hull_of(embed_degree(pl_new(2, {{0, Rational(1, 8)}, {1, Rational(5, 4)}}), 2));
  ASSERT_EQ(h->period(), 2);
  Gen gen(62);
  for (int i = 0; i < 50; ++i) {
    Rational t = gen.rational(-10, 10);
    EXPECT_EQ(K_map(sigma(t), h).parameter(), mod(t, Integer(2)));
  }
  HullRef one = hull_of(sawtooth());
  SolenoidPoint s = gen.point();
  EXPECT_EQ(K_map(s, one).parameter(), project(s, 1).value);
}

TEST(Hull, QuotientMapExamples) {
  HullRef rot = hull_of(rotation(Rational(2, 5)));
  QuotientMap g = quotient_map(rot);
  EXPECT_EQ(g_apply(g, hull_translate(rot, Rational(4, 5))).parameter(), Rational(1, 5));
  EXPECT_EQ(isotopy_eval(rot, Rational(1, 2), hull_neutral(rot)).parameter(), Rational(1, 5));
  HullRef h = hull_of(sawtooth());
  QuotientMap gs = quotient_map(h);
  EXPECT_EQ(g_apply(gs, hull_neutral(h)).parameter(), Rational(1, 8));
  RotationEnclosure e = quotient_rotation(g, 100);
  ASSERT_TRUE(e.exact.has_value());
  EXPECT_EQ(*e.exact, Rational(2, 5));
}

TEST(Hull, LimitPeriodicTruncationHulls) {
  LimitPeriodicHomeo h = lp_build({1, 2}, {PlFunction(1, {{0, 0}, {Rational(1, 2), Rational(1, 4)}}),
                                           PlFunction(2, {{0, 0}, {1, Rational(1, 16)}})},
                                  Rational(1, 64));
  HullRef top = Hull::of_truncation(h, 2);
  EXPECT_EQ(top->period(), 2);
  EXPECT_EQ(top->level(), std::optional<std::size_t>(2));
  EXPECT_EQ(top->error_bound(), Rational(1, 64));
  EXPECT_EQ(Hull::of_truncation(h, 1)->error_bound(), Rational(1, 16) + Rational(1, 64));
  auto v = periodicity_classify(h);
  ASSERT_TRUE(std::holds_alternative<LimitPeriodicCertified>(v));
  EXPECT_EQ(std::get<LimitPeriodicCertified>(v).tower, (std::vector<std::int64_t>{1, 2}));
}

TEST(Hull, PeriodicityOfRawSamples) {
  RawSamples periodic{0, Rational(1, 10), {}};
  for (int i = 0; i < 200; ++i) periodic.values.push_back(std::sin(2 * M_PI * i / 30.0));
  auto v = periodicity_classify(periodic, {1, 2, 3, 6});
  ASSERT_TRUE(std::holds_alternative<Periodic>(v));
  EXPECT_EQ(std::get<Periodic>(v).period, 3);

  Gen gen(63);
  RawSamples noise{0, Rational(1, 10), {}};
  for (int i = 0; i < 200; ++i) noise.values.push_back(static_cast<double>(gen.below(1000)) / 1000.0);
  EXPECT_TRUE(std::holds_alternative<UnknownPeriodicity>(periodicity_classify(noise, {1, 2, 3, 6})));
}

TEST(HullProperty, GroupLaws) {
  Gen gen(64);
  for (int i = 0; i < 20; ++i) {
    const std::int64_t n = gen.between(1, 6);
    HullRef h = hull_of(gen.periodic_lift(n, gen.divisor_of(n)));
    const std::int64_t t = h->period();
    for (int j = 0; j < 50; ++j) {
      HullPoint a = hull_translate(h, gen.rational(-t, t)), b = hull_translate(h, gen.rational(-t, t)),
                c = hull_translate(h, gen.rational(-t, t));
      EXPECT_EQ(hull_mul(hull_mul(a, b), c), hull_mul(a, hull_mul(b, c)));
      EXPECT_EQ(hull_mul(a, b), hull_mul(b, a));
      EXPECT_EQ(hull_mul(a, hull_neutral(h)), a);
      EXPECT_EQ(hull_mul(a, hull_inverse(a)), hull_neutral(h));
      Rational x = gen.rational(0, t);
      EXPECT_EQ(hull_point_eval(hull_mul(a, b), x), hull_point_eval(a, x + b.parameter()));
    }
  }
}

TEST(HullProperty, KIsHomomorphism) {
  Gen gen(65);
  for (int i = 0; i < 20; ++i) {
    const std::int64_t n = gen.between(1, 6);
    InducedHomeo f = gen.induced(n);
    HullRef h = Hull::of_induced(f);
    EXPECT_EQ(n % h->period(), 0);
    for (int j = 0; j < 100; ++j) {
      SolenoidPoint s = gen.point(), t = gen.point();
      EXPECT_EQ(K_map(sol_add(s, t), h), hull_mul(K_map(s, h), K_map(t, h)));
    }
  }
}

TEST(HullProperty, QuotientMapIsBijectiveSweep) {
  Gen gen(66);
  for (int i = 0; i < 10; ++i) {
    const std::int64_t n = gen.between(1, 4);
    HullRef h = hull_of(gen.periodic_lift(n, gen.divisor_of(n)));
    QuotientMap g = quotient_map(h);
    const std::int64_t t = h->period();
    Rational prev = g.lift.eval(Rational(0));
    const int grid = 10'000;
    for (int j = 1; j <= grid; ++j) {
      Rational x = Rational(j * t) / grid;
      Rational y = g.lift.eval(x);
      ASSERT_GT(y, prev);
      prev = y;
    }
    EXPECT_EQ(prev - g.lift.eval(Rational(0)), t);
  }
}

TEST(HullProperty, IsotopyEndpoints) {
  Gen gen(67);
  for (int i = 0; i < 20; ++i) {
    HullRef h = hull_of(gen.pl_lift(gen.between(1, 3)));
    QuotientMap g = quotient_map(h);
    HullPoint p = hull_translate(h, gen.rational(0, h->period()));
    EXPECT_EQ(isotopy_eval(h, 0, p), p);
    EXPECT_EQ(isotopy_eval(h, 1, p), g_apply(g, p));
  }
}

TEST(HullProperty, SemiconjugacyAndFault) {
  Gen gen(68);
  for (int i = 0; i < 20; ++i) {
    InducedHomeo f = gen.induced(gen.between(1, 6));
    std::vector<SolenoidPoint> points;
    for (int j = 0; j < 50; ++j) points.push_back(gen.point());
    SemiconjugacyReport r = check_semiconjugacy(f, points);
    EXPECT_TRUE(r.exact);
    EXPECT_EQ(r.max_error, 0);
    EXPECT_EQ(r.samples, points.size());

    QuotientMap g = quotient_map(Hull::of_induced(f));
    QuotientMap bad{g.hull, PlLift(g.lift.displacement() + Rational(1, 7))};
    SemiconjugacyReport rb = check_semiconjugacy(f, points, bad);
    EXPECT_FALSE(rb.exact);
    EXPECT_GE(rb.max_error, Rational(1, 7));
  }
}

TEST(HullProperty, InducedMapsArePeriodic) {
  Gen gen(69);
  for (int i = 0; i < 30; ++i) {
    const std::int64_t n = gen.between(1, 6);
    InducedHomeo f = gen.induced(n);
    auto v = periodicity_classify(f);
    ASSERT_TRUE(std::holds_alternative<Periodic>(v));
    Rational t = std::get<Periodic>(v).period;
    EXPECT_EQ(t.get_den(), 1);
    EXPECT_EQ(n % t.get_num().get_si(), 0);
  }
}

}  // namespace
}  // namespace solenoid
