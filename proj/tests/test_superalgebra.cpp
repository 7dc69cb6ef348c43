#include <gtest/gtest.h>

#include <random>

#include "superlag/charts.hpp"
#include "superlag/error.hpp"
#include "superlag/oracle.hpp"
#include "superlag/random.hpp"
#include "superlag/superalgebra.hpp"

using namespace superlag;

namespace {

ChartPtr test_chart() {
  static const auto ps = make_charts({"q", "r"}, {"th1", "th2"});
  return ps.tangent;
}

Superfunction gen(const char* name) { return Superfunction::generator(test_chart(), name); }

Parity random_parity(std::mt19937_64& rng) { return draw_below(rng, 2) ? Parity::Odd : Parity::Even; }

}  // namespace

TEST(Superalgebra, OddSquareVanishes) { EXPECT_TRUE((gen("th1") * gen("th1")).is_zero()); }

TEST(Superalgebra, OddGeneratorsAnticommute) { EXPECT_EQ(gen("th1") * gen("th2"), -(gen("th2") * gen("th1"))); }

TEST(Superalgebra, EvenElementsAreCentral) {
  const auto q = gen("q");
  const auto n = gen("th1") * gen("th2");
  EXPECT_EQ((q + n) * q, q * q + q * n);
  EXPECT_EQ((q + n) * q, q * (q + n));
}

TEST(Superalgebra, ParityOf) {
  EXPECT_EQ(gen("q").parity(), Parity::Even);
  EXPECT_EQ((gen("th1") * gen("th2")).parity(), Parity::Even);
  EXPECT_EQ(gen("th1").parity(), Parity::Odd);
  EXPECT_FALSE((gen("q") + gen("th1")).parity().has_value());
}

TEST(Superalgebra, LeftPartialExamples) {
  const auto f = Rational(1, 2) * gen("zeta_th1") * gen("th1");
  const auto zeta = test_chart()->index_of("zeta_th1");
  const auto th = test_chart()->index_of("th1");
  EXPECT_EQ(f.left_partial(zeta), Rational(1, 2) * gen("th1"));
  EXPECT_EQ(f.left_partial(th), Rational(-1, 2) * gen("zeta_th1"));
  // Same values through the oracle.
  EXPECT_TRUE(oracle::check_identity(f.left_partial(th), Rational(-1, 2) * gen("zeta_th1"), 10, 3));
  EXPECT_EQ((gen("q") * gen("q")).left_partial(test_chart()->index_of("q")), 2 * gen("q"));
}

TEST(Superalgebra, BodyAndInvert) {
  const auto n = gen("th1") * gen("th2");
  EXPECT_EQ((gen("q") + n).body(), gen("q"));
  const auto one = Superfunction::constant(test_chart(), 1);
  EXPECT_EQ((one + n).invert(), one - n);
  EXPECT_THROW(gen("th1").invert(), NotInvertible);
  EXPECT_THROW(gen("q").invert(), NotInvertible);
  const auto u = Superfunction::constant(test_chart(), 3) + gen("th1") * gen("zeta_th2") + n;
  EXPECT_EQ(u.invert() * u, one);
}

TEST(Superalgebra, CanonicalRendering) {
  const auto ps = make_charts({"q1", "q2"}, {});
  const auto v1 = Superfunction::generator(ps.tangent, "v_q1");
  const auto q2 = Superfunction::generator(ps.tangent, "q2");
  EXPECT_EQ((Rational(1, 2) * v1 * v1 + q2 * v1).to_string(), "1/2*v_q1^2 + q2*v_q1");
  EXPECT_EQ(Superfunction(ps.tangent).to_string(), "0");
}

TEST(Superalgebra, IdentityMorphism) {
  std::mt19937_64 rng(5);
  const auto id = AlgebraMorphism::identity(test_chart());
  for (int i = 0; i < 50; ++i) {
    const auto f = random_superfunction(test_chart(), random_parity(rng), rng);
    EXPECT_EQ(id.apply(f), f);
  }
}

TEST(Superalgebra, MorphismRejectsParityChange) {
  const auto ps = make_charts({"q"}, {"th"});
  std::vector<Superfunction> images{Superfunction::generator(ps.base, "th"), Superfunction::generator(ps.base, "th")};
  EXPECT_THROW(AlgebraMorphism(ps.base, ps.base, images), ParityError);
}

TEST(SuperalgebraProperties, Supercommutativity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const auto pf = random_parity(rng);
    const auto pg = random_parity(rng);
    const auto f = random_superfunction(test_chart(), pf, rng);
    const auto g = random_superfunction(test_chart(), pg, rng);
    ASSERT_EQ(f * g, koszul_sign(pf, pg) * (g * f)) << f.to_string() << " | " << g.to_string();
  }
}

TEST(SuperalgebraProperties, AssociativityAndDistributivity) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_superfunction(test_chart(), random_parity(rng), rng);
    const auto g = random_superfunction(test_chart(), random_parity(rng), rng);
    const auto h = random_superfunction(test_chart(), random_parity(rng), rng);
    ASSERT_EQ((f * g) * h, f * (g * h));
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ((f + g) * h, f * h + g * h);
  }
}

TEST(SuperalgebraProperties, GradedLeibniz) {
  std::mt19937_64 rng(13);
  const auto chart = test_chart();
  for (int i = 0; i < 1000; ++i) {
    const auto pf = random_parity(rng);
    const auto f = random_superfunction(chart, pf, rng);
    const auto g = random_superfunction(chart, random_parity(rng), rng);
    for (std::size_t x = 0; x < chart->size(); ++x) {
      const int s = koszul_sign(chart->parity(x), pf);
      ASSERT_EQ((f * g).left_partial(x), f.left_partial(x) * g + s * (f * g.left_partial(x)));
    }
  }
}

TEST(SuperalgebraProperties, OddPartialsAnticommute) {
  std::mt19937_64 rng(14);
  const auto chart = test_chart();
  std::vector<std::size_t> odd;
  for (std::size_t x = 0; x < chart->size(); ++x) {
    if (is_odd(chart->parity(x))) odd.push_back(x);
  }
  for (int i = 0; i < 200; ++i) {
    const auto f = random_superfunction(chart, random_parity(rng), rng, RandomPolySpec{5, 4, 5});
    for (auto a : odd) {
      EXPECT_TRUE(f.left_partial(a).left_partial(a).is_zero());
      for (auto b : odd) EXPECT_EQ(f.left_partial(b).left_partial(a), -f.left_partial(a).left_partial(b));
    }
  }
}

TEST(SuperalgebraProperties, InverseIsInverse) {
  std::mt19937_64 rng(15);
  const auto chart = test_chart();
  const auto one = Superfunction::constant(chart, 1);
  std::vector<std::size_t> odd;
  for (std::size_t x = 0; x < chart->size(); ++x) {
    if (is_odd(chart->parity(x))) odd.push_back(x);
  }
  for (int i = 0; i < 200; ++i) {
    const auto nil = random_superfunction(chart, Parity::Even, rng, RandomPolySpec{3, 4, 5}, odd);
    const auto u = Superfunction::constant(chart, random_rational(rng, 4)) + nil;
    if (u.body().is_zero()) continue;
    ASSERT_EQ(u.invert() * u, one);
  }
}
