#include <gtest/gtest.h>

#include <random>

#include "superlag/charts.hpp"
#include "superlag/error.hpp"
#include "superlag/forms.hpp"
#include "superlag/lagrangian.hpp"
#include "superlag/random.hpp"
#include "superlag/vector_field.hpp"
#include "support/families.hpp"

using namespace superlag;

namespace {

Parity random_parity(std::mt19937_64& rng) { return draw_below(rng, 2) ? Parity::Odd : Parity::Even; }

VectorField random_field(const ChartPtr& chart, Parity parity, std::mt19937_64& rng) {
  VectorField x(chart);
  for (std::size_t a = 0; a < chart->size(); ++a) {
    x.set_component(a, random_superfunction(chart, parity + chart->parity(a), rng));
  }
  return x;
}

std::vector<std::string> names(const Chart& c) {
  std::vector<std::string> out;
  for (const auto& g : c.generators()) out.push_back(g.name);
  return out;
}

}  // namespace

TEST(Charts, GeneratorLayout) {
  const auto a = make_charts({"q1", "q2"}, {});
  EXPECT_EQ(names(*a.tangent), (std::vector<std::string>{"q1", "q2", "v_q1", "v_q2"}));
  for (const auto& g : a.tangent->generators()) EXPECT_EQ(g.parity, Parity::Even);
  const auto b = make_charts({}, {"th"});
  EXPECT_EQ(names(*b.cotangent), (std::vector<std::string>{"th", "eta_th"}));
  for (const auto& g : b.cotangent->generators()) EXPECT_EQ(g.parity, Parity::Odd);
}

TEST(Charts, RejectsBadNames) {
  EXPECT_THROW(make_charts({"v_q"}, {}), Error);
  EXPECT_THROW(make_charts({"q"}, {"q"}), Error);
  EXPECT_THROW(make_charts({"1q"}, {}), Error);
}

TEST(Charts, CanonicalTwoFormBlocks) {
  const auto ps = make_charts({"q"}, {"th"});
  const auto& c = *ps.cotangent;
  const auto q = c.index_of("q");
  const auto p = c.index_of("p_q");
  const auto th = c.index_of("th");
  const auto eta = c.index_of("eta_th");
  int nonzero = 0;
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a; b < c.size(); ++b) {
      if (!ps.omega0.wedge_coefficient(a, b).is_zero()) ++nonzero;
    }
  }
  EXPECT_EQ(nonzero, 2);
  EXPECT_EQ(ps.omega0.wedge_coefficient(q, p), Superfunction::constant(ps.cotangent, 1));
  EXPECT_EQ(ps.omega0.entry(eta, th), Superfunction::constant(ps.cotangent, -1));
  EXPECT_EQ(ps.omega0.wedge_coefficient(th, eta), Superfunction::constant(ps.cotangent, -1));
  EXPECT_EQ(exterior_derivative(ps.theta0), -ps.omega0);
  EXPECT_TRUE(ps.omega0.is_graded_antisymmetric());
}

TEST(Forms, DifferentialExamples) {
  const auto ps = make_charts({"q"}, {"th1", "th2"});
  const auto& m = ps.base;
  const auto q = Superfunction::generator(m, "q");
  const auto t1 = Superfunction::generator(m, "th1");
  const auto t2 = Superfunction::generator(m, "th2");
  EXPECT_EQ(differential(q * q).to_string(), "dq*(2*q)");
  OneForm expected(m);
  expected.set_coefficient(m->index_of("th1"), t2);
  expected.set_coefficient(m->index_of("th2"), -t1);
  EXPECT_EQ(differential(t1 * t2), expected);
}

TEST(Forms, ExteriorDerivativeExamples) {
  const auto ps = make_charts({"q"}, {});
  const auto& c = ps.cotangent;
  OneForm a(c);
  a.set_coefficient(c->index_of("q"), Superfunction::generator(c, "p_q"));
  const auto w = exterior_derivative(a);
  EXPECT_EQ(w.wedge_coefficient(c->index_of("q"), c->index_of("p_q")), Superfunction::constant(c, -1));
  OneForm b(c);
  b.set_coefficient(c->index_of("q"), Superfunction::generator(c, "q"));
  EXPECT_TRUE(exterior_derivative(b).is_zero());
}

TEST(Forms, InteriorExamples) {
  const auto ps = make_charts({"q"}, {});
  const auto& c = ps.cotangent;
  const auto x = VectorField::coordinate(c, c->index_of("q"));
  OneForm dp(c);
  dp.set_coefficient(c->index_of("p_q"), Superfunction::constant(c, 1));
  EXPECT_EQ(interior(x, ps.omega0), dp);
}

TEST(Forms, VerticalLiftAndEndomorphism) {
  const auto ps = make_charts({"q"}, {"th"});
  const auto& tm = ps.tangent;
  const auto lifted = vertical_lift(ps, VectorField::coordinate(ps.base, ps.base->index_of("q")));
  EXPECT_EQ(lifted, VectorField::coordinate(tm, tm->index_of("v_q")));
  const auto delta = liouville_field(ps);
  EXPECT_EQ(delta.component(tm->index_of("v_q")), Superfunction::generator(tm, "v_q"));
  EXPECT_EQ(delta.component(tm->index_of("zeta_th")), Superfunction::generator(tm, "zeta_th"));
  EXPECT_EQ(vertical_endomorphism(ps, VectorField::coordinate(tm, tm->index_of("q"))),
            VectorField::coordinate(tm, tm->index_of("v_q")));
  EXPECT_TRUE(vertical_endomorphism(ps, VectorField::coordinate(tm, tm->index_of("v_q"))).is_zero());
}

TEST(Forms, TotalTimeDerivative) {
  const auto ps = make_charts({"q1"}, {"th"});
  const auto t = total_time_derivative(ps);
  const auto g = [&](const char* n) { return Superfunction::generator(ps.base, n); };
  const auto h = [&](const char* n) { return Superfunction::generator(ps.tangent, n); };
  EXPECT_EQ(t.apply(g("q1")), h("v_q1"));
  EXPECT_EQ(t.apply(g("th")), h("zeta_th"));
  EXPECT_EQ(t.apply(g("q1") * g("th")), h("v_q1") * h("th") + h("q1") * h("zeta_th"));
}

TEST(Forms, VerticalLiftActsOnVelocityLift) {
  std::mt19937_64 rng(31);
  const auto ps = make_charts({"q"}, {"th"});
  const auto q = Superfunction::generator(ps.base, "q");
  const auto x = q * VectorField::coordinate(ps.base, ps.base->index_of("q"));
  const auto xv = vertical_lift(ps, x);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_superfunction(ps.base, random_parity(rng), rng, RandomPolySpec{4, 3, 5});
    EXPECT_EQ(xv.apply(velocity_lift(ps, f)), ps.tau_star.apply(x.apply(f)));
  }
}

TEST(FormsProperties, InteriorOfDifferential) {
  std::mt19937_64 rng(32);
  const auto ps = make_charts({"q", "r"}, {"th1", "th2"});
  for (int i = 0; i < 100; ++i) {
    const auto x = random_field(ps.tangent, random_parity(rng), rng);
    const auto f = random_superfunction(ps.tangent, random_parity(rng), rng);
    ASSERT_EQ(interior(x, differential(f)), x.apply(f));
  }
}

TEST(FormsProperties, DSquaredVanishes) {
  std::mt19937_64 rng(33);
  const auto ps = make_charts({"q", "r"}, {"th1", "th2"});
  for (int i = 0; i < 500; ++i) {
    const auto f = random_superfunction(ps.tangent, random_parity(rng), rng, RandomPolySpec{4, 3, 5});
    ASSERT_TRUE(exterior_derivative(differential(f)).is_zero()) << f.to_string();
  }
}

TEST(FormsProperties, VerticalEndomorphismSquaresToZero) {
  std::mt19937_64 rng(34);
  const auto ps = make_charts({"q", "r"}, {"th1", "th2"});
  for (int i = 0; i < 500; ++i) {
    const auto y = random_field(ps.tangent, random_parity(rng), rng);
    ASSERT_TRUE(vertical_endomorphism(ps, vertical_endomorphism(ps, y)).is_zero());
  }
}

TEST(FormsProperties, VerticalEndomorphismOfSecondOrderFieldIsLiouville) {
  std::mt19937_64 rng(35);
  const auto ps = make_charts({"q"}, {"th"});
  VectorField g(ps.tangent);
  for (std::size_t k = 0; k < ps.base_count(); ++k) {
    g.set_component(ps.position_index(k), Superfunction::generator(ps.tangent, ps.fiber_index(k)));
    g.set_component(ps.fiber_index(k), random_superfunction(ps.tangent, ps.tangent->parity(ps.fiber_index(k)), rng));
  }
  EXPECT_EQ(vertical_endomorphism(ps, g), liouville_field(ps));
}

TEST(FormsProperties, CartanFormSkewsVerticalEndomorphism) {
  // omega_L(X, S(U)) = -omega_L(S(X), U)
  std::mt19937_64 rng(36);
  for (int i = 0; i < 200; ++i) {
    const auto rp = families::random_cubic_problem(rng);
    const auto p = build_problem(rp.charts, rp.lagrangian);
    const auto x = random_field(rp.charts.tangent, random_parity(rng), rng);
    const auto u = random_field(rp.charts.tangent, random_parity(rng), rng);
    const auto& s = rp.charts;
    ASSERT_EQ(evaluate(p.omega_L, x, vertical_endomorphism(s, u)), -evaluate(p.omega_L, vertical_endomorphism(s, x), u));
  }
}

TEST(FormsProperties, ConstructedTwoFormsAreGradedAntisymmetric) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    const auto rp = families::random_cubic_problem(rng);
    const auto p = build_problem(rp.charts, rp.lagrangian);
    EXPECT_TRUE(p.omega_L.is_graded_antisymmetric());
    EXPECT_TRUE(rp.charts.omega0.is_graded_antisymmetric());
  }
}

TEST(FormsProperties, BracketOfFieldsIsDerivation) {
  std::mt19937_64 rng(38);
  const auto ps = make_charts({"q"}, {"th1", "th2"});
  for (int i = 0; i < 100; ++i) {
    const auto px = random_parity(rng);
    const auto py = random_parity(rng);
    const auto x = random_field(ps.base, px, rng);
    const auto y = random_field(ps.base, py, rng);
    const auto f = random_superfunction(ps.base, random_parity(rng), rng);
    const auto lhs = bracket(x, y).apply(f);
    const auto rhs = x.apply(y.apply(f)) - koszul_sign(px, py) * y.apply(x.apply(f));
    ASSERT_EQ(lhs, rhs);
  }
}
