#include <gtest/gtest.h>

#include <random>

#include "qgroth/polyring.hpp"
#include "support.hpp"

namespace qgroth {
namespace {

constexpr size_t kIterations = 1000;

MultiPoly P(const char* s) { return parse_poly(s); }

class PolyringRandom : public ::testing::Test {
 protected:
  std::mt19937 rng_{20240601};
  MultiPoly random() {
    return testing::random_poly(rng_, 3, 4,
                                {VarKind::X, VarKind::Y, VarKind::Beta, VarKind::Q});
  }
};

TEST(Variable, NamesRoundTrip) {
  for (const Variable v : {Variable::x(1), Variable::y(8), Variable::z(3),
                           Variable::beta(), Variable::q(7)}) {
    EXPECT_EQ(Variable::parse(v.name()), v);
    EXPECT_EQ(Variable::from_slot(v.slot()), v);
  }
  EXPECT_EQ(Variable::beta().name(), "b");
  EXPECT_THROW(Variable::parse("x9"), std::invalid_argument);
  EXPECT_THROW(Variable::parse("w1"), std::invalid_argument);
}

TEST(Monomial, OrderIsGradedInXThenLex) {
  const Monomial x1(Variable::x(1)), x2(Variable::x(2)), y1(Variable::y(1));
  EXPECT_LT(x1, x2);
  EXPECT_LT(y1, x1);  // x-degree dominates
  EXPECT_LT(Monomial(Variable::x(2), 1), Monomial(Variable::x(1), 2));
  EXPECT_LT(Monomial(), y1);
}

TEST(Monomial, Division) {
  const Monomial a = Monomial(Variable::x(1), 2) * Monomial(Variable::y(2));
  const Monomial b(Variable::x(1));
  EXPECT_TRUE(b.divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_THROW(b / a, std::domain_error);
}

TEST(Arith, Distributivity) {
  EXPECT_EQ(P("(x1+y1)*(1-b*y1)"), P("x1 + y1 - b*x1*y1 - b*y1^2"));
  EXPECT_EQ(P("x1+y1") * MultiPoly(), MultiPoly());
  EXPECT_TRUE((P("x1") - P("x1")).is_zero());
}

TEST(Arith, BigCoefficients) {
  const MultiPoly f = P("2*x1 + 3").pow(80);
  mpz_class three80;
  mpz_ui_pow_ui(three80.get_mpz_t(), 3, 80);
  EXPECT_EQ(f.coefficient(Monomial()), three80);
  EXPECT_EQ(f.degree(), 80u);
}

TEST_F(PolyringRandom, MultiplicationMatchesNaiveOracle) {
  for (size_t i = 0; i < kIterations; ++i) {
    const MultiPoly a = random(), b = random();
    ASSERT_EQ(a * b, testing::naive_multiply(a, b));
  }
}

TEST_F(PolyringRandom, RingAxioms) {
  for (size_t i = 0; i < kIterations; ++i) {
    const MultiPoly a = random(), b = random(), c = random();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, MultiPoly());
    ASSERT_EQ(a * constant(1), a);
  }
}

TEST_F(PolyringRandom, TextAndJsonRoundTrip) {
  for (size_t i = 0; i < kIterations; ++i) {
    const MultiPoly a = random();
    ASSERT_EQ(parse_poly(to_text(a)), a) << to_text(a);
    ASSERT_EQ(poly_from_json(to_json(a)), a);
    ASSERT_EQ(poly_from_json(nlohmann::json::parse(to_json(a).dump())), a);
    ASSERT_EQ(a.canonicalized(), a);
  }
}

TEST_F(PolyringRandom, SubstitutionIsAHomomorphism) {
  for (size_t i = 0; i < kIterations / 4; ++i) {
    const MultiPoly a = random(), b = random();
    const std::map<Variable, MultiPoly> s{{Variable::x(1), random()},
                                          {Variable::y(2), random()}};
    ASSERT_EQ(substitute(a * b, s), substitute(a, s) * substitute(b, s));
    ASSERT_EQ(substitute(a + b, s), substitute(a, s) + substitute(b, s));
  }
}

TEST_F(PolyringRandom, ExactDivisionInvertsMultiplication) {
  for (size_t i = 0; i < kIterations / 4; ++i) {
    const MultiPoly a = random(), b = random();
    if (b.is_zero()) continue;
    ASSERT_EQ(exact_divide(a * b, b), a);
  }
  EXPECT_THROW(exact_divide(P("x1"), P("x2")), std::domain_error);
}

TEST(Parse, Syntax) {
  EXPECT_EQ(P("(x1+y1)(1-b*y2)"), P("(x1+y1)*(1-b*y2)"));
  EXPECT_EQ(P("q1(x1+y2)"), P("q1*x1 + q1*y2"));
  EXPECT_EQ(P("2x1"), P("2*x1"));
  EXPECT_EQ(P("-(x1-1)^2"), P("-x1^2 + 2*x1 - 1"));
  EXPECT_EQ(P("0"), MultiPoly());
  EXPECT_THROW(parse_poly("x1 +"), std::invalid_argument);
  EXPECT_THROW(parse_poly("(x1"), std::invalid_argument);
  EXPECT_THROW(parse_poly("t1"), std::invalid_argument);
}

TEST(Render, TextAndLatex) {
  EXPECT_EQ(to_text(P("1 - b*x1*y1")), "-b*x1*y1 + 1");
  EXPECT_EQ(to_text(MultiPoly()), "0");
  EXPECT_EQ(to_latex(P("x1^2 + b*q1")), "x_{1}^{2} + \\beta q_{1}");
}

TEST(Json, Schema) {
  const auto j = to_json(P("3*x1^2*y2"));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["coef"], "3");
  EXPECT_EQ(j[0]["monomial"]["x1"], 2);
  EXPECT_EQ(j[0]["monomial"]["y2"], 1);
  EXPECT_THROW(poly_from_json(nlohmann::json{{"coef", "1"}}), std::invalid_argument);
}

TEST(Substitute, RationalBindings) {
  const Variable y1 = Variable::y(1), z1 = Variable::z(1);
  const RatExpr a = substitute(yv(1), std::map<Variable, RatExpr>{{y1, ominus(z1)}});
  EXPECT_EQ(a.num, -zv(1));
  EXPECT_EQ(a.den, (std::map<Variable, unsigned>{{z1, 1}}));

  const RatExpr b = substitute(yv(1).pow(2), std::map<Variable, RatExpr>{{y1, ominus(z1)}});
  EXPECT_EQ(b.num, zv(1).pow(2));
  EXPECT_EQ(b.den, (std::map<Variable, unsigned>{{z1, 2}}));

  EXPECT_EQ(substitute(P("x1+y1"), std::map<Variable, MultiPoly>{{y1, MultiPoly()}}), xv(1));
}

TEST(Substitute, MixedDegreesClearToCommonDenominator) {
  const Variable y1 = Variable::y(1), z1 = Variable::z(1);
  const RatExpr r = substitute(P("1 + y1^2"), std::map<Variable, RatExpr>{{y1, ominus(z1)}});
  // 1 + z^2/(1-bz)^2
  EXPECT_TRUE(rat_eq(r, RatExpr(P("(1-b*z1)^2 + z1^2"), {{z1, 2}})));
}

TEST(RatEq, Basics) {
  const Variable z1 = Variable::z(1);
  EXPECT_TRUE(rat_eq(RatExpr(zv(1), {{z1, 1}}), RatExpr(zv(1), {{z1, 1}})));
  EXPECT_TRUE(rat_eq(RatExpr(P("z1*(1-b*z1)"), {{z1, 1}}), RatExpr(zv(1))));
  EXPECT_FALSE(rat_eq(RatExpr(-zv(1), {{z1, 1}}), RatExpr(zv(1), {{z1, 1}})));
}

TEST(RatExprArith, AgreesWithCrossMultiplication) {
  const Variable z1 = Variable::z(1), z2 = Variable::z(2);
  const RatExpr a(P("x1"), {{z1, 1}}), b(P("x2"), {{z2, 2}});
  const RatExpr s = a + b;
  EXPECT_TRUE(rat_eq(s, RatExpr(P("x1*(1-b*z2)^2 + x2*(1-b*z1)"), {{z1, 1}, {z2, 2}})));
  EXPECT_TRUE(rat_eq(a * b, RatExpr(P("x1*x2"), {{z1, 1}, {z2, 2}})));
  EXPECT_TRUE(rat_eq(a - a, RatExpr()));
}

TEST(Specialize, Examples) {
  EXPECT_EQ(specialize(P("(1-b*y1)(1-b*y2)+q1*b^2"), 0L, std::nullopt), constant(1));
  EXPECT_EQ(specialize(P("x1+y2"), 0L, std::nullopt), P("x1+y2"));
  EXPECT_EQ(specialize(P("(x1+y1)(x1+y2)(x2+y1)+q1(x1+y2)"), std::nullopt,
                       std::vector<long>{0}),
            P("(x1+y1)(x1+y2)(x2+y1)"));
  EXPECT_EQ(specialize(P("b*q1*q2"), 2L, std::vector<long>{3, -1}), constant(-6));
}

TEST(BetaWeightedSub, Examples) {
  EXPECT_EQ(beta_weighted_sub(yv(1), 1), constant(1));
  EXPECT_EQ(beta_weighted_sub(P("x1+y1"), 1), P("b*x1 + 1"));
  EXPECT_EQ(beta_weighted_sub(P("y1*y2"), 3), beta());
  EXPECT_THROW(beta_weighted_sub(P("y1^2"), 1), std::domain_error);
}

TEST(Alphabets, RenameAndKill) {
  EXPECT_EQ(rename_alphabets(P("x1*y2 + b"), {{VarKind::X, VarKind::Y}, {VarKind::Y, VarKind::Z}}),
            P("y1*z2 + b"));
  EXPECT_EQ(kill(P("x1*y2 + x2 + y1"), VarKind::Y), P("x2"));
  EXPECT_TRUE(P("x1+b").free_of(VarKind::Y));
  EXPECT_EQ(P("x1^2*y1 + x2").degree(VarKind::X), 2u);
}

TEST(Split, GroupsByAlphabet) {
  const MultiPoly f = P("x1*y1 + 2*x1*b + x2");
  const auto parts = f.split_by(VarKind::X);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(Monomial(Variable::x(1))), P("y1 + 2*b"));
  MultiPoly back;
  for (const auto& [m, c] : parts) back += c.mul_monomial(m);
  EXPECT_EQ(back, f);
}

}  // namespace
}  // namespace qgroth
