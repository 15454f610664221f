#include "sdlab/poly/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "sdlab/poly/parser.hpp"

namespace sdlab::poly {
namespace {

const auto Q = CoefficientMode::rational();

Polynomial parse(const std::string& s, const CoefficientMode& mode = Q) {
  return parse_poly(s, VariableDeclaration::permissive(), mode);
}

TEST(Degree, NegativeInfinityIsAbsorbing) {
  EXPECT_EQ(Polynomial(Q).total_degree(), Degree::neg_inf());
  EXPECT_EQ(Degree(2) + Degree::neg_inf(), Degree::neg_inf());
  EXPECT_LT(Degree::neg_inf(), Degree(0));
  EXPECT_EQ(Degree::neg_inf().to_string(), "-inf");
}

TEST(Polynomial, CanonicalPrinting) {
  EXPECT_EQ(parse("1 - T2 + 2*X1^2*T0").to_string(), "2*X1^2*T0 - T2 + 1");
  EXPECT_EQ(parse("-X1 + 1/2").to_string(), "-X1 + 1/2");
  EXPECT_EQ(parse("X1 - X1").to_string(), "0");
  EXPECT_EQ(parse("C2_1*C1_0 + C2_0").to_string(), "C1_0*C2_1 + C2_0");
}

TEST(Polynomial, BlockDegrees) {
  const auto p = parse("X1^3*T0 + X2*T1^2*C1_0 + 5");
  EXPECT_EQ(p.total_degree(), Degree(4));
  EXPECT_EQ(p.block_degree(Block::X), Degree(3));
  EXPECT_EQ(p.block_degree(Block::T), Degree(2));
  EXPECT_EQ(p.block_degree(Block::C), Degree(1));
  EXPECT_EQ(Polynomial::constant(Q, 3).block_degree(Block::T), Degree(0));
}

TEST(Polynomial, ModesDoNotMix) {
  const auto f5 = CoefficientMode::finite_field(FiniteField::build(5, 1));
  EXPECT_THROW(parse("X1") + parse("X1", f5), IncompatibleModes);
  EXPECT_EQ(parse("7*X1 + 1/2", Q).converted(f5), parse("2*X1 + 3", f5));
  EXPECT_THROW(parse("1/5", Q).converted(f5), std::domain_error);
}

TEST(Polynomial, SubstitutionAndEvaluation) {
  const auto p = parse("X1^2 - 2*X1*T0 + T0^2");
  Assignment a{{Variable::X(1), parse("T0 + C1_0")}};
  EXPECT_EQ(p.substitute(a), parse("C1_0^2"));
  Point pt{{Variable::X(1), Scalar(Rational(3))}, {Variable::T(0), Scalar(Rational(1, 2))}};
  EXPECT_EQ(p.evaluate(pt), Scalar(Rational(25, 4)));
}

class RingLaws : public ::testing::TestWithParam<int> {};

TEST_P(RingLaws, HoldOnRandomPolynomials) {
  const CoefficientMode mode =
      GetParam() == 0 ? Q : CoefficientMode::finite_field(FiniteField::build(GetParam() == 1 ? 7 : 3, GetParam() == 1 ? 1 : 2));
  std::mt19937_64 rng(1000 + GetParam());
  const Polynomial zero(mode);
  const auto one = Polynomial::constant(mode, 1);
  for (int i = 0; i < gen::kCases; ++i) {
    const auto a = gen::polynomial(mode, rng);
    const auto b = gen::polynomial(mode, rng);
    const auto c = gen::polynomial(mode, rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
    EXPECT_EQ(a.pow(3), a * a * a);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).total_degree(), a.total_degree() + b.total_degree());
    }
  }
}

TEST_P(RingLaws, SubstitutionIsARingHomomorphism) {
  const CoefficientMode mode = GetParam() == 0 ? Q : CoefficientMode::finite_field(FiniteField::build(7, 1));
  std::mt19937_64 rng(2000 + GetParam());
  for (int i = 0; i < gen::kCases; ++i) {
    const auto a = gen::polynomial(mode, rng);
    const auto b = gen::polynomial(mode, rng);
    const Assignment s{{Variable::X(1), gen::polynomial(mode, rng, 2, 1)},
                       {Variable::T(0), gen::polynomial(mode, rng, 2, 1)}};
    EXPECT_EQ((a + b).substitute(s), a.substitute(s) + b.substitute(s));
    EXPECT_EQ((a * b).substitute(s), a.substitute(s) * b.substitute(s));
  }
}

TEST_P(RingLaws, PrintParseRoundTrip) {
  const CoefficientMode mode = GetParam() == 1 ? CoefficientMode::finite_field(FiniteField::build(7, 1)) : Q;
  std::mt19937_64 rng(3000 + GetParam());
  for (int i = 0; i < gen::kCases; ++i) {
    const auto a = gen::polynomial(mode, rng);
    EXPECT_EQ(parse(a.to_string(), mode), a) << a.to_string();
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, RingLaws, ::testing::Values(0, 1, 2));

TEST(Parser, ReportsPositionOfErrors) {
  try {
    parse("X1 + * 2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse("X1 +"), ParseError);
  EXPECT_THROW(parse("1/0"), ParseError);
  EXPECT_THROW(parse("X1^"), ParseError);
  EXPECT_THROW(parse("(X1)"), ParseError);
}

TEST(Parser, RejectsUndeclaredVariables) {
  const VariableDeclaration decl{2, 1, 0};
  EXPECT_NO_THROW(parse_poly("X2 - T1", decl));
  EXPECT_THROW(parse_poly("X3", decl), ParseError);
  EXPECT_THROW(parse_poly("T2", decl), ParseError);
  EXPECT_THROW(parse_poly("C1_0", decl), ParseError);
  EXPECT_THROW(parse_poly("X0", decl), ParseError);
}

TEST(Parser, PowersAndCoefficients) {
  EXPECT_EQ(parse("X1^2*X1"), parse("X1^3"));
  EXPECT_EQ(parse("-T0 + T1"), parse("T1 - T0"));
  EXPECT_EQ(parse("3*X1 - 3*X1 + 0"), Polynomial(Q));
  EXPECT_EQ(parse("2/4*X1"), parse("1/2*X1"));
}

TEST(Monomials, CountOfXMonomials) {
  // C(bound + m, m)
  EXPECT_EQ(x_monomials_up_to(1, 1).size(), 2u);
  EXPECT_EQ(x_monomials_up_to(2, 3).size(), 10u);
  EXPECT_EQ(x_monomials_up_to(3, 2).size(), 10u);
  EXPECT_EQ(x_monomials_up_to(0, 4).size(), 1u);
}

}  // namespace
}  // namespace sdlab::poly
