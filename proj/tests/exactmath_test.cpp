#include "liecas/matrix.hpp"
#include "liecas/parse.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liecas;

namespace {

RatFunc P(const std::string& s, const std::vector<std::string>& vars = {"p", "q", "a", "b", "c", "d", "e", "f"}) {
  return parse_scalar(s, vars);
}

ExactMatrix M(std::size_t r, std::size_t c, const std::vector<std::string>& entries) {
  std::vector<RatFunc> d;
  for (const auto& e : entries) d.push_back(P(e));
  return ExactMatrix(r, c, d);
}

}  // namespace

TEST(Parse, NormalizesRationals) {
  EXPECT_EQ(P("2/4"), RatFunc(Rational(1, 2)));
  EXPECT_EQ(P("2/4").str(), "1/2");
}

TEST(Parse, Polynomial) {
  RatFunc f = P("p^2 - 1");
  ASSERT_TRUE(f.is_polynomial());
  EXPECT_EQ(f.num().size(), 2u);
  EXPECT_EQ(f.str(), "p^2 - 1");
}

TEST(Parse, RationalFunctionHasPositiveLeadingDenominator) {
  RatFunc f = P("(1-p)/(1+p)");
  EXPECT_EQ(f.den().str(), "p + 1");
  EXPECT_EQ(f.num().str(), "-p + 1");
  EXPECT_EQ(P("(p-1)/(-1-p)"), f);
}

TEST(Parse, SelfQuotientIsOne) {
  EXPECT_TRUE(P("(p^2+q)/(q+p*p)").is_one());
  EXPECT_EQ(P("(p^2-1)/(p+1)"), P("p-1"));
}

TEST(Parse, UnaryMinusAndPower) {
  EXPECT_EQ(P("-p^2"), -P("p*p"));
  EXPECT_EQ(P("(-p)^2"), P("p*p"));
  EXPECT_EQ(P("--p"), P("p"));
  EXPECT_EQ(P("2^0"), RatFunc(1));
}

TEST(Parse, Errors) {
  try {
    P("p + * 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
  EXPECT_THROW(P("z + 1"), ParseError);
  EXPECT_THROW(P("1/(p-p)"), ParseError);
  EXPECT_THROW(P("(p"), ParseError);
  EXPECT_THROW(P("p^-1"), ParseError);
  EXPECT_THROW(parse_scalar("X_charpoly", {"X_charpoly"}), ParseError);
  EXPECT_THROW(P(""), ParseError);
}

TEST(Gcd, Multivariate) {
  MPoly x = P("p").num(), y = P("q").num();
  MPoly a = (x + y) * (x - y) * (x * y + MPoly(3));
  MPoly b = (x + y) * (x * y + MPoly(3)) * (x + MPoly(2));
  EXPECT_EQ(gcd(a, b), ((x + y) * (x * y + MPoly(3))).primitive());
  EXPECT_EQ(gcd(x, y), MPoly(1));
  EXPECT_EQ(P("(p^2*q - q)/(p*q + q)"), P("p - 1"));
}

TEST(Kernel, ZeroMatrix) {
  auto k = kernel_basis(ExactMatrix(2, 2));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], unit_vec(2, 0));
  EXPECT_EQ(k[1], unit_vec(2, 1));
}

TEST(Kernel, ProportionalRows) {
  auto k = kernel_basis(M(2, 2, {"1", "p", "p", "p^2"}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (Vec{P("-p"), P("1")}));
}

TEST(Bareiss, Examples) {
  MPoly x2 = MPoly::variable("x2"), x1 = MPoly::variable("x1");
  EXPECT_EQ(rank_bareiss(PolyMatrix(2, 2, {MPoly(0), x2, -x2, MPoly(0)})), 2u);
  EXPECT_EQ(rank_bareiss(PolyMatrix(2, 2, {x1, MPoly(0), MPoly(0), MPoly(0)})), 1u);
  EXPECT_EQ(rank_bareiss(PolyMatrix(0, 0)), 0u);
}

TEST(CharPoly, Identity) {
  RatFunc X = RatFunc::variable(kCharPolyVariable);
  EXPECT_EQ(char_poly(ExactMatrix::identity(2)), (X - RatFunc(1)).pow(2));
  EXPECT_THROW(char_poly(ExactMatrix(2, 3)), MathError);
}

TEST(Pfaffian, Examples) {
  EXPECT_EQ(pfaffian(M(2, 2, {"0", "a", "-a", "0"})), P("a"));
  auto m4 = M(4, 4, {"0", "a", "b", "c", "-a", "0", "d", "e", "-b", "-d", "0", "f", "-c", "-e", "-f", "0"});
  EXPECT_EQ(pfaffian(m4), P("a*f - b*e + c*d"));
  EXPECT_THROW(pfaffian(ExactMatrix(3, 3)), MathError);
  EXPECT_THROW(pfaffian(M(2, 2, {"0", "1", "1", "0"})), MathError);
}

TEST(Pfaffian, PairingFormMatchesMatchingSum) {
  ExactMatrix g(8, 8);
  for (std::size_t i = 0; i < 4; ++i) {
    g(i, i + 4) = RatFunc(1);
    g(i + 4, i) = RatFunc(-1);
  }
  RatFunc oracle = testing_support::pfaffian_by_matchings(g);
  EXPECT_EQ(oracle, RatFunc(1));
  EXPECT_EQ(pfaffian(g), oracle);
}

// ---- properties

TEST(Property, RankAgreesWithKernel) {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    ExactMatrix m = testing_support::random_rational_matrix(rng, 4, 4, t % 3);
    PolyMatrix pm = clear_denominators(m);
    EXPECT_EQ(rank_bareiss(pm), m.cols() - kernel_basis(m).size());
    EXPECT_EQ(rank(m), rank_bareiss(pm));
  }
}

TEST(Property, KernelVectorsAnnihilate) {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    ExactMatrix m = testing_support::random_poly_matrix(rng, 3, 5, {"p"});
    for (const auto& v : kernel_basis(m)) EXPECT_TRUE(is_zero_vec(m.apply(v)));
  }
}

TEST(Property, PfaffianSquaredIsDeterminant) {
  std::mt19937 rng(3);
  for (std::size_t n : {4u, 6u}) {
    for (int t = 0; t < 10; ++t) {
      ExactMatrix q = testing_support::random_skew(rng, n, {});
      EXPECT_EQ(pfaffian(q).pow(2), determinant(q));
      ExactMatrix pq = testing_support::random_skew(rng, n, {"p"});
      RatFunc pf = pfaffian(pq);
      EXPECT_EQ(pf * pf, determinant(pq));
      EXPECT_EQ(pf, testing_support::pfaffian_by_matchings(pq));
    }
  }
}

TEST(Property, FieldAxioms) {
  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    RatFunc a = testing_support::random_ratfunc(rng, {"p", "q"});
    RatFunc b = testing_support::random_ratfunc(rng, {"p", "q"});
    RatFunc c = testing_support::random_ratfunc(rng, {"p", "q"});
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, RatFunc(0));
    if (!a.is_zero()) EXPECT_TRUE((a / a).is_one());
  }
}

TEST(Property, PrintParseRoundTrip) {
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    RatFunc a = testing_support::random_ratfunc(rng, {"p", "q"});
    EXPECT_EQ(P(a.str()), a) << a.str();
  }
}

TEST(Property, DeterminantIsMultiplicative) {
  std::mt19937 rng(13);
  for (int t = 0; t < 10; ++t) {
    ExactMatrix a = testing_support::random_poly_matrix(rng, 3, 3, {"p"});
    ExactMatrix b = testing_support::random_poly_matrix(rng, 3, 3, {"p"});
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}
