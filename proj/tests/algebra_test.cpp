#include "fixtures.hpp"
#include "test_support.hpp"

#include "liecas/symplectic.hpp"

#include <gtest/gtest.h>

using namespace liecas;
using fixtures::alg;
using fixtures::form;

namespace {

// Cyclic-sum differential, written out independently of ce_d.
AltForm d_oracle(const LieAlgebra& g, const AltForm& a) {
  std::size_t n = g.dim();
  auto e = [&](std::size_t i) { return unit_vec(n, i); };
  if (a.degree() == 1) {
    AltForm out(2, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out.add({i, j}, -a.evaluate({g.bracket(i, j)}));
    return out;
  }
  AltForm out(3, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        out.add({i, j, k}, -(a.evaluate({g.bracket(i, j), e(k)}) + a.evaluate({g.bracket(j, k), e(i)}) +
                             a.evaluate({g.bracket(k, i), e(j)})));
  return out;
}

AltForm parse_form(std::size_t n, const std::string& text) {
  std::string src = "algebra t\ndim " + std::to_string(n) + "\nform w on t : " + text + "\n";
  return parse_source(src).form("w")->form;
}

LieAlgebra with_center(const LieAlgebra& g, std::size_t extra) {
  return direct_sum(g, build_algebra(extra, {}, {}));
}

}  // namespace

// ---------------------------------------------------------------- liealg

TEST(LieAlg, SmallAlgebrasSatisfyJacobi) {
  for (const auto& a : fixtures::small().algebras) EXPECT_TRUE(jacobi_defects(a.algebra).empty()) << a.name;
}

TEST(LieAlg, JacobiViolationReportsTripleAndDefect) {
  std::vector<BracketEntry> br = {{0, 1, unit_vec(3, 0)}, {0, 2, unit_vec(3, 1)}};
  try {
    build_algebra(3, {}, br);
    FAIL() << "expected a Jacobi error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("(e1, e2, e3)"), std::string::npos) << e.what();
  }
  auto g = build_algebra(3, {}, br, JacobiMode::Defer);
  auto defects = jacobi_defects(g);
  ASSERT_EQ(defects.size(), 1u);
  // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e1,e3] - [e2,e2] = e2
  EXPECT_EQ(defects[0].defect, unit_vec(3, 1));
}

TEST(LieAlg, DuplicateAndDiagonalEntriesRejected) {
  EXPECT_THROW(build_algebra(2, {}, {{0, 1, unit_vec(2, 1)}, {1, 0, unit_vec(2, 1)}}), ValidationError);
  EXPECT_THROW(build_algebra(2, {}, {{0, 0, unit_vec(2, 1)}}), ValidationError);
  EXPECT_THROW(build_algebra(2, {}, {{0, 2, unit_vec(2, 1)}}), ValidationError);
}

TEST(LieAlg, Unimodularity) {
  EXPECT_TRUE(is_unimodular(alg("so3")));
  EXPECT_TRUE(is_unimodular(alg("sl2")));
  EXPECT_FALSE(is_unimodular(alg("aff1")));
  EXPECT_FALSE(is_unimodular(alg("aff2")));
}

TEST(LieAlg, Center) {
  EXPECT_EQ(center(alg("so3")).dim(), 0u);
  EXPECT_EQ(center(with_center(alg("so3"), 1)).dim(), 1u);
  EXPECT_EQ(center(alg("ab2")).dim(), 2u);
}

TEST(LieAlg, Derived) {
  EXPECT_EQ(derived(alg("ab2")).dim(), 0u);
  EXPECT_EQ(derived(alg("sl2")).dim(), 3u);
  Subspace d = derived(alg("aff1"));
  EXPECT_EQ(d, Subspace::span(2, {unit_vec(2, 1)}));
}

TEST(LieAlg, DirectSumCenterIsAdditive) {
  const auto& names = {"sl2", "so3", "aff1", "ab2", "aff2"};
  for (const char* a : names)
    for (const char* b : names) {
      auto s = direct_sum(alg(a), alg(b));
      EXPECT_TRUE(jacobi_defects(s).empty());
      EXPECT_EQ(center(s).dim(), center(alg(a)).dim() + center(alg(b)).dim()) << a << " + " << b;
    }
}

TEST(LieAlg, SemidirectWithZeroActionIsDirectSum) {
  const auto& g = alg("sl2");
  const auto& h = alg("aff1");
  std::vector<ExactMatrix> zero(3, ExactMatrix(2, 2));
  EXPECT_EQ(semidirect(g, h, zero), direct_sum(g, h));
}

TEST(LieAlg, SemidirectRejectsNonDerivationAction) {
  // so3 acting on R^2 by an arbitrary non-representation.
  std::vector<ExactMatrix> act(3, ExactMatrix(2, 2));
  act[0](0, 1) = RatFunc(1);
  EXPECT_THROW(semidirect(alg("so3"), alg("ab2"), act), ValidationError);
}

TEST(LieAlg, SpecializeKeepsOtherParameters) {
  auto g = build_algebra(2, {"p", "q"}, {{0, 1, {RatFunc(0), RatFunc::variable("p") + RatFunc::variable("q")}}});
  auto s = specialize(g, {{"p", Rational(2)}});
  EXPECT_EQ(s.bracket(0, 1)[1], RatFunc(2) + RatFunc::variable("q"));
}

// ---------------------------------------------------------------- ceforms

TEST(CeForms, DifferentialExamples) {
  EXPECT_EQ(ce_d(alg("aff1"), basis_form(2, {1})), parse_form(2, "-e1^e2"));
  EXPECT_TRUE(ce_d(alg("aff2"), form("w_aff2")).is_zero());
  EXPECT_EQ(ce_d(alg("sl2"), basis_form(3, {0})), parse_form(3, "2*e1^e3"));
}

TEST(CeForms, DifferentialMatchesCyclicSumOracle) {
  for (const auto& a : fixtures::small().algebras) {
    const auto& g = a.algebra;
    for (std::size_t k = 1; k <= 2 && k < g.dim(); ++k)
      for (const auto& t : index_tuples(g.dim(), k)) {
        AltForm b = basis_form(g.dim(), t);
        EXPECT_EQ(ce_d(g, b), d_oracle(g, b)) << a.name << " " << b.str();
      }
  }
}

TEST(CeForms, DSquaredIsZero) {
  for (const auto& a : fixtures::small().algebras) {
    const auto& g = a.algebra;
    for (std::size_t k = 1; k <= 2; ++k)
      for (const auto& t : index_tuples(g.dim(), k))
        EXPECT_TRUE(ce_d(g, ce_d(g, basis_form(g.dim(), t))).is_zero()) << a.name;
  }
}

TEST(CeForms, WedgeExamples) {
  AltForm e1 = basis_form(4, {0}), e2 = basis_form(4, {1});
  EXPECT_EQ(wedge(e1, e2), basis_form(4, {0, 1}));
  EXPECT_TRUE(wedge(basis_form(4, {0, 1}), basis_form(4, {0, 1})).is_zero());
  AltForm w = parse_form(4, "e1^e2 + e3^e4");
  EXPECT_EQ(wedge(w, w), parse_form(4, "2*e1^e2^e3^e4"));
}

TEST(CeForms, FourthPowerOfCanonicalPairing) {
  AltForm w0 = parse_form(8, "e1^e5 + e2^e6 + e3^e7 + e4^e8");
  AltForm p = wedge(wedge(w0, w0), wedge(w0, w0));
  // Oracle: w^4 = 4! * Pf(G) * vol, with the Pfaffian from the matching sum.
  RatFunc pf = testing_support::pfaffian_by_matchings(form_gram(w0));
  EXPECT_EQ(p.coeff({0, 1, 2, 3, 4, 5, 6, 7}), RatFunc(24) * pf);
  EXPECT_EQ(p.coeffs().size(), 1u);
}

TEST(CeForms, WedgeGradedCommutativeAndDerivation) {
  std::mt19937 rng(7);
  const auto& g = alg("aff2");
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t k = 1 + trial % 2, l = 1 + (trial / 2) % 2;
    AltForm a(k, 6), b(l, 6);
    for (const auto& t : index_tuples(6, k)) a.add(t, RatFunc(testing_support::random_rational(rng, 2)));
    for (const auto& t : index_tuples(6, l)) b.add(t, RatFunc(testing_support::random_rational(rng, 2)));
    int sign = (k * l) % 2 ? -1 : 1;
    EXPECT_EQ(wedge(a, b), wedge(b, a).scaled(RatFunc(sign)));
    AltForm lhs = ce_d(g, wedge(a, b));
    AltForm rhs = wedge(ce_d(g, a), b) + wedge(a, ce_d(g, b)).scaled(RatFunc(k % 2 ? -1 : 1));
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(CeForms, GramAndNondegeneracy) {
  AltForm w0 = parse_form(8, "e1^e5 + e2^e6 + e3^e7 + e4^e8");
  EXPECT_TRUE(is_nondegenerate(8, w0));
  EXPECT_FALSE(is_nondegenerate(8, parse_form(8, "e1^e5 + e2^e6 + e3^e7")));
  EXPECT_FALSE(is_nondegenerate(3, parse_form(3, "e1^e2")));
  ExactMatrix g = form_gram(parse_form(2, "3*e1^e2"));
  EXPECT_EQ(g(0, 1), RatFunc(3));
  EXPECT_EQ(g(1, 0), RatFunc(-3));
  EXPECT_EQ(form_from_gram(g), parse_form(2, "3*e1^e2"));
}

TEST(CeForms, Primitives) {
  EXPECT_FALSE(find_primitive(alg("ab2"), parse_form(2, "e1^e2")).has_value());
  auto b = find_primitive(alg("aff1"), form("w_aff1"));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(*b, parse_form(2, "-e2"));
  EXPECT_EQ(ce_d(alg("aff1"), *b), form("w_aff1"));
  // d(e^23) = -e^123 on aff1 + R.
  EXPECT_THROW(find_primitive(with_center(alg("aff1"), 1), parse_form(3, "e2^e3")), MathError);
}

// ---------------------------------------------------------------- symplectic

TEST(Symplectic, AbelianPlaneFamily) {
  auto fam = two_cocycle_family(alg("ab2"));
  ASSERT_EQ(fam.size(), 1u);
  EXPECT_EQ(fam.basis[0], parse_form(2, "e1^e2"));
  EXPECT_EQ(fam.symbols[0], "a12");
  EXPECT_EQ(h2_dim(alg("ab2")), 1u);
}

TEST(Symplectic, FamilyBasisIsClosedAndContainsCoboundaries) {
  for (const auto& a : fixtures::small().algebras) {
    const auto& g = a.algebra;
    auto fam = two_cocycle_family(g);
    for (const auto& b : fam.basis) EXPECT_TRUE(ce_d(g, b).is_zero());
    for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_TRUE(fam.contains(ce_d(g, basis_form(g.dim(), {i}))));
  }
}

TEST(Symplectic, ParameterClashRenamesFamilySymbol) {
  auto g = build_algebra(2, {"a12"}, {});
  EXPECT_EQ(two_cocycle_family(g).symbols[0], "_a12");
}

TEST(Symplectic, CanonicalPairingPfaffian) {
  std::string src = "algebra t\ndim 8\n";
  auto fam = two_cocycle_family(parse_source(src).algebra("t")->algebra);
  CocycleFamily one{8, {parse_form(8, "e1^e5 + e2^e6 + e3^e7 + e4^e8")}, {"c"}, {}};
  one.general = one.basis[0];
  RatFunc pf = generic_nondegeneracy(one);
  EXPECT_EQ(pf, testing_support::pfaffian_by_matchings(form_gram(one.basis[0])));
  EXPECT_TRUE(pf == RatFunc(1) || pf == RatFunc(-1));
  EXPECT_EQ(fam.size(), 28u);
}

TEST(Symplectic, IndexExamples) {
  EXPECT_EQ(lie_index(alg("aff2")), 0u);
  EXPECT_EQ(lie_index(alg("aff1")), 0u);
  EXPECT_EQ(lie_index(alg("sl2")), 1u);
  EXPECT_EQ(lie_index(alg("ab2")), 2u);
}

TEST(Symplectic, IndexAgreesWithKirillovSampling) {
  std::mt19937 rng(11);
  for (const auto& a : fixtures::small().algebras) {
    const auto& g = a.algebra;
    std::size_t idx = lie_index(g);
    std::size_t best = g.dim();
    for (int s = 0; s < 20; ++s) {
      std::vector<Rational> f;
      for (std::size_t k = 0; k < g.dim(); ++k) f.push_back(testing_support::random_rational(rng, 4));
      std::size_t c = kirillov_corank(g, f);
      EXPECT_GE(c, idx);
      best = std::min(best, c);
    }
    EXPECT_EQ(best, idx) << a.name;
  }
}

TEST(Symplectic, KirillovExamples) {
  EXPECT_EQ(kirillov_corank(alg("sl2"), {0, 0, 0}), 3u);
  EXPECT_EQ(kirillov_corank(alg("aff1"), {0, 1}), 0u);
}

TEST(Symplectic, ClassifyIdeal) {
  auto zero = classify_ideal(alg("aff2"), form("w_aff2"), Subspace(6));
  EXPECT_TRUE(zero.isotropic);
  EXPECT_TRUE(zero.normal);
  EXPECT_FALSE(zero.lagrangian);
  auto j = classify_ideal(alg("aff2"), form("w_aff2"), Subspace::span(6, {unit_vec(6, 3), unit_vec(6, 4)}));
  EXPECT_TRUE(j.is_ideal);
  EXPECT_TRUE(j.isotropic);
  EXPECT_FALSE(j.lagrangian);
}

TEST(Symplectic, H2OfAffineAlgebras) {
  EXPECT_EQ(h2_dim(alg("aff2")), 0u);
  EXPECT_EQ(h2_dim(alg("aff1")), 0u);
  EXPECT_EQ(h2_dim(alg("sl2")), 0u);
}
