#include "fixtures.hpp"

#include "liecas/dataset.hpp"
#include "liecas/extension.hpp"

#include <gtest/gtest.h>

using namespace liecas;
using fixtures::alg;
using fixtures::form;
using fixtures::vec;

namespace {

const LSA& lsa(const std::string& name) { return Dataset::instance().document().lsa(name)->lsa; }
const LieAlgebra& builtin(const std::string& name) { return Dataset::instance().document().algebra(name)->algebra; }

Subspace dual_half(std::size_t n) {
  std::vector<Vec> gens;
  for (std::size_t i = n; i < 2 * n; ++i) gens.push_back(unit_vec(2 * n, i));
  return Subspace::span(2 * n, gens);
}

}  // namespace

TEST(Lsa, BuiltinFamiliesAreLeftSymmetric) {
  for (const char* h : {"h1", "h2", "h3", "h4", "h5", "h6"}) {
    EXPECT_TRUE(associator_defects(lsa(h)).empty()) << h;
    EXPECT_TRUE(left_representation_defects(lsa(h)).empty()) << h;
  }
}

TEST(Lsa, CommutatorOfH1IsSl2PlusLine) {
  const auto* n = Dataset::instance().document().lsa("h1");
  ASSERT_EQ(n->over, "sl2_R");
  EXPECT_TRUE(commutator_defects(n->lsa, builtin("sl2_R")).empty());
  EXPECT_EQ(lsa("h1").commutator(), builtin("sl2_R"));
}

TEST(Lsa, H2AssociativeAtZero) {
  EXPECT_FALSE(is_associative(lsa("h2")));
  EXPECT_TRUE(is_associative(specialize(lsa("h2"), {{"lam", Rational(0)}})));
  EXPECT_FALSE(is_associative(specialize(lsa("h2"), {{"lam", Rational(1)}})));
}

TEST(Lsa, SymmetricProductOverNonabelianBracketIsRejected) {
  // x.y = y.x gives a zero commutator, which cannot match sl2.
  LSA a = build_lsa(3, {}, {});
  auto d = commutator_defects(a, alg("sl2"));
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d.front(), std::make_pair(std::size_t{0}, std::size_t{1}));
}

TEST(Lsa, AssociatorAsymmetryThrowsWithTriple) {
  // e1.e1 = e2 and e2.e1 = e1 on a 2-dim space: (e1,e2,e1) != (e2,e1,e1).
  try {
    build_lsa(2, {}, {{0, 0, vec(2, "e2")}, {1, 0, vec(2, "e1")}});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("e"), std::string::npos);
  }
}

TEST(Lsa, RightIdentities) {
  auto r2 = right_identity(lsa("h2"));
  EXPECT_EQ(r2.kind, RightIdentity::Kind::Unique);
  EXPECT_EQ(r2.element, vec(4, "lam*e3 + e4", {"lam"}));
  auto r6 = right_identity(lsa("h6"));
  EXPECT_EQ(r6.element, vec(4, "e4"));
  EXPECT_TRUE(r6.central);
  auto r4 = right_identity(lsa("h4"));
  EXPECT_EQ(r4.element, vec(4, "e1 + nu*e2 + e4", {"nu"}));
  EXPECT_FALSE(r4.central);
}

TEST(Lsa, NoRightIdentityOnZeroProduct) {
  EXPECT_EQ(right_identity(build_lsa(2, {}, {})).kind, RightIdentity::Kind::None);
}

TEST(Lsa, FromSymplecticOnAbelianIsZero) {
  LSA a = lsa_from_symplectic(alg("ab2"), parse_form_text("e1^e2", 2, {}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(is_zero_vec(a.product(i, j)));
}

TEST(Lsa, FromSymplecticOnAff1) {
  LSA a = lsa_from_symplectic(alg("aff1"), form("w_aff1"));
  EXPECT_EQ(a.product(0, 0), vec(2, "-e1"));
  EXPECT_EQ(a.product(1, 0), vec(2, "-e2"));
  EXPECT_TRUE(is_zero_vec(a.product(0, 1)));
  EXPECT_TRUE(is_zero_vec(a.product(1, 1)));
}

TEST(Lsa, FromSymplecticCommutatorIsBracket) {
  LSA a = lsa_from_symplectic(alg("aff2"), form("w_aff2"));
  EXPECT_EQ(a.commutator(), alg("aff2"));
  EXPECT_TRUE(associator_defects(a).empty());
}

TEST(Lsa, ReductionOfExtensionRecoversFactor) {
  for (const char* h : {"h2", "h6"}) {
    auto ext = lagrangian_extension(lsa(h), Cocycle2(4));
    auto red = lagrangian_reduction(ext.total, ext.omega0, dual_half(4));
    EXPECT_EQ(red.quotient, lsa(h)) << h;
    EXPECT_EQ(red.complement, (std::vector<std::size_t>{0, 1, 2, 3}));
  }
}

TEST(Lsa, ReductionRejectsNonIdeal) {
  const auto& g = builtin("g_rho6");
  const auto& w = Dataset::instance().document().form("omega0_g_rho6")->form;
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < 4; ++i) gens.push_back(unit_vec(8, i));
  EXPECT_THROW(lagrangian_reduction(g, w, Subspace::span(8, gens)), ValidationError);
}

TEST(Lsa, CocycleWithIdentityReproducesProduct) {
  const LSA& h6 = lsa("h6");
  Representation rho{4, 4, {}};
  for (std::size_t i = 0; i < 4; ++i) rho.matrices.push_back(h6.left(i));
  auto c = lsa_from_cocycle(h6.commutator(), rho, ExactMatrix::identity(4));
  EXPECT_EQ(c.product, h6);
  ASSERT_TRUE(c.right_identity.has_value());
  EXPECT_EQ(*c.right_identity, vec(4, "e4"));
}

TEST(Lsa, TraceChecks) {
  auto t3 = trace_checks(lsa("h3"), {0, 1, 2});
  for (const auto& [s, tr] : t3.simple_traces) EXPECT_TRUE(tr.is_zero()) << s;
  EXPECT_EQ(trace(lsa("h3").right(3)), RatFunc(4));
  auto t5 = trace_checks(lsa("h5"), {0, 1, 2});
  for (const auto& [s, tr] : t5.simple_traces) EXPECT_TRUE(tr.is_zero()) << s;
  auto t0 = trace_checks(build_lsa(3, {}, {}), {0, 1, 2});
  for (const auto& [s, tr] : t0.simple_traces) EXPECT_TRUE(tr.is_zero()) << s;
}

TEST(Lsa, CharacteristicPolynomials) {
  RatFunc X = RatFunc::variable("X_charpoly");
  RatFunc one(1), three(3);
  EXPECT_EQ(char_poly(lsa("h3").left(2)), (X - one) * (X + one) * (X - three) * (X + three));
  RatFunc q = X * X + RatFunc(Rational(1, 4));
  EXPECT_EQ(char_poly(lsa("h5").left(2)), q * q);
}
