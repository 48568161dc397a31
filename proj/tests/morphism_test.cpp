#include "fixtures.hpp"
#include "test_support.hpp"

#include "liecas/dataset.hpp"

#include <gtest/gtest.h>

using namespace liecas;
using fixtures::alg;

namespace {

const Document& doc() { return Dataset::instance().document(); }
const LieAlgebra& builtin(const std::string& name) { return doc().algebra(name)->algebra; }
const AltForm& bform(const std::string& name) { return doc().form(name)->form; }
const LinMap& bmap(const std::string& name) { return doc().map(name)->matrix; }

}  // namespace

TEST(Morphism, IdentityIsHomomorphism) {
  EXPECT_TRUE(check_homomorphism(ExactMatrix::identity(3), alg("sl2"), alg("sl2")).empty());
  EXPECT_TRUE(is_isomorphism(ExactMatrix::identity(3), alg("sl2"), alg("sl2")));
}

TEST(Morphism, ScalingOneGeneratorBreaksBracket) {
  LinMap m = ExactMatrix::identity(3);
  m(2, 2) = RatFunc(2);
  auto d = check_homomorphism(m, alg("sl2"), alg("sl2"));
  ASSERT_FALSE(d.empty());
  EXPECT_EQ(d.front().i, 0u);
  EXPECT_EQ(d.front().j, 1u);
}

TEST(Morphism, TransportByIdentity) {
  EXPECT_EQ(transport(alg("aff2"), ExactMatrix::identity(6)), alg("aff2"));
  EXPECT_EQ(pullback_form(ExactMatrix::identity(6), fixtures::form("w_aff2")), fixtures::form("w_aff2"));
}

TEST(Morphism, InverseOfSingularThrows) {
  EXPECT_FALSE(is_invertible(ExactMatrix(2, 2)));
  EXPECT_THROW(inverse_map(ExactMatrix(2, 2)), MathError);
}

TEST(Morphism, RowMapsAreIsomorphisms) {
  for (const auto& r : Dataset::instance().recipes()) {
    const auto& P = bmap(r.map);
    EXPECT_TRUE(check_homomorphism(P, builtin(r.name), builtin(r.source)).empty()) << r.name;
    EXPECT_EQ(transport(builtin(r.source), inverse_map(P)), builtin(r.name)) << r.name;
  }
}

TEST(Morphism, L8_3KeepsSo3Block) {
  const auto& g = builtin("L8_3");
  EXPECT_EQ(g.bracket(0, 1), fixtures::vec(8, "e3"));
  EXPECT_EQ(g.bracket(0, 2), fixtures::vec(8, "-e2"));
  EXPECT_EQ(g.bracket(1, 2), fixtures::vec(8, "e1"));
}

TEST(Morphism, TransportedOmegaIsStoredForm) {
  const auto& P = bmap("psi_L8_20");
  AltForm w = pullback_form(P, bform("omega0_g_rho3"));
  EXPECT_EQ(w, bform("omega_L8_20"));
  EXPECT_TRUE(ce_d(builtin("L8_20"), w).is_zero());
  EXPECT_TRUE(is_nondegenerate(8, w));
}

TEST(Morphism, PushforwardUndoesPullback) {
  const auto& P = bmap("psi_L8_3");
  const auto& w = bform("omega0_g_rho6");
  EXPECT_EQ(pushforward_form(P, pullback_form(P, w)), w);
}

TEST(Morphism, Symplectomorphism) {
  const auto& P = bmap("psi_L8_3");
  EXPECT_TRUE(is_symplectomorphism(P, builtin("L8_3"), bform("omega_L8_3"), builtin("g_rho6"),
                                   bform("omega0_g_rho6")));
}

TEST(Morphism, TypeIINormalForms) {
  const auto& ap = builtin("a_perp");
  EXPECT_TRUE(check_homomorphism(bmap("phi1"), ap, ap).empty());
  EXPECT_EQ(pullback_form(bmap("phi1"), bform("omega_a_perp_general")), bform("omega_a_perp"));
  EXPECT_EQ(pullback_form(bmap("phi3"), bform("omega1_a_perp")), bform("omega_a_perp"));
}

TEST(Morphism, PullbackFunctorial) {
  std::mt19937 rng(5);
  for (int t = 0; t < 5; ++t) {
    LinMap a = testing_support::random_rational_matrix(rng, 4, 4, 0);
    LinMap b = testing_support::random_rational_matrix(rng, 4, 4, 0);
    ExactMatrix g = testing_support::random_skew(rng, 4, {});
    AltForm w = form_from_gram(g);
    EXPECT_EQ(pullback_form(a * b, w), pullback_form(b, pullback_form(a, w)));
  }
}
