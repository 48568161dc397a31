#include "fixtures.hpp"
#include "test_support.hpp"

#include "liecas/dataset.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace liecas;
using fixtures::vec;

namespace {

const Document& doc() { return Dataset::instance().document(); }
const LSA& lsa(const std::string& name) { return doc().lsa(name)->lsa; }

// Substitutes each basis cocycle into the A-symbols of a stored cochain.
Cochain1 instantiate(const NamedCochain& c, const Cocycle2& alpha) {
  std::map<int, RatFunc> sub;
  for (const auto& s : c.params) {
    std::size_t i = s[1] - '1', j = s[2] - '1', k = std::stoul(s.substr(4)) - 5;
    sub[intern_variable(s)] = alpha.value(i, j)[k];
  }
  Cochain1 phi = c.matrix;
  for (std::size_t r = 0; r < phi.rows(); ++r)
    for (std::size_t k = 0; k < phi.cols(); ++k) phi(r, k) = phi(r, k).substitute(sub);
  return phi;
}

}  // namespace

TEST(Extension, DualRepresentationOfH6) {
  auto rho = dual_rep(lsa("h6"));
  EXPECT_TRUE(representation_defects(lsa("h6").commutator(), rho).empty());
  // rho(e1) e^1 = -e^4
  EXPECT_EQ(rho.act(unit_vec(4, 0)).apply(unit_vec(4, 0)), vec(4, "-e4"));
  // L(e4) = Id, so rho(e4) = -Id
  EXPECT_EQ(rho.matrices[3], ExactMatrix::identity(4).scaled(RatFunc(-1)));
}

TEST(Extension, ZeroProductGivesZeroRepresentation) {
  auto rho = dual_rep(build_lsa(3, {}, {}));
  for (const auto& m : rho.matrices) EXPECT_TRUE(m.is_zero());
}

TEST(Extension, TrivialExtensionOfH6MatchesTable) {
  auto ext = lagrangian_extension(lsa("h6"), Cocycle2(4));
  EXPECT_EQ(ext.total, doc().algebra("g_rho6")->algebra);
  EXPECT_EQ(ext.omega0, parse_form_text("e1^e5 + e2^e6 + e3^e7 + e4^e8", 8, {}));
  EXPECT_TRUE(ext.omega_closed);
  EXPECT_TRUE(ext.lagrangian_cocycle);
  // [f1,f5] = -f8 and [f4,f5] = -f5
  EXPECT_EQ(ext.total.bracket(0, 4), vec(8, "-e8"));
  EXPECT_EQ(ext.total.bracket(3, 4), vec(8, "-e5"));
}

TEST(Extension, TrivialExtensionOfH2IsSymbolic) {
  auto ext = lagrangian_extension(lsa("h2"), Cocycle2(4));
  EXPECT_EQ(ext.total.params(), std::vector<std::string>{"lam"});
  EXPECT_TRUE(jacobi_defects(ext.total).empty());
}

TEST(Extension, NonLagrangianCocycleIsFlagged) {
  // A coboundary is a rho-cocycle; the cyclic condition then decides.
  const LSA& h6 = lsa("h6");
  Cochain1 phi(4, 4);
  phi(3, 0) = RatFunc(1);  // phi(e1) = e^4, not symmetric
  Cocycle2 alpha = coboundary_1(h6, phi);
  ASSERT_TRUE(is_rho_cocycle(h6, alpha));
  EXPECT_FALSE(cyclic_defects(alpha).empty());
  auto ext = lagrangian_extension(h6, alpha);
  EXPECT_FALSE(ext.lagrangian_cocycle);
  EXPECT_FALSE(ext.omega_closed);
  EXPECT_THROW(lagrangian_extension(h6, alpha, true), ValidationError);
}

TEST(Extension, NonCocycleIsRejected) {
  Cocycle2 alpha(4);
  alpha.set(0, 1, unit_vec(4, 0));
  EXPECT_FALSE(is_rho_cocycle(lsa("h6"), alpha));
  EXPECT_THROW(lagrangian_extension(lsa("h6"), alpha), ValidationError);
}

TEST(Extension, CoboundaryOfZeroIsZero) {
  EXPECT_TRUE(coboundary_1(lsa("h3"), Cochain1(4, 4)).is_zero());
}

TEST(Extension, ClosedOmegaIffCyclicCondition) {
  std::mt19937 rng(99);
  const LSA& h6 = lsa("h6");
  auto z = lagrangian_cocycle_basis(h6);
  for (int t = 0; t < 6; ++t) {
    Cochain1 phi(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) phi(r, c) = RatFunc(testing_support::random_rational(rng, 2));
    Cocycle2 alpha = coboundary_1(h6, phi);
    if (t % 2 == 0) {
      Vec coords = alpha.coordinates();
      Vec extra = z[static_cast<std::size_t>(t) % z.size()].coordinates();
      for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += extra[i];
      alpha = Cocycle2::from_coordinates(4, coords);
    }
    auto ext = lagrangian_extension(h6, alpha);
    EXPECT_EQ(ext.omega_closed, cyclic_defects(alpha).empty()) << t;
  }
}

TEST(Extension, StoredPrimitivesForH1H5H6) {
  for (const char* h : {"h1", "h5", "h6"}) {
    const auto* c = doc().cochain(std::string("phi_") + h);
    ASSERT_NE(c, nullptr);
    EXPECT_TRUE(is_symmetric_cochain(c->matrix)) << h;
    for (const auto& alpha : lagrangian_cocycle_basis(lsa(h)))
      EXPECT_EQ(coboundary_1(lsa(h), instantiate(*c, alpha)), alpha) << h;
  }
}

TEST(Extension, CohomologyVanishes) {
  for (const char* h : {"h2", "h6"}) {
    auto r = extension_cohomology(lsa(h));
    EXPECT_EQ(r.h2, 0u) << h;
    EXPECT_EQ(r.h2_lag, 0u) << h;
    EXPECT_EQ(r.kappa, 0u) << h;
  }
}

TEST(Extension, CohomologyOfZeroProductOnLine) {
  // h = R with zero product: C^2 = 0, so everything vanishes.
  auto r = extension_cohomology(build_lsa(1, {}, {}));
  EXPECT_EQ(r.z2, 0u);
  EXPECT_EQ(r.h2_lag, 0u);
}

TEST(Extension, SymmetricCochainTest) {
  Cochain1 phi(2, 2);
  phi(0, 1) = RatFunc(1);
  EXPECT_FALSE(is_symmetric_cochain(phi));
  phi(1, 0) = RatFunc(1);
  EXPECT_TRUE(is_symmetric_cochain(phi));
}

TEST(Extension, CocycleCoordinatesRoundTrip) {
  Cocycle2 a(3);
  a.set(0, 2, vec(3, "e1 - 2*e3"));
  a.set(1, 2, vec(3, "1/2*e2"));
  EXPECT_EQ(Cocycle2::from_coordinates(3, a.coordinates()), a);
  EXPECT_EQ(a.value(2, 0), vec(3, "-e1 + 2*e3"));
}
