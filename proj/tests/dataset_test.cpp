#include "fixtures.hpp"

#include "liecas/dataset.hpp"

#include <gtest/gtest.h>

using namespace liecas;
using fixtures::vec;

TEST(Dataset, Aff2AndItsForm) {
  EXPECT_EQ(builtin_algebra("aff2"), fixtures::alg("aff2"));
  AltForm w = builtin_form("omega_aff2");
  EXPECT_EQ(w, fixtures::form("w_aff2"));
  EXPECT_TRUE(ce_d(builtin_algebra("aff2"), w).is_zero());
}

TEST(Dataset, LsaFamilies) {
  LSA h3 = builtin_lsa("h3");
  EXPECT_EQ(h3.dim(), 4u);
  EXPECT_TRUE(h3.params().empty());
  EXPECT_EQ(builtin_lsa("h2").params(), std::vector<std::string>{"lam"});
}

TEST(Dataset, SymbolicExtensionAlgebra) {
  LieAlgebra g = builtin_algebra("g_rho2");
  EXPECT_EQ(g.dim(), 8u);
  EXPECT_EQ(g.params(), std::vector<std::string>{"lam"});
  EXPECT_TRUE(jacobi_defects(g).empty());
}

TEST(Dataset, SpecializationWarnsWithoutRefusing) {
  std::vector<Warning> w;
  LieAlgebra g = builtin_algebra("g_rho2", {{"lam", Rational(-1, 2)}}, &w);
  EXPECT_TRUE(g.params().empty());
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].entry, "g_rho2");
  EXPECT_TRUE(check_constraints("g_rho2", {{"lam", Rational(2)}}).empty());
  EXPECT_FALSE(check_constraints("L8_4", {{"p", Rational(0)}}).empty());
}

TEST(Dataset, L8_20FormIsSymplectic) {
  auto r = reconstruct_L8("L8_20");
  EXPECT_EQ(r.source, "g_rho3");
  EXPECT_EQ(r.form, parse_form_text("-e1^e5 + 1/2*e1^e7 - 2*e2^e6 - e3^e4 - 1/2*e3^e6 - e5^e8 - 1/6*e7^e8", 8, {}));
  EXPECT_TRUE(ce_d(r.algebra, r.form).is_zero());
  EXPECT_TRUE(is_nondegenerate(8, r.form));
}

TEST(Dataset, L8_3Reconstruction) {
  auto r = reconstruct_L8("L8_3");
  EXPECT_EQ(r.algebra.bracket(0, 1), vec(8, "e3"));
  EXPECT_EQ(two_cocycle_family(r.algebra).size(), 7u);
  EXPECT_EQ(lie_index(r.algebra), 0u);
}

TEST(Dataset, DecomposablesAreBuiltIn) {
  auto r = reconstruct_L8("aff2_plus_aff1");
  EXPECT_EQ(r.algebra, direct_sum(fixtures::alg("aff2"), fixtures::alg("aff1")));
  EXPECT_TRUE(is_nondegenerate(8, r.form));
}

TEST(Dataset, CatalogEntriesNeedExternalData) {
  try {
    reconstruct_L8("L8_1");
    FAIL() << "expected ExternalDataRequired";
  } catch (const ExternalDataRequired& e) {
    EXPECT_NE(std::string(e.what()).find("external data required"), std::string::npos);
  }
  EXPECT_THROW(reconstruct_L8("L8_9"), ExternalDataRequired);
  EXPECT_THROW(reconstruct_L8("not_an_algebra"), Error);
}

TEST(Dataset, PrintedVariantsAreFlagged) {
  const auto& ds = Dataset::instance();
  for (const char* n : {"g_rho1_printed", "g_rho5_printed", "omega_L8_20_alt", "psi_L8_17_0_printed"}) {
    const auto* e = ds.info(n);
    ASSERT_NE(e, nullptr) << n;
    EXPECT_TRUE(e->printed_variant) << n;
    EXPECT_FALSE(e->resolved.empty()) << n;
  }
  EXPECT_FALSE(ds.info("g_rho6")->printed_variant);
  EXPECT_TRUE(ds.load_issues().empty());
}

TEST(Dataset, DumpRoundTrips) {
  const auto& ds = Dataset::instance();
  for (const char* n : {"L8_17", "h4", "psi_L8_4", "phi_h2", "family_L8_16", "Psi1"}) {
    Document d = parse_source(ds.dump(n));
    EXPECT_TRUE(d.has_name(n)) << n;
    EXPECT_TRUE(validate_document(d).empty()) << n;
  }
}

TEST(Dataset, SubstituteReparametrizes) {
  LieAlgebra g = builtin_algebra("g_rho2");
  RatFunc p = RatFunc::variable("p");
  LieAlgebra s = substitute(g, {{"lam", (RatFunc(1) - p) / (RatFunc(1) + p)}}, {"p"});
  EXPECT_EQ(s.params(), std::vector<std::string>{"p"});
  EXPECT_EQ(specialize(s, {{"p", Rational(0)}}), builtin_algebra("g_rho7"));
}

TEST(Dataset, FamilyGenerators) {
  AltForm fam = parse_form_text("a*e1^e2 + b*e1^e2 + b*e3^e4", 4, {"a", "b"});
  auto gens = family_generators(fam, {"a", "b"});
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0], parse_form_text("e1^e2", 4, {}));
  EXPECT_EQ(gens[1], parse_form_text("e1^e2 + e3^e4", 4, {}));
}
