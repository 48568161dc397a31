#include "cli.hpp"

#include "liecas/suite.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace liecas;

namespace {

const Claim* find(const std::vector<Claim>& claims, const std::string& id) {
  for (const auto& c : claims)
    if (c.id == id) return &c;
  return nullptr;
}

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = liecas::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Suite, CriterionClaimsAreSortedAndPrefixed) {
  auto claims = run_criterion(2);
  ASSERT_FALSE(claims.empty());
  EXPECT_TRUE(std::is_sorted(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; }));
  for (const auto& c : claims) {
    EXPECT_EQ(c.id.rfind("c02.", 0), 0u) << c.id;
    EXPECT_EQ(c.status, ClaimStatus::Pass) << c.id;
  }
}

TEST(Suite, LagrangianIdealCriterionPasses) {
  auto claims = run_criterion(11);
  const auto* det = find(claims, "c11.system_determinant");
  ASSERT_NE(det, nullptr);
  EXPECT_EQ(det->status, ClaimStatus::Pass);
}

TEST(Suite, MutatedLsaFailsWithWitness) {
  const auto& h6 = Dataset::instance().document().lsa("h6")->lsa;
  std::vector<Vec> table;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Vec v = h6.product(i, j);
      if (i == 1 && j == 2)
        for (auto& x : v) x = -x;
      table.push_back(v);
    }
  SuiteOptions o;
  o.overrides = Document{};
  o.overrides->lsas.push_back({"h6", make_lsa_unchecked(4, {}, table), "sl2_R", 0});
  auto claims = run_criterion(1, o);
  const auto* c = find(claims, "c01.lsa.h6.associator");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, ClaimStatus::Fail);
  EXPECT_NE(c->witness.find("(e"), std::string::npos) << c->witness;
  const auto* ok = find(claims, "c01.lsa.h5.associator");
  ASSERT_NE(ok, nullptr);
  EXPECT_EQ(ok->status, ClaimStatus::Pass);
}

TEST(Suite, SpecializingOutOfRangeWarns) {
  SuiteOptions o;
  o.specialize = {{"p", Rational(0)}};
  auto claims = specialization_claims(o);
  const auto* w = find(claims, "warn.L8_4");
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->status, ClaimStatus::Warning);
  EXPECT_NE(w->witness.find("p != 0"), std::string::npos);
}

TEST(Suite, CriterionTitles) {
  for (int n = 1; n <= kCriterionCount; ++n) EXPECT_FALSE(criterion_title(n).empty());
  EXPECT_THROW(run_criterion(13), Error);
}

TEST(Cli, IndexOfBuiltin) {
  auto r = run_cli({"index", "--builtin", "g_rho6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "index = 0\n");
}

TEST(Cli, IndexExpectationFails) {
  EXPECT_EQ(run_cli({"index", "--builtin", "sl2", "--expect", "1"}).code, 0);
  EXPECT_EQ(run_cli({"index", "--builtin", "sl2", "--expect", "0"}).code, 1);
}

TEST(Cli, CheckReportsJacobiWitness) {
  auto path = temp_file("bad.lie", "algebra bad\ndim 3\nbracket 1 2 : e1\nbracket 1 3 : e2\n");
  auto r = run_cli({"check", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("(e1, e2, e3)"), std::string::npos) << r.out;
}

TEST(Cli, CheckAcceptsValidFile) {
  auto path = temp_file("good.lie", "algebra a\ndim 2\nbracket 1 2 : e2\nform w on a : e1^e2\n");
  EXPECT_EQ(run_cli({"check", path}).code, 0);
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"index"}).code, 2);
  EXPECT_EQ(run_cli({"index", "--builtin", "no_such_algebra"}).code, 2);
  EXPECT_EQ(run_cli({"--specialize", "p=x", "index", "--builtin", "g_rho6"}).code, 2);
  auto path = temp_file("range.lie", "algebra a\ndim 8\nbracket 1 9 : e2\n");
  auto r = run_cli({"check", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Cli, ExternalDataRequired) {
  auto r = run_cli({"dump", "L8_1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("external data required"), std::string::npos);
}

TEST(Cli, JsonSchema) {
  auto r = run_cli({"--json", "symplectic", "--builtin", "L8_3", "--form", "omega_L8_3"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verb"], "symplectic");
  std::vector<std::string> ids;
  for (const auto& c : j["claims"]) {
    ASSERT_TRUE(c.contains("claim_id"));
    ASSERT_TRUE(c.contains("status"));
    for (auto it = c.begin(); it != c.end(); ++it)
      EXPECT_TRUE(it.key() == "claim_id" || it.key() == "status" || it.key() == "witness") << it.key();
    ids.push_back(c["claim_id"]);
  }
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
}

TEST(Cli, SpecializeComposesWithVerbs) {
  auto r = run_cli({"--json", "symplectic", "--builtin", "L8_4", "--form", "omega_L8_4", "--specialize", "p=0"});
  auto j = nlohmann::json::parse(r.out);
  bool warned = false;
  for (const auto& c : j["claims"]) warned = warned || c["claim_id"] == "warn.L8_4";
  EXPECT_TRUE(warned);
  // the specialized form degenerates, the symbolic one does not
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run_cli({"symplectic", "--builtin", "L8_4", "--form", "omega_L8_4"}).code, 0);
}

TEST(Cli, ReduceTransportExtendCohomology) {
  EXPECT_EQ(run_cli({"reduce", "--builtin", "L8_3", "--form", "omega_L8_3", "--ideal", "e4,e5,e6,e7"}).code, 0);
  EXPECT_EQ(run_cli({"reduce", "--builtin", "L8_3", "--form", "omega_L8_3", "--ideal", "e1,e2,e3,e4"}).code, 1);
  EXPECT_EQ(run_cli({"transport", "--builtin", "psi_L8_3", "--form", "omega0_g_rho6"}).code, 0);
  EXPECT_EQ(run_cli({"extend", "--builtin", "h6"}).code, 0);
  auto c = run_cli({"cohomology", "--builtin", "h2"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("H2_L = 0"), std::string::npos);
}

TEST(Cli, FileBasedVerbs) {
  auto path = temp_file("aff.lie",
                        "algebra aff1\ndim 2\nbracket 1 2 : e2\nform w on aff1 : e1^e2\n"
                        "lsa h\ndim 2\nover aff1\nprod 1 1 : -e1\nprod 2 1 : -e2\n");
  auto r = run_cli({"cocycles", path, "--algebra", "aff1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dim Z2 = 1"), std::string::npos);
  EXPECT_EQ(run_cli({"symplectic", path, "--algebra", "aff1", "--form", "w"}).code, 0);
  EXPECT_EQ(run_cli({"extend", path, "--lsa", "h"}).code, 0);
}
