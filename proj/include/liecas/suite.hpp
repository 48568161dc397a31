#pragma once

#include "liecas/dataset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liecas {

// Pass and Fail decide a criterion; Reported records a finding (a printed
// variant, a selected convention) and Warning an advisory constraint hit.
enum class ClaimStatus { Pass, Fail, Reported, Warning };
std::string status_name(ClaimStatus s);

struct Claim {
  std::string id;  // "c07.table.g_rho1", ...; the cNN prefix names the criterion
  ClaimStatus status = ClaimStatus::Pass;
  std::string witness;
};

struct SuiteOptions {
  // Advisory: violations become warnings, specialized forms are re-checked.
  Assignment specialize;
  // Algebras and LSAs here replace the built-ins of the same name.
  std::optional<Document> overrides;
  // Catalog algebras (L8_1, L8_8, ...) supplied by the user.
  std::optional<Document> external;
  bool parallel = true;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  std::size_t claims = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

struct VerificationReport {
  std::vector<Claim> claims;  // sorted by id
  std::vector<CriterionResult> criteria;
  bool passed() const;
};

inline constexpr int kCriterionCount = 12;
const std::string& criterion_title(int number);

// Runs one criterion (1..12) or all of them.
std::vector<Claim> run_criterion(int number, const SuiteOptions& options = {});
VerificationReport run_suite(const SuiteOptions& options = {});

// Warnings for --specialize values outside stated ranges, and the
// reconstructed forms re-checked at those values.
std::vector<Claim> specialization_claims(const SuiteOptions& options);

}  // namespace liecas
