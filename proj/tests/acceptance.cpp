// One line per acceptance criterion; failing claims are listed beneath.
// Exit status is nonzero when any criterion fails.

#include "liecas/suite.hpp"

#include <cstring>
#include <iomanip>
#include <iostream>

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  liecas::VerificationReport rep;
  try {
    rep = liecas::run_suite();
  } catch (const std::exception& e) {
    std::cout << "acceptance: aborted: " << e.what() << "\n";
    return 2;
  }
  for (const auto& c : rep.criteria) {
    std::cout << "criterion " << std::setw(2) << c.number << ": " << (c.passed() ? "PASS" : "FAIL") << "  "
              << c.title << " (" << c.claims << " claims)\n";
    std::string prefix = (c.number < 10 ? "c0" : "c") + std::to_string(c.number) + ".";
    for (const auto& cl : rep.claims) {
      if (cl.id.rfind(prefix, 0) != 0) continue;
      bool show = cl.status == liecas::ClaimStatus::Fail ||
                  (verbose && cl.status != liecas::ClaimStatus::Pass);
      if (show)
        std::cout << "    " << liecas::status_name(cl.status) << " " << cl.id
                  << (cl.witness.empty() ? "" : ": " + cl.witness) << "\n";
    }
  }
  std::size_t ok = 0;
  for (const auto& c : rep.criteria) ok += c.passed();
  std::cout << ok << " of " << rep.criteria.size() << " criteria pass\n";
  return rep.passed() ? 0 : 1;
}
