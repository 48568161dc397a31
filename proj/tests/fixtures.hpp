#pragma once

// Small algebras written in the text format, shared by the unit tests.

#include "liecas/document.hpp"

#include <string>

namespace fixtures {

inline const char* kSmall = R"(
algebra sl2
dim 3
bracket 1 2 : e3
bracket 1 3 : -2*e1
bracket 2 3 : 2*e2

algebra so3
dim 3
bracket 1 2 : e3
bracket 1 3 : -e2
bracket 2 3 : e1

algebra aff1
dim 2
bracket 1 2 : e2

algebra ab2
dim 2

algebra aff2
dim 6
bracket 1 2 : 2*e2
bracket 1 3 : -2*e3
bracket 1 4 : e4
bracket 1 5 : -e5
bracket 2 3 : e1
bracket 2 5 : e4
bracket 3 4 : e5
bracket 4 6 : e4
bracket 5 6 : e5

form w_aff1 on aff1 : e1^e2
form w_aff2 on aff2 : e1^e2 + e1^e5 - e3^e4 - e5^e6
)";

inline const liecas::Document& small() {
  static const liecas::Document d = liecas::parse_source(kSmall);
  return d;
}

inline const liecas::LieAlgebra& alg(const std::string& name) { return small().algebra(name)->algebra; }
inline const liecas::AltForm& form(const std::string& name) { return small().form(name)->form; }

inline liecas::Vec vec(std::size_t n, const std::string& text, const std::vector<std::string>& params = {}) {
  std::string src = "algebra tmp\ndim " + std::to_string(n) + "\n";
  if (!params.empty()) {
    src += "params";
    for (const auto& p : params) src += " " + p;
    src += "\n";
  }
  src += "map m from tmp to tmp\nimage 1 : " + text + "\n";
  return liecas::parse_source(src).map("m")->matrix.col(0);
}

}  // namespace fixtures
