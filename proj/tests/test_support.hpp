#pragma once

// Generators and brute-force oracles shared by the unit tests.

#include "liecas/matrix.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace liecas;

inline Rational random_rational(std::mt19937& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline MPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, unsigned max_deg = 2) {
  MPoly p(random_rational(rng));
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<int> terms(0, 2);
  int t = terms(rng);
  for (int i = 0; i < t && !vars.empty(); ++i) {
    std::vector<Monomial::Power> pw;
    for (const auto& v : vars) pw.emplace_back(intern_variable(v), deg(rng));
    p += MPoly::monomial(Monomial(pw), random_rational(rng));
  }
  return p;
}

inline RatFunc random_ratfunc(std::mt19937& rng, const std::vector<std::string>& vars) {
  MPoly num = random_poly(rng, vars);
  MPoly den = random_poly(rng, vars, 1);
  if (den.is_zero()) den = MPoly(1);
  return RatFunc(num, den);
}

// Entries in Q; sparsity grows with `zeros` so low-rank cases appear.
inline ExactMatrix random_rational_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int zeros) {
  ExactMatrix m(r, c);
  std::uniform_int_distribution<int> z(0, 4);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (z(rng) >= zeros) m(i, j) = RatFunc(random_rational(rng, 2));
  if (zeros == 2 && r > 1)
    for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * RatFunc(2);
  return m;
}

inline ExactMatrix random_poly_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                                      const std::vector<std::string>& vars) {
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = RatFunc(random_poly(rng, vars, 1));
  return m;
}

inline ExactMatrix random_skew(std::mt19937& rng, std::size_t n, const std::vector<std::string>& vars) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = RatFunc(random_poly(rng, vars, 1));
      m(j, i) = -m(i, j);
    }
  return m;
}

// Sum over perfect matchings with the sign of the flattened permutation.
inline RatFunc pfaffian_by_matchings(const ExactMatrix& a) {
  std::size_t n = a.rows();
  RatFunc total;
  std::vector<std::size_t> perm;
  std::vector<bool> used(n, false);
  std::function<void()> rec = [&]() {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      int inv = 0;
      for (std::size_t x = 0; x < perm.size(); ++x)
        for (std::size_t y = x + 1; y < perm.size(); ++y)
          if (perm[x] > perm[y]) ++inv;
      RatFunc prod(1);
      for (std::size_t k = 0; k < perm.size(); k += 2) prod *= a(perm[k], perm[k + 1]);
      total += inv % 2 == 0 ? prod : -prod;
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      perm.push_back(i);
      perm.push_back(j);
      rec();
      perm.pop_back();
      perm.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec();
  return total;
}

}  // namespace testing_support
