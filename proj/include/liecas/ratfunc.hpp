#pragma once

#include "liecas/mpoly.hpp"

#include <map>
#include <ostream>
#include <string>

namespace liecas {

// Quotient num/den of polynomials, kept in lowest terms.
// Polynomial values carry den == 1 and rational coefficients in num;
// proper fractions carry integer-primitive num/den with positive leading
// coefficient (name order) in den.
class RatFunc {
public:
  RatFunc() : num_(0), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(MPoly num, MPoly den);

  static RatFunc variable(std::string_view name) { return RatFunc(MPoly::variable(name)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const;
  Rational constant_value() const;  // requires is_constant()
  std::vector<int> variables() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  RatFunc substitute(const std::map<int, RatFunc>& values) const;

  std::string str() const;

private:
  void normalize();
  MPoly num_;
  MPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

using Scalar = RatFunc;

// Values keyed by parameter name.
using Assignment = std::map<std::string, Rational>;

std::map<int, RatFunc> to_substitution(const Assignment& a);
RatFunc specialize(const RatFunc& f, const Assignment& a);

}  // namespace liecas
