#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liecas {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);

// Process-wide symbol table. Ids are stable for the lifetime of the process;
// anything user-visible is ordered by name, never by id.
int intern_variable(std::string_view name);
const std::string& variable_name(int id);
std::optional<int> find_variable(std::string_view name);

// Product of powers x_id^exp, sorted by id, exponents > 0.
class Monomial {
public:
  using Power = std::pair<int, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Power> powers);
  static Monomial variable(int id, unsigned exp = 1);

  const std::vector<Power>& powers() const { return powers_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(int id) const;
  bool is_one() const { return powers_.empty(); }

  Monomial operator*(const Monomial& o) const;
  // Quotient if `d` divides *this.
  std::optional<Monomial> divide(const Monomial& d) const;
  Monomial without(int id) const;

  bool operator==(const Monomial& o) const { return powers_ == o.powers_; }

  std::string str() const;

private:
  std::vector<Power> powers_;
  unsigned degree_ = 0;
};

// Graded order on variable ids; a monomial order, used for storage and division.
struct GrlexById {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Graded lexicographic on variable names; canonical order for printing and
// for choosing the leading coefficient during normalization.
bool grlex_by_name_less(const Monomial& a, const Monomial& b);

class RatFunc;

// Sparse multivariate polynomial over Q.
class MPoly {
public:
  using Terms = std::map<Monomial, Rational, GrlexById>;

  MPoly() = default;
  MPoly(long c);  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static MPoly variable(std::string_view name);
  static MPoly variable(int id);
  static MPoly monomial(const Monomial& m, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // coefficient of 1
  unsigned total_degree() const;
  std::size_t size() const { return terms_.size(); }
  std::vector<int> variables() const;
  unsigned degree_in(int id) const;

  // Leading term in the name-based graded order.
  std::pair<Monomial, Rational> leading_term() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  MPoly pow(unsigned e) const;

  // a / b when b divides a exactly.
  static std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

  // Coefficients as a polynomial in variable `id`: degree -> coefficient.
  std::map<unsigned, MPoly> coefficients_in(int id) const;

  // gcd of all coefficients (as rationals): content * primitive == *this,
  // primitive has coprime integer coefficients and positive leading coefficient.
  Rational content() const;
  MPoly primitive() const;

  RatFunc substitute(const std::map<int, RatFunc>& values) const;
  MPoly derivative(int id) const;

  std::string str() const;

private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

// Greatest common divisor up to a rational unit, normalized like primitive().
MPoly gcd(const MPoly& a, const MPoly& b);

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace liecas
