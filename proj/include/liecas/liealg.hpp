#pragma once

#include "liecas/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace liecas {

// Linear subspace of Q(params)^n given by an echelon basis.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
  static Subspace span(std::size_t ambient, const std::vector<Vec>& generators);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

private:
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
};

// One structure-constant entry: [e_i, e_j] = value (0-based indices).
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Vec value;
};

// Violation of the Jacobi identity on basis triple (i, j, k), 0-based.
struct JacobiDefect {
  std::size_t i, j, k;
  Vec defect;
  std::string describe() const;
};

class LieAlgebra {
public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  LieAlgebra() = default;

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Nonzero brackets with i < j.
  const Table& table() const { return table_; }

  Vec bracket(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  // Column j holds [e_i, e_j].
  ExactMatrix ad(std::size_t i) const;
  ExactMatrix ad(const Vec& x) const;

  bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && table_ == o.table_; }

  friend LieAlgebra make_algebra_unchecked(std::size_t, std::vector<std::string>, Table, std::vector<std::string>);

private:
  std::size_t dim_ = 0;
  std::vector<std::string> params_;
  Table table_;
  std::vector<std::string> labels_;
};

enum class JacobiMode { Check, Defer };

// Throws ParseError-free ValidationError on duplicate entries, bad indices or
// (in Check mode) Jacobi failure; the message names the first violating triple.
LieAlgebra build_algebra(std::size_t dim, std::vector<std::string> params,
                         const std::vector<BracketEntry>& brackets, JacobiMode mode = JacobiMode::Check,
                         std::vector<std::string> labels = {});

// Structure constants already antisymmetric and in range; no validation.
LieAlgebra make_algebra_unchecked(std::size_t dim, std::vector<std::string> params, LieAlgebra::Table table,
                                  std::vector<std::string> labels = {});

std::vector<JacobiDefect> jacobi_defects(const LieAlgebra& g);

bool is_unimodular(const LieAlgebra& g);
// Generic over Q(params).
Subspace center(const LieAlgebra& g);
Subspace derived(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
// [x_i, y] = action[i] * y for x_i in `acting`, y in `ideal`; ideal occupies
// the trailing coordinates.
LieAlgebra semidirect(const LieAlgebra& acting, const LieAlgebra& ideal, const std::vector<ExactMatrix>& action);

// Substitutes rational values for parameters; remaining parameters stay symbolic.
LieAlgebra specialize(const LieAlgebra& g, const Assignment& values);

std::vector<std::string> merge_params(const std::vector<std::string>& a, const std::vector<std::string>& b);

// "2*e1 - p*e3" style rendering, 1-based.
std::string format_vector(const Vec& v, const std::string& prefix = "e");
// Appends "+ c*basis" / "- c*basis" with the sign pulled out of monomial coefficients.
void append_linear_term(std::string& s, const RatFunc& c, const std::string& basis);

}  // namespace liecas
