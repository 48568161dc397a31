#pragma once

#include "liecas/symplectic.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace liecas {

// One product entry e_i . e_j = value (0-based).
struct ProductEntry {
  std::size_t i;
  std::size_t j;
  Vec value;
};

// Left-symmetric algebra: (x,y,z) = (y,x,z) for the associator
// (x,y,z) = (xy)z - x(yz).
class LSA {
public:
  LSA() = default;

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& params() const { return params_; }
  // product(i, j) = e_i . e_j
  const Vec& product(std::size_t i, std::size_t j) const { return prod_.at(i * dim_ + j); }
  Vec product(const Vec& x, const Vec& y) const;
  // Column j of L(e_i) is e_i . e_j; column j of R(e_i) is e_j . e_i.
  ExactMatrix left(std::size_t i) const;
  ExactMatrix right(std::size_t i) const;
  ExactMatrix left(const Vec& x) const;
  ExactMatrix right(const Vec& x) const;
  const LieAlgebra& commutator() const { return lie_; }

  bool operator==(const LSA& o) const { return dim_ == o.dim_ && prod_ == o.prod_; }

  friend LSA make_lsa_unchecked(std::size_t, std::vector<std::string>, std::vector<Vec>);

private:
  std::size_t dim_ = 0;
  std::vector<std::string> params_;
  std::vector<Vec> prod_;  // row-major n x n
  LieAlgebra lie_;
};

struct AssociatorDefect {
  std::size_t i, j, k;
  Vec defect;  // (e_i,e_j,e_k) - (e_j,e_i,e_k)
  std::string describe() const;
};

// Missing entries are zero. Throws ValidationError with a witness triple on
// associator asymmetry, on [L(x),L(y)] != L([x,y]), or when the two checks disagree.
LSA build_lsa(std::size_t dim, std::vector<std::string> params, const std::vector<ProductEntry>& products);
LSA make_lsa_unchecked(std::size_t dim, std::vector<std::string> params, std::vector<Vec> table);

std::vector<AssociatorDefect> associator_defects(const LSA& a);
// Pairs (i, j) where [L(e_i), L(e_j)] != L([e_i, e_j]).
std::vector<std::pair<std::size_t, std::size_t>> left_representation_defects(const LSA& a);
bool is_associative(const LSA& a);
// Pairs (i, j), i < j, where e_i.e_j - e_j.e_i differs from the declared bracket [e_i, e_j].
std::vector<std::pair<std::size_t, std::size_t>> commutator_defects(const LSA& a, const LieAlgebra& g);

LSA specialize(const LSA& a, const Assignment& values);

struct RightIdentity {
  enum class Kind { None, Unique, Family } kind = Kind::None;
  Vec element;                     // the solution (particular solution for Family)
  std::vector<Vec> free_directions;
  bool central = false;            // L(e) == Id as well
};
RightIdentity right_identity(const LSA& a);

// Product with w(x.y, z) = -w(y, [x,z]).
LSA lsa_from_symplectic(const LieAlgebra& g, const AltForm& w);

struct Reduction {
  LSA quotient;
  std::vector<std::size_t> complement;  // standard basis indices spanning g/J
};
// LSA on g/J from w(x.y, a) = -w(y, [x,a]) for a in J.
Reduction lagrangian_reduction(const LieAlgebra& g, const AltForm& w, const Subspace& j);

// Representation: one matrix per basis element of the algebra.
struct Representation {
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  std::vector<ExactMatrix> matrices;

  ExactMatrix act(const Vec& x) const;
};

std::vector<std::pair<std::size_t, std::size_t>> representation_defects(const LieAlgebra& g,
                                                                         const Representation& rho);

struct CocycleLSA {
  LSA product;
  std::optional<Vec> right_identity;  // e with phi(x) = rho(x) phi(e)
};
// x * y = phi^{-1}(rho(x) phi(y)); phi must satisfy
// phi([x,y]) = rho(x)phi(y) - rho(y)phi(x) and be invertible.
CocycleLSA lsa_from_cocycle(const LieAlgebra& g, const Representation& rho, const ExactMatrix& phi);

struct TraceReport {
  std::vector<std::pair<std::size_t, RatFunc>> simple_traces;  // tr R(e_s)
  std::optional<RatFunc> identity_trace;                       // tr R(e)
  bool ok = true;
  std::vector<std::string> failures;
};
TraceReport trace_checks(const LSA& a, const std::vector<std::size_t>& simple_part);

RatFunc trace(const ExactMatrix& m);

}  // namespace liecas
