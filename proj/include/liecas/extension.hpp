#pragma once

#include "liecas/lsa.hpp"

#include <map>
#include <string>
#include <vector>

namespace liecas {

// rho(x) xi = -xi o L(x): matrix of rho(e_i) is -L(e_i)^T.
Representation dual_rep(const LSA& a);

// h*-valued 2-cochain: alpha(e_i, e_j) for i < j, values in dual coordinates.
class Cocycle2 {
public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, Vec>;

  Cocycle2() = default;
  explicit Cocycle2(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const Table& table() const { return table_; }
  bool is_zero() const { return table_.empty(); }

  // Antisymmetric accessor.
  Vec value(std::size_t i, std::size_t j) const;
  Vec value(const Vec& x, const Vec& y) const;
  void set(std::size_t i, std::size_t j, const Vec& v);
  bool operator==(const Cocycle2& o) const { return dim_ == o.dim_ && table_ == o.table_; }

  // Coordinates (pair-major, then value index) on C^2 = Lambda^2 h* (x) h*.
  Vec coordinates() const;
  static Cocycle2 from_coordinates(std::size_t dim, const Vec& coords);
  Cocycle2 substitute(const std::map<int, RatFunc>& values) const;

private:
  std::size_t dim_ = 0;
  Table table_;
};

// 1-cochain phi: h -> h*, column j is phi(e_j) in dual coordinates.
using Cochain1 = ExactMatrix;

Cocycle2 coboundary_1(const LSA& a, const Cochain1& phi);
// (d alpha)(e_i,e_j,e_k), i<j<k, in dual coordinates; zero iff alpha in Z^2_rho.
std::vector<std::pair<IndexTuple, Vec>> coboundary_2_defects(const LSA& a, const Cocycle2& alpha);
bool is_rho_cocycle(const LSA& a, const Cocycle2& alpha);
// alpha(x,y)(z) + alpha(y,z)(x) + alpha(z,x)(y) on basis triples; empty iff Lagrangian.
std::vector<std::pair<IndexTuple, RatFunc>> cyclic_defects(const Cocycle2& alpha);
bool is_symmetric_cochain(const Cochain1& phi);

struct ExtensionResult {
  LieAlgebra total;
  AltForm omega0;  // sum_i e^i ^ e^{n+i}
  std::size_t n = 0;  // h occupies [0, n), h* occupies [n, 2n)
  bool lagrangian_cocycle = false;  // cyclic condition holds
  bool omega_closed = false;
};

// Throws ValidationError when alpha is not a rho-cocycle (Jacobi witness
// attached). A cocycle failing the cyclic condition is reported through the
// flags; pass require_symplectic to turn that into an error.
ExtensionResult lagrangian_extension(const LSA& a, const Cocycle2& alpha, bool require_symplectic = false);

struct CohomologyReport {
  std::size_t z2 = 0;        // Z^2_rho
  std::size_t b2 = 0;        // B^2_rho
  std::size_t h2 = 0;        // H^2_rho
  std::size_t z2_lag = 0;    // C^2_L intersect Z^2_rho
  std::size_t b2_lag = 0;    // d(C^1_L)
  std::size_t h2_lag = 0;    // H^2_{L,rho}
  std::size_t kappa = 0;     // (B^2_rho intersect Z^2_L) / B^2_L
  // Pivots that are not constants; the computed ranks may drop where these vanish.
  std::vector<RatFunc> degeneration;
};

CohomologyReport extension_cohomology(const LSA& a);

// Matrices of the cochain maps in the coordinates of Cocycle2::coordinates()
// and column-major Cochain1 entries.
ExactMatrix coboundary_1_matrix(const LSA& a);
ExactMatrix coboundary_2_matrix(const LSA& a);
ExactMatrix cyclic_matrix(std::size_t n);
// Basis of Z^2_{L,rho} as cocycles.
std::vector<Cocycle2> lagrangian_cocycle_basis(const LSA& a);

}  // namespace liecas
