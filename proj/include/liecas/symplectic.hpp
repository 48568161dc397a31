#pragma once

#include "liecas/ceforms.hpp"

#include <string>
#include <vector>

namespace liecas {

// Z^2(g) with one family symbol per basis cocycle.
struct CocycleFamily {
  std::size_t dim = 0;
  std::vector<AltForm> basis;
  std::vector<std::string> symbols;  // symbols[i] multiplies basis[i]
  AltForm general;

  std::size_t size() const { return basis.size(); }
  // Coefficients expressing w in the basis, if w is a member.
  std::optional<Vec> coordinates_of(const AltForm& w) const;
  bool contains(const AltForm& w) const { return coordinates_of(w).has_value(); }
};

// Basis elements are echelon-normalized so that each has coefficient 1 on
// the lexicographically smallest pair of its support; symbol a_ij names that
// pair (a12, a37, ...), avoiding clashes with g's parameters.
CocycleFamily two_cocycle_family(const LieAlgebra& g);
std::size_t coboundary_dim(const LieAlgebra& g, std::size_t k);  // rank of d on k-forms
std::size_t h2_dim(const LieAlgebra& g);
std::size_t h1_dim(const LieAlgebra& g);

// Pfaffian of the general member's Gram matrix.
RatFunc generic_nondegeneracy(const CocycleFamily& fam);

// M_g(i,j) = sum_k c_ij^k x_k over fresh symbols x1..xn.
PolyMatrix bracket_matrix(const LieAlgebra& g);
std::size_t lie_index(const LieAlgebra& g);
std::size_t kirillov_corank(const LieAlgebra& g, const std::vector<Rational>& f);

struct IdealClassification {
  bool is_ideal = false;
  bool isotropic = false;
  bool lagrangian = false;
  bool symplectic = false;
  bool normal = false;  // orthogonal is an ideal
  Subspace orthogonal;
};

IdealClassification classify_ideal(const LieAlgebra& g, const AltForm& w, const Subspace& j);

// Rows: w(x, j_r) for generators j_r; columns: coordinates of x listed in `vars`.
ExactMatrix orthogonality_system(const AltForm& w, const std::vector<Vec>& generators,
                                 const std::vector<std::size_t>& vars);

}  // namespace liecas
