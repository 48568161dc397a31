#pragma once

#include "liecas/lsa.hpp"

#include <string>
#include <vector>

namespace liecas {

// Linear map given by its matrix; column j is the image of e_j.
using LinMap = ExactMatrix;

struct HomDefect {
  std::size_t i, j;
  Vec defect;  // phi[e_i,e_j] - [phi e_i, phi e_j]
  std::string describe() const;
};

std::vector<HomDefect> check_homomorphism(const LinMap& phi, const LieAlgebra& g1, const LieAlgebra& g2);
bool is_isomorphism(const LinMap& phi, const LieAlgebra& g1, const LieAlgebra& g2);
// phi(x.y) - phi(x).phi(y) on basis pairs.
std::vector<HomDefect> check_lsa_homomorphism(const LinMap& phi, const LSA& a, const LSA& b);

// Generic invertibility over Q(params).
bool is_invertible(const LinMap& phi);
LinMap inverse_map(const LinMap& phi);  // throws MathError when singular

// Bracket of g moved to the target basis: [u,v]' = phi[phi^-1 u, phi^-1 v].
LieAlgebra transport(const LieAlgebra& g, const LinMap& phi);
LSA transport(const LSA& a, const LinMap& phi);

// (phi^* w)(x_1..x_k) = w(phi x_1, .., phi x_k).
AltForm pullback_form(const LinMap& phi, const AltForm& w);
// (phi^-1)^* w.
AltForm pushforward_form(const LinMap& phi, const AltForm& w);

bool is_symplectomorphism(const LinMap& phi, const LieAlgebra& g1, const AltForm& w1, const LieAlgebra& g2,
                          const AltForm& w2);

}  // namespace liecas
