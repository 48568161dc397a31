#include "liecas/symplectic.hpp"

#include <algorithm>

namespace liecas {

namespace {

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  std::string name = base;
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name = "_" + name;
  return name;
}

std::string pair_symbol(std::size_t i, std::size_t j) {
  if (i < 9 && j < 9) return "a" + std::to_string(i + 1) + std::to_string(j + 1);
  return "a" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

std::optional<Vec> CocycleFamily::coordinates_of(const AltForm& w) const {
  std::vector<Vec> vs;
  for (const auto& b : basis) vs.push_back(b.coordinates());
  return span_coordinates(vs, w.coordinates());
}

CocycleFamily two_cocycle_family(const LieAlgebra& g) {
  std::size_t n = g.dim();
  ExactMatrix d = ce_d_matrix(g, 2);
  std::size_t m = d.cols();
  // Reverse the column order so pivots land on the largest pairs.
  ExactMatrix rev(d.rows(), m);
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < m; ++c) rev(r, c) = d(r, m - 1 - c);
  auto tuples = index_tuples(n, 2);
  CocycleFamily fam;
  fam.dim = n;
  fam.general = AltForm(2, n);
  auto kernel = kernel_basis(rev);
  std::reverse(kernel.begin(), kernel.end());
  for (const auto& kv : kernel) {
    Vec coords(m);
    for (std::size_t c = 0; c < m; ++c) coords[c] = kv[m - 1 - c];
    AltForm f = AltForm::from_coordinates(2, n, coords);
    const IndexTuple& lead = f.coeffs().begin()->first;
    std::string sym = fresh_name(pair_symbol(lead[0], lead[1]), g.params());
    fam.general += f.scaled(RatFunc::variable(sym));
    fam.basis.push_back(std::move(f));
    fam.symbols.push_back(sym);
  }
  return fam;
}

std::size_t coboundary_dim(const LieAlgebra& g, std::size_t k) {
  return rank(ce_d_matrix(g, k));
}

std::size_t h2_dim(const LieAlgebra& g) {
  std::size_t z2 = binomial(g.dim(), 2) - coboundary_dim(g, 2);
  return z2 - coboundary_dim(g, 1);
}

std::size_t h1_dim(const LieAlgebra& g) {
  return g.dim() - coboundary_dim(g, 1);
}

RatFunc generic_nondegeneracy(const CocycleFamily& fam) {
  if (fam.dim % 2 != 0) throw MathError("odd dimension has no nondegenerate 2-form");
  return pfaffian(form_gram(fam.general));
}

PolyMatrix bracket_matrix(const LieAlgebra& g) {
  std::size_t n = g.dim();
  std::vector<RatFunc> xs;
  for (std::size_t k = 0; k < n; ++k)
    xs.push_back(RatFunc::variable(fresh_name("x" + std::to_string(k + 1), g.params())));
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec b = g.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!b[k].is_zero()) m(i, j) += b[k] * xs[k];
    }
  return clear_denominators(m);
}

std::size_t lie_index(const LieAlgebra& g) {
  return g.dim() - rank_bareiss(bracket_matrix(g));
}

std::size_t kirillov_corank(const LieAlgebra& g, const std::vector<Rational>& f) {
  std::size_t n = g.dim();
  if (f.size() != n) throw MathError("covector length does not match the algebra");
  ExactMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = g.bracket(i, j);
      RatFunc s;
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero() && f[k] != 0) s += v[k] * RatFunc(f[k]);
      b(i, j) = s;
      b(j, i) = -s;
    }
  return n - rank(b);
}

ExactMatrix orthogonality_system(const AltForm& w, const std::vector<Vec>& generators,
                                 const std::vector<std::size_t>& vars) {
  ExactMatrix g = form_gram(w);
  ExactMatrix m(generators.size(), vars.size());
  for (std::size_t r = 0; r < generators.size(); ++r)
    for (std::size_t c = 0; c < vars.size(); ++c) {
      RatFunc s;
      for (std::size_t b = 0; b < w.dim(); ++b)
        if (!generators[r][b].is_zero()) s += g(vars[c], b) * generators[r][b];
      m(r, c) = s;
    }
  return m;
}

IdealClassification classify_ideal(const LieAlgebra& g, const AltForm& w, const Subspace& j) {
  std::size_t n = g.dim();
  if (w.dim() != n || j.ambient() != n) throw MathError("form, subspace and algebra dimensions differ");
  IdealClassification out;
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  if (j.dim() == 0) {
    out.orthogonal = Subspace::whole(n);
  } else {
    out.orthogonal = Subspace::span(n, kernel_basis(orthogonality_system(w, j.basis(), all)));
  }
  out.is_ideal = is_ideal(g, j);
  out.isotropic = out.orthogonal.contains(j);
  out.lagrangian = out.isotropic && 2 * j.dim() == n && out.orthogonal.dim() == j.dim();
  std::vector<Vec> both = j.basis();
  for (const auto& v : out.orthogonal.basis()) both.push_back(v);
  out.symplectic = span_rank(both) == j.dim() + out.orthogonal.dim();
  out.normal = is_ideal(g, out.orthogonal);
  return out;
}

}  // namespace liecas
