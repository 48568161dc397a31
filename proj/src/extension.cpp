#include "liecas/extension.hpp"

#include <algorithm>

namespace liecas {

Representation dual_rep(const LSA& a) {
  Representation rho{a.dim(), a.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) rho.matrices.push_back(-a.left(i).transpose());
  return rho;
}

// ---------------------------------------------------------------- Cocycle2

Vec Cocycle2::value(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vec(dim_);
  auto it = table_.find({std::min(i, j), std::max(i, j)});
  if (it == table_.end()) return zero_vec(dim_);
  if (i < j) return it->second;
  Vec v = it->second;
  for (auto& x : v) x = -x;
  return v;
}

Vec Cocycle2::value(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(dim_);
  for (const auto& [ij, v] : table_) {
    RatFunc c = x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!v[k].is_zero()) out[k] += c * v[k];
  }
  return out;
}

void Cocycle2::set(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= dim_ || j >= dim_ || i == j) throw ValidationError("cocycle index out of range");
  if (v.size() != dim_) throw ValidationError("cocycle value has the wrong length");
  Vec w = v;
  if (i > j)
    for (auto& x : w) x = -x;
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  if (is_zero_vec(w))
    table_.erase(key);
  else
    table_[key] = w;
}

Vec Cocycle2::coordinates() const {
  auto pairs = index_tuples(dim_, 2);
  Vec out(pairs.size() * dim_);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    Vec v = value(pairs[p][0], pairs[p][1]);
    for (std::size_t k = 0; k < dim_; ++k) out[p * dim_ + k] = v[k];
  }
  return out;
}

Cocycle2 Cocycle2::from_coordinates(std::size_t dim, const Vec& coords) {
  auto pairs = index_tuples(dim, 2);
  if (coords.size() != pairs.size() * dim) throw MathError("cochain coordinate vector has the wrong length");
  Cocycle2 c(dim);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    Vec v(coords.begin() + static_cast<std::ptrdiff_t>(p * dim),
          coords.begin() + static_cast<std::ptrdiff_t>((p + 1) * dim));
    c.set(pairs[p][0], pairs[p][1], v);
  }
  return c;
}

Cocycle2 Cocycle2::substitute(const std::map<int, RatFunc>& values) const {
  Cocycle2 c(dim_);
  for (const auto& [ij, v] : table_) {
    Vec w = v;
    for (auto& x : w) x = x.substitute(values);
    c.set(ij.first, ij.second, w);
  }
  return c;
}

// ---------------------------------------------------------------- coboundaries

namespace {

Vec add(Vec a, const Vec& b, int sign = 1) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (b[k].is_zero()) continue;
    if (sign > 0)
      a[k] += b[k];
    else
      a[k] -= b[k];
  }
  return a;
}

}  // namespace

Cocycle2 coboundary_1(const LSA& a, const Cochain1& phi) {
  std::size_t n = a.dim();
  if (phi.rows() != n || phi.cols() != n) throw MathError("1-cochain has the wrong shape");
  Representation rho = dual_rep(a);
  const LieAlgebra& g = a.commutator();
  Cocycle2 out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = rho.matrices[i].apply(phi.col(j));
      v = add(v, rho.matrices[j].apply(phi.col(i)), -1);
      v = add(v, phi.apply(g.bracket(i, j)), -1);
      out.set(i, j, v);
    }
  return out;
}

std::vector<std::pair<IndexTuple, Vec>> coboundary_2_defects(const LSA& a, const Cocycle2& alpha) {
  std::size_t n = a.dim();
  Representation rho = dual_rep(a);
  const LieAlgebra& g = a.commutator();
  std::vector<std::pair<IndexTuple, Vec>> out;
  for (const auto& t : index_tuples(n, 3)) {
    std::size_t x = t[0], y = t[1], z = t[2];
    Vec ex = unit_vec(n, x), ey = unit_vec(n, y), ez = unit_vec(n, z);
    Vec v = rho.matrices[x].apply(alpha.value(y, z));
    v = add(v, rho.matrices[y].apply(alpha.value(x, z)), -1);
    v = add(v, rho.matrices[z].apply(alpha.value(x, y)));
    v = add(v, alpha.value(g.bracket(x, y), ez), -1);
    v = add(v, alpha.value(g.bracket(x, z), ey));
    v = add(v, alpha.value(g.bracket(y, z), ex), -1);
    if (!is_zero_vec(v)) out.emplace_back(t, v);
  }
  return out;
}

bool is_rho_cocycle(const LSA& a, const Cocycle2& alpha) {
  return coboundary_2_defects(a, alpha).empty();
}

std::vector<std::pair<IndexTuple, RatFunc>> cyclic_defects(const Cocycle2& alpha) {
  std::vector<std::pair<IndexTuple, RatFunc>> out;
  for (const auto& t : index_tuples(alpha.dim(), 3)) {
    std::size_t x = t[0], y = t[1], z = t[2];
    RatFunc s = alpha.value(x, y)[z] + alpha.value(y, z)[x] + alpha.value(z, x)[y];
    if (!s.is_zero()) out.emplace_back(t, s);
  }
  return out;
}

bool is_symmetric_cochain(const Cochain1& phi) {
  return phi.square() && phi == phi.transpose();
}

// ---------------------------------------------------------------- extension

ExtensionResult lagrangian_extension(const LSA& a, const Cocycle2& alpha, bool require_symplectic) {
  std::size_t n = a.dim();
  if (alpha.dim() != n) throw MathError("cocycle dimension does not match the LSA");
  Representation rho = dual_rep(a);
  const LieAlgebra& h = a.commutator();
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = zero_vec(2 * n);
      Vec b = h.bracket(i, j);
      Vec c = alpha.value(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        v[k] = b[k];
        v[n + k] = c[k];
      }
      if (!is_zero_vec(v)) entries.push_back({i, j, v});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n; ++b) {
      Vec v = zero_vec(2 * n);
      for (std::size_t k = 0; k < n; ++k) v[n + k] = rho.matrices[i](k, b);
      if (!is_zero_vec(v)) entries.push_back({i, n + b, v});
    }
  ExtensionResult out;
  out.n = n;
  out.total = build_algebra(2 * n, a.params(), entries, JacobiMode::Defer);
  auto defects = jacobi_defects(out.total);
  if (!defects.empty()) throw ValidationError("cocycle is not a rho-cocycle: " + defects.front().describe());
  out.omega0 = AltForm(2, 2 * n);
  for (std::size_t i = 0; i < n; ++i) out.omega0.add({i, n + i}, RatFunc(1));
  auto cyc = cyclic_defects(alpha);
  out.lagrangian_cocycle = cyc.empty();
  out.omega_closed = ce_d(out.total, out.omega0).is_zero();
  if (require_symplectic && !out.lagrangian_cocycle) {
    const auto& t = cyc.front().first;
    throw ValidationError("cyclic condition fails on (e" + std::to_string(t[0] + 1) + ", e" +
                          std::to_string(t[1] + 1) + ", e" + std::to_string(t[2] + 1) +
                          "): " + cyc.front().second.str());
  }
  return out;
}

// ---------------------------------------------------------------- cohomology

ExactMatrix coboundary_1_matrix(const LSA& a) {
  std::size_t n = a.dim();
  std::size_t rows = binomial(n, 2) * n;
  ExactMatrix m(rows, n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      Cochain1 phi(n, n);
      phi(r, c) = RatFunc(1);
      Vec v = coboundary_1(a, phi).coordinates();
      for (std::size_t k = 0; k < rows; ++k) m(k, c * n + r) = v[k];
    }
  return m;
}

ExactMatrix coboundary_2_matrix(const LSA& a) {
  std::size_t n = a.dim();
  auto triples = index_tuples(n, 3);
  std::size_t cols = binomial(n, 2) * n;
  ExactMatrix m(triples.size() * n, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Vec coords(cols);
    coords[c] = RatFunc(1);
    Cocycle2 alpha = Cocycle2::from_coordinates(n, coords);
    for (const auto& [t, v] : coboundary_2_defects(a, alpha)) {
      std::size_t ti = static_cast<std::size_t>(std::find(triples.begin(), triples.end(), t) - triples.begin());
      for (std::size_t k = 0; k < n; ++k) m(ti * n + k, c) = v[k];
    }
  }
  return m;
}

ExactMatrix cyclic_matrix(std::size_t n) {
  auto triples = index_tuples(n, 3);
  std::size_t cols = binomial(n, 2) * n;
  ExactMatrix m(triples.size(), cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Vec coords(cols);
    coords[c] = RatFunc(1);
    for (const auto& [t, s] : cyclic_defects(Cocycle2::from_coordinates(n, coords))) {
      std::size_t ti = static_cast<std::size_t>(std::find(triples.begin(), triples.end(), t) - triples.begin());
      m(ti, c) = s;
    }
  }
  return m;
}

namespace {

ExactMatrix stack(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
  return m;
}

// Columns: symmetric basis matrices E_rc + E_cr (r <= c) in column-major coordinates.
ExactMatrix symmetric_embedding(std::size_t n) {
  ExactMatrix s(n * n, n * (n + 1) / 2);
  std::size_t col = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      s(c * n + r, col) = RatFunc(1);
      s(r * n + c, col) = RatFunc(1);
      ++col;
    }
  return s;
}

void collect_degeneration(const Echelon& e, std::vector<RatFunc>& out) {
  for (const auto& p : e.pivot_values) {
    for (const MPoly* part : {&p.num(), &p.den()}) {
      if (part->is_constant()) continue;
      RatFunc f(part->primitive());
      if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
  }
}

}  // namespace

std::vector<Cocycle2> lagrangian_cocycle_basis(const LSA& a) {
  std::size_t n = a.dim();
  std::vector<Cocycle2> out;
  for (const auto& v : kernel_basis(stack(coboundary_2_matrix(a), cyclic_matrix(n))))
    out.push_back(Cocycle2::from_coordinates(n, v));
  return out;
}

CohomologyReport extension_cohomology(const LSA& a) {
  std::size_t n = a.dim();
  CohomologyReport rep;
  ExactMatrix d1 = coboundary_1_matrix(a);
  ExactMatrix d2 = coboundary_2_matrix(a);
  ExactMatrix lag = stack(d2, cyclic_matrix(n));
  std::size_t m2 = d2.cols();

  Echelon e2 = rref(d2);
  Echelon e1 = rref(d1);
  Echelon el = rref(lag);
  ExactMatrix d1_sym = d1 * symmetric_embedding(n);
  Echelon es = rref(d1_sym);
  rep.z2 = m2 - e2.pivots.size();
  rep.b2 = e1.pivots.size();
  rep.h2 = rep.z2 - rep.b2;
  rep.z2_lag = m2 - el.pivots.size();
  rep.b2_lag = es.pivots.size();
  rep.h2_lag = rep.z2_lag - rep.b2_lag;

  // dim(B + Z_L) from the column space of d1 joined with a basis of Z_L.
  std::vector<Vec> gens;
  for (std::size_t c = 0; c < d1.cols(); ++c) gens.push_back(d1.col(c));
  for (const auto& v : kernel_basis(lag)) gens.push_back(v);
  std::size_t sum_dim = span_rank(gens);
  std::size_t inter = rep.b2 + rep.z2_lag - sum_dim;
  rep.kappa = inter - rep.b2_lag;

  for (const auto* e : {&e1, &e2, &el, &es}) collect_degeneration(*e, rep.degeneration);
  return rep;
}

}  // namespace liecas
