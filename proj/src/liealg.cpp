#include "liecas/liealg.hpp"

#include <algorithm>
#include <set>

namespace liecas {

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& generators) {
  Subspace s(ambient);
  for (const auto& g : generators)
    if (g.size() != ambient) throw MathError("generator length does not match the ambient dimension");
  s.basis_ = span_basis(generators);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vec(ambient, i));
  return span(ambient, gens);
}

bool Subspace::contains(const Vec& v) const {
  return in_span(basis_, v);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && dim() == o.dim() && contains(o);
}

// ---------------------------------------------------------------- helpers

void append_linear_term(std::string& s, const RatFunc& c, const std::string& basis) {
  if (c.is_zero()) return;
  bool neg = c.is_polynomial() && c.num().size() == 1 && c.num().terms().begin()->second < 0;
  RatFunc mag = neg ? -c : c;
  std::string coeff;
  if (!mag.is_one()) {
    bool simple = mag.is_polynomial() && mag.num().size() == 1;
    coeff = (simple ? mag.str() : "(" + mag.str() + ")") + "*";
  }
  if (s.empty())
    s += neg ? "-" : "";
  else
    s += neg ? " - " : " + ";
  s += coeff + basis;
}

std::string format_vector(const Vec& v, const std::string& prefix) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) append_linear_term(s, v[k], prefix + std::to_string(k + 1));
  return s.empty() ? "0" : s;
}

std::string JacobiDefect::describe() const {
  return "Jacobi fails on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
         std::to_string(k + 1) + "): defect " + format_vector(defect);
}

std::vector<std::string> merge_params(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& x : b)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------- LieAlgebra

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw MathError("basis index out of range");
  if (i == j) return zero_vec(dim_);
  if (i < j) {
    auto it = table_.find({i, j});
    return it == table_.end() ? zero_vec(dim_) : it->second;
  }
  auto it = table_.find({j, i});
  if (it == table_.end()) return zero_vec(dim_);
  Vec v = it->second;
  for (auto& x : v) x = -x;
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(dim_);
  for (const auto& [ij, v] : table_) {
    auto [i, j] = ij;
    RatFunc c = x[i] * y[j] - x[j] * y[i];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k)
      if (!v[k].is_zero()) out[k] += c * v[k];
  }
  return out;
}

ExactMatrix LieAlgebra::ad(std::size_t i) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec b = bracket(i, j);
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = b[k];
  }
  return m;
}

ExactMatrix LieAlgebra::ad(const Vec& x) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vec b = bracket(x, unit_vec(dim_, j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = b[k];
  }
  return m;
}

LieAlgebra make_algebra_unchecked(std::size_t dim, std::vector<std::string> params, LieAlgebra::Table table,
                                  std::vector<std::string> labels) {
  LieAlgebra g;
  g.dim_ = dim;
  g.params_ = std::move(params);
  for (auto it = table.begin(); it != table.end();) {
    if (is_zero_vec(it->second))
      it = table.erase(it);
    else
      ++it;
  }
  g.table_ = std::move(table);
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  g.labels_ = std::move(labels);
  return g;
}

LieAlgebra build_algebra(std::size_t dim, std::vector<std::string> params, const std::vector<BracketEntry>& brackets,
                         JacobiMode mode, std::vector<std::string> labels) {
  if (dim == 0) throw ValidationError("algebra dimension must be positive");
  LieAlgebra::Table table;
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim)
      throw ValidationError("bracket index out of range: [e" + std::to_string(b.i + 1) + ", e" +
                            std::to_string(b.j + 1) + "] in dimension " + std::to_string(dim));
    if (b.i == b.j) throw ValidationError("bracket of e" + std::to_string(b.i + 1) + " with itself");
    if (b.value.size() != dim) throw ValidationError("bracket value has the wrong length");
    auto key = std::minmax(b.i, b.j);
    Vec v = b.value;
    if (b.i > b.j)
      for (auto& x : v) x = -x;
    if (!table.emplace(std::make_pair(key.first, key.second), v).second)
      throw ValidationError("duplicate bracket entry [e" + std::to_string(key.first + 1) + ", e" +
                            std::to_string(key.second + 1) + "]");
  }
  LieAlgebra g = make_algebra_unchecked(dim, std::move(params), std::move(table), std::move(labels));
  if (mode == JacobiMode::Check) {
    auto defects = jacobi_defects(g);
    if (!defects.empty()) throw ValidationError(defects.front().describe());
  }
  return g;
}

std::vector<JacobiDefect> jacobi_defects(const LieAlgebra& g) {
  std::vector<JacobiDefect> out;
  std::size_t n = g.dim();
  // Cache ad matrices; [[x,y],z] = -ad(z)[x,y].
  std::vector<ExactMatrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = ads[k].apply(g.bracket(i, j));
        Vec t = ads[i].apply(g.bracket(j, k));
        Vec u = ads[j].apply(g.bracket(k, i));
        Vec d(n);
        for (std::size_t m = 0; m < n; ++m) d[m] = -(s[m] + t[m] + u[m]);
        if (!is_zero_vec(d)) out.push_back({i, j, k, d});
      }
  return out;
}

bool is_unimodular(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    RatFunc tr;
    for (std::size_t j = 0; j < g.dim(); ++j) tr += g.bracket(i, j)[j];
    if (!tr.is_zero()) return false;
  }
  return true;
}

Subspace center(const LieAlgebra& g) {
  std::size_t n = g.dim();
  // x in center iff sum_i x_i [e_i, e_j] = 0 for all j.
  ExactMatrix m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec b = g.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = b[k];
    }
  return Subspace::span(n, kernel_basis(m));
}

Subspace derived(const LieAlgebra& g) {
  std::vector<Vec> gens;
  for (const auto& [ij, v] : g.table()) gens.push_back(v);
  return Subspace::span(g.dim(), gens);
}

bool is_abelian(const LieAlgebra& g) {
  return g.table().empty();
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!s.contains(g.bracket(b[i], b[j]))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  for (const auto& v : s.basis())
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!s.contains(g.bracket(unit_vec(g.dim(), i), v))) return false;
  return true;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<ExactMatrix> zero(a.dim(), ExactMatrix(b.dim(), b.dim()));
  return semidirect(a, b, zero);
}

LieAlgebra semidirect(const LieAlgebra& acting, const LieAlgebra& ideal, const std::vector<ExactMatrix>& action) {
  std::size_t n = acting.dim();
  std::size_t m = ideal.dim();
  if (action.size() != n) throw ValidationError("one action matrix per acting basis element is required");
  LieAlgebra::Table t;
  for (const auto& [ij, v] : acting.table()) {
    Vec w = zero_vec(n + m);
    std::copy(v.begin(), v.end(), w.begin());
    t[ij] = w;
  }
  for (const auto& [ij, v] : ideal.table()) {
    Vec w = zero_vec(n + m);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(n));
    t[{ij.first + n, ij.second + n}] = w;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (action[i].rows() != m || action[i].cols() != m) throw ValidationError("action matrix has the wrong shape");
    for (std::size_t j = 0; j < m; ++j) {
      Vec w = zero_vec(n + m);
      for (std::size_t k = 0; k < m; ++k) w[n + k] = action[i](k, j);
      if (!is_zero_vec(w)) t[{i, n + j}] = w;
    }
  }
  LieAlgebra g = make_algebra_unchecked(n + m, merge_params(acting.params(), ideal.params()), std::move(t));
  auto defects = jacobi_defects(g);
  if (!defects.empty()) throw ValidationError("combined algebra is not Lie: " + defects.front().describe());
  return g;
}

LieAlgebra specialize(const LieAlgebra& g, const Assignment& values) {
  if (values.empty()) return g;
  auto sub = to_substitution(values);
  LieAlgebra::Table t;
  for (const auto& [ij, v] : g.table()) {
    Vec w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) w[k] = v[k].substitute(sub);
    t[ij] = w;
  }
  std::vector<std::string> params;
  for (const auto& p : g.params())
    if (!values.count(p)) params.push_back(p);
  return make_algebra_unchecked(g.dim(), params, std::move(t), g.labels());
}

}  // namespace liecas
