#include "liecas/ceforms.hpp"

#include <algorithm>
#include <numeric>

namespace liecas {

namespace {

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(IndexTuple& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple t(k);
  std::iota(t.begin(), t.end(), 0);
  for (;;) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

RatFunc AltForm::coeff(const IndexTuple& idx) const {
  IndexTuple s = idx;
  int sign = sort_with_sign(s);
  if (sign == 0) return RatFunc();
  auto it = coeffs_.find(s);
  if (it == coeffs_.end()) return RatFunc();
  return sign > 0 ? it->second : -it->second;
}

void AltForm::add(const IndexTuple& idx, const RatFunc& c) {
  if (idx.size() != degree_) throw MathError("form index tuple has the wrong length");
  for (auto i : idx)
    if (i >= dim_) throw MathError("form index out of range");
  if (c.is_zero()) return;
  IndexTuple s = idx;
  int sign = sort_with_sign(s);
  if (sign == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(s, sign > 0 ? c : -c);
  if (!inserted) {
    it->second += sign > 0 ? c : -c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

RatFunc AltForm::evaluate(const std::vector<Vec>& vs) const {
  if (vs.size() != degree_) throw MathError("form evaluated on the wrong number of vectors");
  RatFunc total;
  for (const auto& [idx, c] : coeffs_) {
    // Determinant of the k x k minor (vs[a][idx[b]]).
    ExactMatrix m(degree_, degree_);
    for (std::size_t a = 0; a < degree_; ++a)
      for (std::size_t b = 0; b < degree_; ++b) m(a, b) = vs[a][idx[b]];
    RatFunc d = degree_ == 2 ? m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) : determinant(m);
    if (!d.is_zero()) total += c * d;
  }
  return total;
}

AltForm AltForm::operator-() const {
  AltForm r = *this;
  for (auto& [k, c] : r.coeffs_) c = -c;
  return r;
}

AltForm& AltForm::operator+=(const AltForm& o) {
  if (o.degree_ != degree_ || o.dim_ != dim_) throw MathError("form degree or dimension mismatch");
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}

AltForm& AltForm::operator-=(const AltForm& o) {
  return *this += -o;
}

AltForm AltForm::scaled(const RatFunc& c) const {
  AltForm r(degree_, dim_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
  return r;
}

AltForm AltForm::substitute(const std::map<int, RatFunc>& values) const {
  AltForm r(degree_, dim_);
  for (const auto& [k, v] : coeffs_) r.add(k, v.substitute(values));
  return r;
}

std::string AltForm::str(const std::string& prefix) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : coeffs_) {
    std::string basis;
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (t) basis += '^';
      basis += prefix + std::to_string(idx[t] + 1);
    }
    if (degree_ == 0) basis = "1";
    append_linear_term(s, c, basis);
  }
  return s;
}

Vec AltForm::coordinates() const {
  auto tuples = index_tuples(dim_, degree_);
  Vec v(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    auto it = coeffs_.find(tuples[i]);
    if (it != coeffs_.end()) v[i] = it->second;
  }
  return v;
}

AltForm AltForm::from_coordinates(std::size_t degree, std::size_t dim, const Vec& coords) {
  auto tuples = index_tuples(dim, degree);
  if (coords.size() != tuples.size()) throw MathError("coordinate vector has the wrong length");
  AltForm f(degree, dim);
  for (std::size_t i = 0; i < tuples.size(); ++i) f.add(tuples[i], coords[i]);
  return f;
}

AltForm basis_form(std::size_t dim, const IndexTuple& idx) {
  AltForm f(idx.size(), dim);
  f.add(idx, RatFunc(1));
  return f;
}

AltForm ce_d(const LieAlgebra& g, const AltForm& a) {
  if (a.dim() != g.dim()) throw MathError("form and algebra dimensions differ");
  std::size_t n = g.dim();
  std::size_t k = a.degree();
  AltForm out(k + 1, n);
  if (a.is_zero()) return out;
  for (const auto& x : index_tuples(n, k + 1)) {
    RatFunc total;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        Vec b = g.bracket(x[i], x[j]);
        IndexTuple rest;
        for (std::size_t t = 0; t < x.size(); ++t)
          if (t != i && t != j) rest.push_back(x[t]);
        RatFunc term;
        for (std::size_t m = 0; m < n; ++m) {
          if (b[m].is_zero()) continue;
          IndexTuple arg{m};
          arg.insert(arg.end(), rest.begin(), rest.end());
          RatFunc c = a.coeff(arg);
          if (!c.is_zero()) term += b[m] * c;
        }
        if (term.is_zero()) continue;
        if ((i + j) % 2 == 0)
          total += term;
        else
          total -= term;
      }
    out.add(x, total);
  }
  return out;
}

ExactMatrix ce_d_matrix(const LieAlgebra& g, std::size_t k) {
  std::size_t n = g.dim();
  auto src = index_tuples(n, k);
  auto dst = index_tuples(n, k + 1);
  ExactMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    Vec v = ce_d(g, basis_form(n, src[c])).coordinates();
    for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

AltForm wedge(const AltForm& a, const AltForm& b) {
  if (a.dim() != b.dim()) throw MathError("wedge of forms on different dimensions");
  AltForm out(a.degree() + b.degree(), a.dim());
  for (const auto& [ia, ca] : a.coeffs())
    for (const auto& [ib, cb] : b.coeffs()) {
      IndexTuple idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add(idx, ca * cb);
    }
  return out;
}

ExactMatrix form_gram(const AltForm& w) {
  if (w.degree() != 2) throw MathError("Gram matrix needs a 2-form");
  ExactMatrix g(w.dim(), w.dim());
  for (const auto& [idx, c] : w.coeffs()) {
    g(idx[0], idx[1]) = c;
    g(idx[1], idx[0]) = -c;
  }
  return g;
}

AltForm form_from_gram(const ExactMatrix& g) {
  AltForm w(2, g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j) w.add({i, j}, g(i, j));
  return w;
}

bool is_nondegenerate(std::size_t dim, const AltForm& w) {
  if (w.dim() != dim) throw MathError("form dimension mismatch");
  if (dim % 2 != 0) return false;
  return rank(form_gram(w)) == dim;
}

std::optional<AltForm> find_primitive(const LieAlgebra& g, const AltForm& w) {
  if (w.dim() != g.dim()) throw MathError("form and algebra dimensions differ");
  if (w.degree() == 0) throw MathError("no primitive for a 0-form");
  if (!ce_d(g, w).is_zero()) throw MathError("form is not closed");
  ExactMatrix d = ce_d_matrix(g, w.degree() - 1);
  auto x = solve(d, w.coordinates());
  if (!x) return std::nullopt;
  return AltForm::from_coordinates(w.degree() - 1, g.dim(), *x);
}

AltForm specialize(const AltForm& w, const Assignment& values) {
  if (values.empty()) return w;
  return w.substitute(to_substitution(values));
}

}  // namespace liecas
