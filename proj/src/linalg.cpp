#include "liecas/matrix.hpp"

#include <algorithm>

namespace liecas {

Vec zero_vec(std::size_t n) {
  return Vec(n);
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = RatFunc(1);
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const RatFunc& x) { return x.is_zero(); });
}

namespace {

unsigned weight(const RatFunc& f) {
  return f.num().total_degree() + f.den().total_degree();
}

unsigned weight(const MPoly& p) {
  return p.total_degree();
}

bool constant_entry(const RatFunc& f) {
  return f.is_constant();
}

bool constant_entry(const MPoly& p) {
  return p.is_constant();
}

// Row index of the preferred pivot in column c among rows >= r0, or -1.
template <typename T>
long choose_pivot(const Matrix<T>& a, std::size_t r0, std::size_t c) {
  long best = -1;
  unsigned best_w = 0;
  for (std::size_t r = r0; r < a.rows(); ++r) {
    const T& x = a(r, c);
    if (x.is_zero()) continue;
    if (constant_entry(x)) return static_cast<long>(r);
    unsigned w = weight(x);
    if (best < 0 || w < best_w) {
      best = static_cast<long>(r);
      best_w = w;
    }
  }
  return best;
}

template <typename T>
void swap_rows(Matrix<T>& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

}  // namespace

Echelon rref(const ExactMatrix& m) {
  Echelon e{m, {}, {}};
  ExactMatrix& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    long p = choose_pivot(a, r, c);
    if (p < 0) continue;
    swap_rows(a, r, static_cast<std::size_t>(p));
    RatFunc pv = a(r, c);
    e.pivot_values.push_back(pv);
    if (!pv.is_one()) {
      RatFunc inv = pv.inverse();
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(r, j) *= inv;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      RatFunc f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const ExactMatrix& m) {
  return rref(m).pivots.size();
}

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = RatFunc(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const ExactMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw MathError("right-hand side length mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  Vec x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (!m.square()) throw MathError("inverse of a non-square matrix");
  std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = RatFunc(1);
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

namespace {

template <typename T>
T exact_quotient(const T& a, const T& b);

template <>
MPoly exact_quotient(const MPoly& a, const MPoly& b) {
  auto q = MPoly::divide_exact(a, b);
  if (!q) throw MathError("Bareiss step produced an inexact division");
  return *q;
}

template <>
RatFunc exact_quotient(const RatFunc& a, const RatFunc& b) {
  return a / b;
}

// Fraction-free forward elimination; returns rank and, for square input,
// the determinant in `det`.
template <typename T>
std::size_t bareiss(Matrix<T> a, T* det) {
  std::size_t r = 0;
  T prev(1);
  int sign = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    long p = choose_pivot(a, r, c);
    if (p < 0) {
      if (det) {
        *det = T(0);
        return r;
      }
      continue;
    }
    if (static_cast<std::size_t>(p) != r) {
      swap_rows(a, r, static_cast<std::size_t>(p));
      sign = -sign;
    }
    const T piv = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const T lead = a(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        T v = piv * a(i, j) - lead * a(r, j);
        a(i, j) = v.is_zero() ? T(0) : exact_quotient(v, prev);
      }
      a(i, c) = T(0);
    }
    prev = piv;
    ++r;
  }
  if (det) *det = r == a.rows() ? (sign < 0 ? -prev : prev) : T(0);
  return r;
}

}  // namespace

std::size_t rank_bareiss(const PolyMatrix& m) {
  return bareiss<MPoly>(m, nullptr);
}

MPoly det_bareiss(const PolyMatrix& m) {
  if (!m.square()) throw MathError("determinant of a non-square matrix");
  if (m.rows() == 0) return MPoly(1);
  MPoly d;
  bareiss<MPoly>(m, &d);
  return d;
}

RatFunc determinant(const ExactMatrix& m) {
  if (!m.square()) throw MathError("determinant of a non-square matrix");
  if (m.rows() == 0) return RatFunc(1);
  bool poly = std::all_of(m.data().begin(), m.data().end(),
                          [](const RatFunc& x) { return x.is_polynomial(); });
  if (poly) {
    PolyMatrix pm(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) pm(i, j) = m(i, j).num();
    return RatFunc(det_bareiss(pm));
  }
  RatFunc d;
  bareiss<RatFunc>(m, &d);
  return d;
}

RatFunc char_poly(const ExactMatrix& m) {
  if (!m.square()) throw MathError("characteristic polynomial of a non-square matrix");
  RatFunc x = RatFunc::variable(kCharPolyVariable);
  ExactMatrix a = -m;
  for (std::size_t i = 0; i < m.rows(); ++i) a(i, i) += x;
  return determinant(a);
}

namespace {

// Expansion along the first row of the principal submatrix on `idx`.
RatFunc pfaffian_rec(const ExactMatrix& m, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return RatFunc(1);
  RatFunc total;
  std::size_t i0 = idx[0];
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const RatFunc& a = m(i0, idx[k]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != k) rest.push_back(idx[t]);
    RatFunc sub = pfaffian_rec(m, rest);
    if (sub.is_zero()) continue;
    if (k % 2 == 1)
      total += a * sub;
    else
      total -= a * sub;
  }
  return total;
}

}  // namespace

RatFunc pfaffian(const ExactMatrix& m) {
  if (!m.square()) throw MathError("pfaffian of a non-square matrix");
  if (m.rows() % 2 != 0) throw MathError("pfaffian of an odd-dimensional matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (!(m(i, j) + m(j, i)).is_zero()) throw MathError("pfaffian of a non-skew matrix");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pfaffian_rec(m, idx);
}

PolyMatrix clear_denominators(const ExactMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    MPoly l(1);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const MPoly& d = m(i, j).den();
      if (d.is_constant()) continue;
      MPoly g = gcd(l, d);
      l = l * *MPoly::divide_exact(d, g);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const RatFunc& x = m(i, j);
      if (x.is_zero()) continue;
      out(i, j) = *MPoly::divide_exact(l * x.num(), x.den());
    }
  }
  return out;
}

ExactMatrix to_exact(const PolyMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RatFunc(m(i, j));
  return out;
}

ExactMatrix specialize(const ExactMatrix& m, const Assignment& a) {
  if (a.empty()) return m;
  auto sub = to_substitution(a);
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).substitute(sub);
  return out;
}

namespace {

ExactMatrix rows_matrix(const std::vector<Vec>& vs) {
  std::size_t n = vs.empty() ? 0 : vs[0].size();
  ExactMatrix m(vs.size(), n);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != n) throw MathError("vectors of unequal length");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = vs[i][j];
  }
  return m;
}

}  // namespace

std::size_t span_rank(const std::vector<Vec>& vs) {
  if (vs.empty()) return 0;
  return rank(rows_matrix(vs));
}

std::vector<Vec> span_basis(const std::vector<Vec>& vs) {
  if (vs.empty()) return {};
  Echelon e = rref(rows_matrix(vs));
  std::vector<Vec> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

std::optional<Vec> span_coordinates(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) {
    if (is_zero_vec(v)) return Vec{};
    return std::nullopt;
  }
  return solve(rows_matrix(basis).transpose(), v);
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  return span_coordinates(basis, v).has_value();
}

}  // namespace liecas
