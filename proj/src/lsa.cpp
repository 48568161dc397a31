#include "liecas/lsa.hpp"

#include <algorithm>

namespace liecas {

RatFunc trace(const ExactMatrix& m) {
  RatFunc t;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

// ---------------------------------------------------------------- LSA

Vec LSA::product(const Vec& x, const Vec& y) const {
  Vec out = zero_vec(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      RatFunc c = x[i] * y[j];
      const Vec& p = product(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!p[k].is_zero()) out[k] += c * p[k];
    }
  }
  return out;
}

ExactMatrix LSA::left(std::size_t i) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = product(i, j)[k];
  return m;
}

ExactMatrix LSA::right(std::size_t i) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = product(j, i)[k];
  return m;
}

ExactMatrix LSA::left(const Vec& x) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) m = m + left(i).scaled(x[i]);
  return m;
}

ExactMatrix LSA::right(const Vec& x) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) m = m + right(i).scaled(x[i]);
  return m;
}

LSA make_lsa_unchecked(std::size_t dim, std::vector<std::string> params, std::vector<Vec> table) {
  LSA a;
  a.dim_ = dim;
  a.params_ = std::move(params);
  a.prod_ = std::move(table);
  LieAlgebra::Table t;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      Vec v(dim);
      for (std::size_t k = 0; k < dim; ++k) v[k] = a.product(i, j)[k] - a.product(j, i)[k];
      if (!is_zero_vec(v)) t[{i, j}] = v;
    }
  a.lie_ = make_algebra_unchecked(dim, a.params_, std::move(t));
  return a;
}

std::string AssociatorDefect::describe() const {
  return "associator not symmetric on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" +
         std::to_string(k + 1) + "): (x,y,z)-(y,x,z) = " + format_vector(defect);
}

std::vector<AssociatorDefect> associator_defects(const LSA& a) {
  std::size_t n = a.dim();
  std::vector<AssociatorDefect> out;
  std::vector<ExactMatrix> L;
  for (std::size_t i = 0; i < n; ++i) L.push_back(a.left(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // (x,y,z) - (y,x,z) = (xy)z - x(yz) - (yx)z + y(xz)
        Vec xy_minus_yx(n);
        for (std::size_t m = 0; m < n; ++m) xy_minus_yx[m] = a.product(i, j)[m] - a.product(j, i)[m];
        Vec t1 = a.left(xy_minus_yx).apply(unit_vec(n, k));
        Vec t2 = L[i].apply(a.product(j, k));
        Vec t3 = L[j].apply(a.product(i, k));
        Vec d(n);
        for (std::size_t m = 0; m < n; ++m) d[m] = t1[m] - t2[m] + t3[m];
        if (!is_zero_vec(d)) out.push_back({i, j, k, d});
      }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> left_representation_defects(const LSA& a) {
  std::size_t n = a.dim();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<ExactMatrix> L;
  for (std::size_t i = 0; i < n; ++i) L.push_back(a.left(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ExactMatrix lhs = L[i] * L[j] - L[j] * L[i];
      ExactMatrix rhs = a.left(a.commutator().bracket(i, j));
      if (!(lhs == rhs)) out.emplace_back(i, j);
    }
  return out;
}

bool is_associative(const LSA& a) {
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.product(a.product(i, j), unit_vec(n, k));
        Vec rhs = a.product(unit_vec(n, i), a.product(j, k));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

LSA build_lsa(std::size_t dim, std::vector<std::string> params, const std::vector<ProductEntry>& products) {
  if (dim == 0) throw ValidationError("LSA dimension must be positive");
  std::vector<Vec> table(dim * dim, zero_vec(dim));
  std::vector<bool> seen(dim * dim, false);
  for (const auto& p : products) {
    if (p.i >= dim || p.j >= dim)
      throw ValidationError("product index out of range: e" + std::to_string(p.i + 1) + ".e" +
                            std::to_string(p.j + 1));
    if (p.value.size() != dim) throw ValidationError("product value has the wrong length");
    if (seen[p.i * dim + p.j])
      throw ValidationError("duplicate product entry e" + std::to_string(p.i + 1) + ".e" + std::to_string(p.j + 1));
    seen[p.i * dim + p.j] = true;
    table[p.i * dim + p.j] = p.value;
  }
  LSA a = make_lsa_unchecked(dim, std::move(params), std::move(table));
  auto assoc = associator_defects(a);
  auto jac = jacobi_defects(a.commutator());
  auto lrep = left_representation_defects(a);
  if (!assoc.empty()) throw ValidationError(assoc.front().describe());
  if (!jac.empty()) throw ValidationError("commutator is not a Lie bracket: " + jac.front().describe());
  if (!lrep.empty())
    throw ValidationError("[L(e" + std::to_string(lrep.front().first + 1) + "), L(e" +
                          std::to_string(lrep.front().second + 1) + ")] != L([e_i, e_j]) although associators are symmetric");
  return a;
}

std::vector<std::pair<std::size_t, std::size_t>> commutator_defects(const LSA& a, const LieAlgebra& g) {
  if (a.dim() != g.dim()) throw MathError("LSA and algebra dimensions differ");
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.commutator().bracket(i, j) != g.bracket(i, j)) out.emplace_back(i, j);
  return out;
}

LSA specialize(const LSA& a, const Assignment& values) {
  if (values.empty()) return a;
  auto sub = to_substitution(values);
  std::vector<Vec> table;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec v = a.product(i, j);
      for (auto& x : v) x = x.substitute(sub);
      table.push_back(v);
    }
  std::vector<std::string> params;
  for (const auto& p : a.params())
    if (!values.count(p)) params.push_back(p);
  return make_lsa_unchecked(a.dim(), params, std::move(table));
}

// ---------------------------------------------------------------- right identity

RightIdentity right_identity(const LSA& a) {
  std::size_t n = a.dim();
  // sum_k e_k (e_j . e_k)_m = delta_jm
  ExactMatrix sys(n * n, n);
  Vec rhs(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t k = 0; k < n; ++k) sys(j * n + m, k) = a.product(j, k)[m];
      if (j == m) rhs[j * n + m] = RatFunc(1);
    }
  RightIdentity out;
  auto sol = solve(sys, rhs);
  if (!sol) return out;
  out.element = *sol;
  out.free_directions = kernel_basis(sys);
  out.kind = out.free_directions.empty() ? RightIdentity::Kind::Unique : RightIdentity::Kind::Family;
  out.central = a.left(out.element) == ExactMatrix::identity(n);
  return out;
}

// ---------------------------------------------------------------- symplectic

LSA lsa_from_symplectic(const LieAlgebra& g, const AltForm& w) {
  std::size_t n = g.dim();
  if (!is_nondegenerate(n, w)) throw ValidationError("form is degenerate");
  if (!ce_d(g, w).is_zero()) throw ValidationError("form is not closed");
  ExactMatrix G = form_gram(w);
  auto Ginv_t = inverse(G.transpose());
  std::vector<Vec> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec rhs(n);
      for (std::size_t z = 0; z < n; ++z) {
        Vec b = g.bracket(i, z);
        RatFunc s;
        for (std::size_t m = 0; m < n; ++m)
          if (!b[m].is_zero()) s += G(j, m) * b[m];
        rhs[z] = -s;
      }
      table.push_back(Ginv_t->apply(rhs));
    }
  LSA a = make_lsa_unchecked(n, g.params(), std::move(table));
  if (!(a.commutator() == g)) throw ValidationError("induced product does not reproduce the bracket");
  if (!associator_defects(a).empty()) throw ValidationError("induced product is not left-symmetric");
  return a;
}

Reduction lagrangian_reduction(const LieAlgebra& g, const AltForm& w, const Subspace& j) {
  std::size_t n = g.dim();
  auto cls = classify_ideal(g, w, j);
  if (!cls.is_ideal) throw ValidationError("subspace is not an ideal");
  if (!cls.lagrangian) throw ValidationError("ideal is not Lagrangian");
  Reduction out;
  std::vector<Vec> acc = j.basis();
  for (std::size_t i = 0; i < n && out.complement.size() < n - j.dim(); ++i) {
    acc.push_back(unit_vec(n, i));
    if (span_rank(acc) == acc.size())
      out.complement.push_back(i);
    else
      acc.pop_back();
  }
  std::size_t q = out.complement.size();
  const auto& jb = j.basis();
  ExactMatrix G = form_gram(w);
  // pairing(k, m) = w(c_k, j_m)
  ExactMatrix pairing(q, jb.size());
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t m = 0; m < jb.size(); ++m) {
      RatFunc s;
      for (std::size_t b = 0; b < n; ++b)
        if (!jb[m][b].is_zero()) s += G(out.complement[k], b) * jb[m][b];
      pairing(k, m) = s;
    }
  auto pinv_t = inverse(pairing.transpose());
  if (!pinv_t) throw MathError("degenerate pairing between the quotient and a Lagrangian ideal");
  std::vector<Vec> table;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) {
      Vec rhs(jb.size());
      for (std::size_t m = 0; m < jb.size(); ++m) {
        Vec br = g.bracket(unit_vec(n, out.complement[a]), jb[m]);
        RatFunc s;
        for (std::size_t t = 0; t < n; ++t)
          if (!br[t].is_zero()) s += G(out.complement[b], t) * br[t];
        rhs[m] = -s;
      }
      table.push_back(pinv_t->apply(rhs));
    }
  out.quotient = make_lsa_unchecked(q, g.params(), std::move(table));
  if (!associator_defects(out.quotient).empty()) throw ValidationError("reduced product is not left-symmetric");
  return out;
}

// ---------------------------------------------------------------- cocycles

ExactMatrix Representation::act(const Vec& x) const {
  ExactMatrix m(module_dim, module_dim);
  for (std::size_t i = 0; i < algebra_dim; ++i)
    if (!x[i].is_zero()) m = m + matrices[i].scaled(x[i]);
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> representation_defects(const LieAlgebra& g,
                                                                         const Representation& rho) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      ExactMatrix lhs = rho.act(g.bracket(i, j));
      ExactMatrix rhs = rho.matrices[i] * rho.matrices[j] - rho.matrices[j] * rho.matrices[i];
      if (!(lhs == rhs)) out.emplace_back(i, j);
    }
  return out;
}

CocycleLSA lsa_from_cocycle(const LieAlgebra& g, const Representation& rho, const ExactMatrix& phi) {
  std::size_t n = g.dim();
  if (phi.cols() != n || phi.rows() != rho.module_dim) throw MathError("cocycle has the wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec lhs = phi.apply(g.bracket(i, j));
      Vec a = rho.matrices[i].apply(phi.col(j));
      Vec b = rho.matrices[j].apply(phi.col(i));
      for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
      if (!(lhs == a))
        throw ValidationError("1-cocycle law fails on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ")");
    }
  auto phi_inv = phi.square() ? inverse(phi) : std::nullopt;
  if (!phi_inv) throw ValidationError("1-cocycle is singular");
  std::vector<Vec> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.push_back(phi_inv->apply(rho.matrices[i].apply(phi.col(j))));
  CocycleLSA out{make_lsa_unchecked(n, g.params(), std::move(table)), std::nullopt};
  if (!associator_defects(out.product).empty()) throw ValidationError("cocycle product is not left-symmetric");
  // rho(e_i) u = phi(e_i) for all i, then e = phi^{-1} u.
  std::size_t m = rho.module_dim;
  ExactMatrix sys(n * m, m);
  Vec rhs(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) sys(i * m + r, c) = rho.matrices[i](r, c);
      rhs[i * m + r] = phi(r, i);
    }
  if (auto u = solve(sys, rhs)) out.right_identity = phi_inv->apply(*u);
  return out;
}

TraceReport trace_checks(const LSA& a, const std::vector<std::size_t>& simple_part) {
  TraceReport rep;
  for (auto s : simple_part) {
    RatFunc t = trace(a.right(s));
    rep.simple_traces.emplace_back(s, t);
    if (!t.is_zero()) {
      rep.ok = false;
      rep.failures.push_back("tr R(e" + std::to_string(s + 1) + ") = " + t.str());
    }
  }
  auto e = right_identity(a);
  if (e.kind != RightIdentity::Kind::None) {
    RatFunc t = trace(a.right(e.element));
    rep.identity_trace = t;
    if (!(t == RatFunc(static_cast<long>(a.dim())))) {
      rep.ok = false;
      rep.failures.push_back("tr R(e) = " + t.str());
    }
  }
  return rep;
}

}  // namespace liecas
