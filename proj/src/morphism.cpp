#include "liecas/morphism.hpp"

namespace liecas {

std::string HomDefect::describe() const {
  return "homomorphism fails on (e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
         "): defect " + format_vector(defect);
}

namespace {

void require_shape(const LinMap& phi, std::size_t src, std::size_t dst) {
  if (phi.cols() != src || phi.rows() != dst) throw MathError("map shape does not match the algebras");
}

Vec difference(const Vec& a, const Vec& b) {
  Vec out = a;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b[k];
  return out;
}

}  // namespace

std::vector<HomDefect> check_homomorphism(const LinMap& phi, const LieAlgebra& g1, const LieAlgebra& g2) {
  require_shape(phi, g1.dim(), g2.dim());
  std::vector<HomDefect> out;
  std::vector<Vec> images;
  for (std::size_t j = 0; j < g1.dim(); ++j) images.push_back(phi.col(j));
  for (std::size_t i = 0; i < g1.dim(); ++i)
    for (std::size_t j = i + 1; j < g1.dim(); ++j) {
      Vec d = difference(phi.apply(g1.bracket(i, j)), g2.bracket(images[i], images[j]));
      if (!is_zero_vec(d)) out.push_back({i, j, d});
    }
  return out;
}

bool is_isomorphism(const LinMap& phi, const LieAlgebra& g1, const LieAlgebra& g2) {
  return g1.dim() == g2.dim() && is_invertible(phi) && check_homomorphism(phi, g1, g2).empty();
}

std::vector<HomDefect> check_lsa_homomorphism(const LinMap& phi, const LSA& a, const LSA& b) {
  require_shape(phi, a.dim(), b.dim());
  std::vector<HomDefect> out;
  std::vector<Vec> images;
  for (std::size_t j = 0; j < a.dim(); ++j) images.push_back(phi.col(j));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec d = difference(phi.apply(a.product(i, j)), b.product(images[i], images[j]));
      if (!is_zero_vec(d)) out.push_back({i, j, d});
    }
  return out;
}

bool is_invertible(const LinMap& phi) {
  return phi.square() && rank(phi) == phi.rows();
}

LinMap inverse_map(const LinMap& phi) {
  auto inv = phi.square() ? inverse(phi) : std::nullopt;
  if (!inv) throw MathError("map is singular");
  return *inv;
}

LieAlgebra transport(const LieAlgebra& g, const LinMap& phi) {
  require_shape(phi, g.dim(), g.dim());
  LinMap inv = inverse_map(phi);
  std::size_t n = g.dim();
  std::vector<Vec> pre;
  for (std::size_t j = 0; j < n; ++j) pre.push_back(inv.col(j));
  LieAlgebra::Table t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = phi.apply(g.bracket(pre[i], pre[j]));
      if (!is_zero_vec(v)) t[{i, j}] = v;
    }
  return make_algebra_unchecked(n, g.params(), std::move(t));
}

LSA transport(const LSA& a, const LinMap& phi) {
  require_shape(phi, a.dim(), a.dim());
  LinMap inv = inverse_map(phi);
  std::size_t n = a.dim();
  std::vector<Vec> table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.push_back(phi.apply(a.product(inv.col(i), inv.col(j))));
  return make_lsa_unchecked(n, a.params(), std::move(table));
}

AltForm pullback_form(const LinMap& phi, const AltForm& w) {
  if (phi.rows() != w.dim()) throw MathError("form dimension does not match the map target");
  std::size_t n = phi.cols();
  std::vector<Vec> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(phi.col(j));
  AltForm out(w.degree(), n);
  for (const auto& t : index_tuples(n, w.degree())) {
    std::vector<Vec> args;
    for (auto k : t) args.push_back(images[k]);
    out.add(t, w.evaluate(args));
  }
  return out;
}

AltForm pushforward_form(const LinMap& phi, const AltForm& w) {
  return pullback_form(inverse_map(phi), w);
}

bool is_symplectomorphism(const LinMap& phi, const LieAlgebra& g1, const AltForm& w1, const LieAlgebra& g2,
                          const AltForm& w2) {
  if (w1.dim() != g1.dim() || w2.dim() != g2.dim()) throw MathError("form and algebra dimensions differ");
  if (!is_isomorphism(phi, g1, g2)) return false;
  return pullback_form(phi, w2) == w1;
}

}  // namespace liecas
