#pragma once

#include "liecas/liealg.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liecas {

using IndexTuple = std::vector<std::size_t>;

// Alternating k-form on an n-dimensional space, in the dual basis e^1..e^n.
// Keys are strictly increasing 0-based index tuples; zero coefficients are
// never stored.
class AltForm {
public:
  using Coeffs = std::map<IndexTuple, RatFunc>;

  AltForm() = default;
  AltForm(std::size_t degree, std::size_t dim) : degree_(degree), dim_(dim) {}

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  const Coeffs& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // Any ordering of indices; repeated indices give 0.
  RatFunc coeff(const IndexTuple& idx) const;
  void add(const IndexTuple& idx, const RatFunc& c);

  // Value on a tuple of vectors (length = degree).
  RatFunc evaluate(const std::vector<Vec>& vectors) const;

  AltForm operator-() const;
  AltForm& operator+=(const AltForm& o);
  AltForm& operator-=(const AltForm& o);
  friend AltForm operator+(AltForm a, const AltForm& b) { return a += b; }
  friend AltForm operator-(AltForm a, const AltForm& b) { return a -= b; }
  AltForm scaled(const RatFunc& c) const;
  bool operator==(const AltForm& o) const {
    return degree_ == o.degree_ && dim_ == o.dim_ && coeffs_ == o.coeffs_;
  }

  AltForm substitute(const std::map<int, RatFunc>& values) const;

  // "e1^e2 - 2*e3^e4"; "0" for the zero form.
  std::string str(const std::string& prefix = "e") const;

  // Coordinates in the lexicographic basis of k-tuples.
  Vec coordinates() const;
  static AltForm from_coordinates(std::size_t degree, std::size_t dim, const Vec& coords);

private:
  std::size_t degree_ = 0;
  std::size_t dim_ = 0;
  Coeffs coeffs_;
};

// Strictly increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t k);
std::size_t binomial(std::size_t n, std::size_t k);

AltForm basis_form(std::size_t dim, const IndexTuple& idx);

// (d a)(x_0..x_k) = sum_{i<j} (-1)^{i+j} a([x_i,x_j], x_0..^i..^j..x_k);
// on 1-forms d xi(x,y) = -xi([x,y]).
AltForm ce_d(const LieAlgebra& g, const AltForm& a);
// Matrix of d from k-forms to (k+1)-forms in lexicographic tuple coordinates.
ExactMatrix ce_d_matrix(const LieAlgebra& g, std::size_t k);

AltForm wedge(const AltForm& a, const AltForm& b);

// G(i,j) = w(e_i, e_j).
ExactMatrix form_gram(const AltForm& w);
bool is_nondegenerate(std::size_t dim, const AltForm& w);
AltForm form_from_gram(const ExactMatrix& g);

// Some b with d b = w (free coordinates zero), or nullopt. Throws if w is not closed.
std::optional<AltForm> find_primitive(const LieAlgebra& g, const AltForm& w);

AltForm specialize(const AltForm& w, const Assignment& values);

}  // namespace liecas
