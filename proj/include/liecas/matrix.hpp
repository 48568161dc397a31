#pragma once

#include "liecas/error.hpp"
#include "liecas/ratfunc.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liecas {

template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw MathError("matrix entry count does not match shape");
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw MathError("matrix product shape mismatch");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (!o(k, j).is_zero()) m(i, j) += a * o(k, j);
      }
    return m;
  }
  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
    return m;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }
  Matrix scaled(const T& s) const {
    Matrix m = *this;
    for (auto& x : m.data_) x = x * s;
    return m;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw MathError("matrix-vector shape mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  const std::vector<T>& data() const { return data_; }

private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw MathError("matrix shape mismatch");
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<RatFunc>;
using PolyMatrix = Matrix<MPoly>;
using Vec = std::vector<RatFunc>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);

// ---- exact linear algebra over Q(params)

struct Echelon {
  ExactMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;    // pivot column per nonzero row
  std::vector<RatFunc> pivot_values;  // entries divided out, for degeneration reporting
};

// Gauss-Jordan elimination. Pivot choice per column: a nonzero constant if
// one exists, else the entry of lowest total degree (first such row).
Echelon rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);

// Basis of {v : M v = 0}; one vector per free column, with a 1 there.
std::vector<Vec> kernel_basis(const ExactMatrix& m);

// A solution of M x = b with free variables set to 0, if consistent.
std::optional<Vec> solve(const ExactMatrix& m, const Vec& b);

std::optional<ExactMatrix> inverse(const ExactMatrix& m);
RatFunc determinant(const ExactMatrix& m);

// Rank over the fraction field, computed without fractions.
std::size_t rank_bareiss(const PolyMatrix& m);
MPoly det_bareiss(const PolyMatrix& m);

// det(X*I - M) in the variable "X_charpoly".
inline constexpr const char* kCharPolyVariable = "X_charpoly";
RatFunc char_poly(const ExactMatrix& m);

RatFunc pfaffian(const ExactMatrix& m);

// Multiply each row by a common denominator.
PolyMatrix clear_denominators(const ExactMatrix& m);
ExactMatrix to_exact(const PolyMatrix& m);
ExactMatrix specialize(const ExactMatrix& m, const Assignment& a);

// Rank of the vectors as rows.
std::size_t span_rank(const std::vector<Vec>& vs);
// Independent subset forming an echelon basis of the span.
std::vector<Vec> span_basis(const std::vector<Vec>& vs);
bool in_span(const std::vector<Vec>& basis, const Vec& v);
// Coefficients c with sum c_i basis_i = v.
std::optional<Vec> span_coordinates(const std::vector<Vec>& basis, const Vec& v);

}  // namespace liecas
