#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gsp4h/errors.hpp"
#include "gsp4h/scalar.hpp"

namespace gsp4h {

template <class F>
using Vec = std::vector<F>;

// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), d_(rows * cols) {}
  static Matrix from_rows(const std::vector<Vec<F>>& rows, size_t cols);
  static Matrix identity(size_t n);
  static Matrix diagonal(const Vec<F>& d);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  F& operator()(size_t i, size_t j) { return d_[i * c_ + j]; }
  const F& operator()(size_t i, size_t j) const { return d_[i * c_ + j]; }
  Vec<F> row(size_t i) const { return Vec<F>(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }
  Vec<F> col(size_t j) const;
  std::vector<Vec<F>> row_list() const;

  Matrix transpose() const;
  F trace() const;
  bool is_zero() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& x, const Matrix& y) { return x.zip(y, [](const F& a, const F& b) { return a + b; }); }
  friend Matrix operator-(const Matrix& x, const Matrix& y) { return x.zip(y, [](const F& a, const F& b) { return a - b; }); }
  friend Matrix operator*(const Matrix& x, const Matrix& y) { return x.mul(y); }
  friend Matrix operator*(const F& s, const Matrix& m) {
    Matrix r = m;
    for (auto& v : r.d_) v = s * v;
    return r;
  }
  Vec<F> apply(const Vec<F>& v) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  F det() const;
  // Throws DivisionByZero when singular.
  Matrix inverse() const;

 private:
  template <class Op>
  Matrix zip(const Matrix& y, Op op) const {
    if (r_ != y.r_ || c_ != y.c_) throw Error(ErrorKind::InvalidData, "matrix shape mismatch");
    Matrix out(r_, c_);
    for (size_t k = 0; k < d_.size(); ++k) out.d_[k] = op(d_[k], y.d_[k]);
    return out;
  }
  Matrix mul(const Matrix& y) const;

  size_t r_ = 0, c_ = 0;
  std::vector<F> d_;
};

// In-place reduced row echelon form; returns pivot columns.
template <class F>
std::vector<size_t> rref(Matrix<F>& m);

template <class F>
size_t rank(Matrix<F> m) { return rref(m).size(); }

// Basis of {x : m x = 0}.
template <class F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m);

// Subspace of F^n stored by its reduced echelon basis.
template <class F>
class Subspace {
 public:
  explicit Subspace(size_t n = 4) : n_(n), basis_(0, n) {}
  static Subspace span(const std::vector<Vec<F>>& vs, size_t n);
  static Subspace whole(size_t n);
  static Subspace coordinate(const std::vector<size_t>& idx, size_t n);

  size_t ambient() const { return n_; }
  size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  std::vector<Vec<F>> vectors() const { return basis_.row_list(); }

  bool contains(const Vec<F>& v) const;
  bool contains(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // Annihilator under the dot product.
  Subspace annihilator() const;
  // J-orthogonal complement; ambient dimension must be 4.
  Subspace perp() const;
  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  size_t n_;
  Matrix<F> basis_;
};

template <class F>
Matrix<F> j_form();

}  // namespace gsp4h

#include "gsp4h/matrix_impl.hpp"
