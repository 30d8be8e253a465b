#pragma once

namespace gsp4h {

template <class F>
Matrix<F> Matrix<F>::from_rows(const std::vector<Vec<F>>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::InvalidData, "ragged matrix rows");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class F>
Matrix<F> Matrix<F>::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

template <class F>
Matrix<F> Matrix<F>::diagonal(const Vec<F>& d) {
  Matrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

template <class F>
Vec<F> Matrix<F>::col(size_t j) const {
  Vec<F> v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

template <class F>
std::vector<Vec<F>> Matrix<F>::row_list() const {
  std::vector<Vec<F>> out;
  out.reserve(r_);
  for (size_t i = 0; i < r_; ++i) out.push_back(row(i));
  return out;
}

template <class F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class F>
F Matrix<F>::trace() const {
  F s{};
  for (size_t i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
  return s;
}

template <class F>
bool Matrix<F>::is_zero() const {
  for (const auto& v : d_)
    if (!v.is_zero()) return false;
  return true;
}

template <class F>
Matrix<F> Matrix<F>::operator-() const {
  Matrix r = *this;
  for (auto& v : r.d_) v = -v;
  return r;
}

template <class F>
Matrix<F> Matrix<F>::mul(const Matrix& y) const {
  if (c_ != y.r_) throw Error(ErrorKind::InvalidData, "matrix shape mismatch in product");
  Matrix out(r_, y.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < c_; ++k) {
      const F& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < y.c_; ++j) {
        const F& b = y(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  return out;
}

template <class F>
Vec<F> Matrix<F>::apply(const Vec<F>& v) const {
  if (v.size() != c_) throw Error(ErrorKind::InvalidData, "vector length mismatch");
  Vec<F> out(r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

template <class F>
F Matrix<F>::det() const {
  if (r_ != c_) throw Error(ErrorKind::InvalidData, "determinant of non-square matrix");
  Matrix m = *this;
  F d(1);
  for (size_t k = 0; k < r_; ++k) {
    size_t p = k;
    while (p < r_ && m(p, k).is_zero()) ++p;
    if (p == r_) return F{};
    if (p != k) {
      for (size_t j = 0; j < c_; ++j) std::swap(m(p, j), m(k, j));
      d = -d;
    }
    d *= m(k, k);
    F inv = F(1) / m(k, k);
    for (size_t i = k + 1; i < r_; ++i) {
      if (m(i, k).is_zero()) continue;
      F f = m(i, k) * inv;
      for (size_t j = k; j < c_; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

template <class F>
Matrix<F> Matrix<F>::inverse() const {
  if (r_ != c_) throw Error(ErrorKind::InvalidData, "inverse of non-square matrix");
  Matrix aug(r_, 2 * c_);
  for (size_t i = 0; i < r_; ++i) {
    for (size_t j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, c_ + i) = F(1);
  }
  auto piv = rref(aug);
  if (piv.size() < r_ || piv[r_ - 1] >= c_) throw Error(ErrorKind::DivisionByZero, "singular matrix");
  Matrix out(r_, c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) out(i, j) = aug(i, c_ + j);
  return out;
}

template <class F>
std::vector<size_t> rref(Matrix<F>& m) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (size_t j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m) {
  Matrix<F> a = m;
  auto piv = rref(a);
  std::vector<bool> is_piv(m.cols(), false);
  for (size_t p : piv) is_piv[p] = true;
  std::vector<Vec<F>> out;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec<F> v(m.cols());
    v[f] = F(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
Subspace<F> Subspace<F>::span(const std::vector<Vec<F>>& vs, size_t n) {
  Subspace s(n);
  if (vs.empty()) return s;
  Matrix<F> m = Matrix<F>::from_rows(vs, n);
  size_t k = rref(m).size();
  s.basis_ = Matrix<F>(k, n);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) s.basis_(i, j) = m(i, j);
  return s;
}

template <class F>
Subspace<F> Subspace<F>::whole(size_t n) {
  Subspace s(n);
  s.basis_ = Matrix<F>::identity(n);
  return s;
}

template <class F>
Subspace<F> Subspace<F>::coordinate(const std::vector<size_t>& idx, size_t n) {
  std::vector<Vec<F>> vs;
  for (size_t i : idx) {
    Vec<F> v(n);
    v.at(i) = F(1);
    vs.push_back(std::move(v));
  }
  return span(vs, n);
}

template <class F>
bool Subspace<F>::contains(const Vec<F>& v) const {
  auto vs = vectors();
  vs.push_back(v);
  return span(vs, n_).dim() == dim();
}

template <class F>
bool Subspace<F>::contains(const Subspace& o) const {
  return sum(o).dim() == dim();
}

template <class F>
Subspace<F> Subspace<F>::sum(const Subspace& o) const {
  auto vs = vectors();
  auto ws = o.vectors();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return span(vs, n_);
}

template <class F>
Subspace<F> Subspace<F>::annihilator() const {
  if (dim() == 0) return whole(n_);
  return span(nullspace(basis_), n_);
}

template <class F>
Subspace<F> Subspace<F>::intersect(const Subspace& o) const {
  auto eqs = annihilator().vectors();
  auto more = o.annihilator().vectors();
  eqs.insert(eqs.end(), more.begin(), more.end());
  if (eqs.empty()) return whole(n_);
  return span(nullspace(Matrix<F>::from_rows(eqs, n_)), n_);
}

template <class F>
Matrix<F> j_form() {
  Matrix<F> j(4, 4);
  j(0, 3) = F(1);
  j(1, 2) = F(1);
  j(2, 1) = F(-1);
  j(3, 0) = F(-1);
  return j;
}

template <class F>
Subspace<F> Subspace<F>::perp() const {
  if (n_ != 4) throw Error(ErrorKind::InvalidData, "perp requires the 4-dimensional symplectic space");
  if (dim() == 0) return whole(4);
  return span(nullspace(basis_ * j_form<F>()), 4);
}

}  // namespace gsp4h
