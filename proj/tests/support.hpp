#pragma once

#include <random>

#include "gsp4h/ext_ledger.hpp"
#include "gsp4h/global_hecke.hpp"
#include "gsp4h/hodge_kernel.hpp"
#include "gsp4h/phi_module.hpp"

namespace support {

using namespace gsp4h;
using Q = Rational;
using R = RatFunc;

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long rand_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Q rand_q(long range = 30, long maxden = 9) { return Q(rand_int(-range, range), rand_int(1, maxden)); }

inline Q rand_nonzero_q(long range = 30, long maxden = 9) {
  for (;;) {
    Q x = rand_q(range, maxden);
    if (!x.is_zero()) return x;
  }
}

inline std::pair<Q, Q> rand_valid_ab() {
  for (;;) {
    Q a = rand_q(), b = rand_q();
    if (nondegenerate(a, b)) return {a, b};
  }
}

inline R rand_poly(int deg, long range = 5) {
  R p;
  const R a = R::var_a(), b = R::var_b();
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) {
      long c = rand_int(-range, range);
      if (c == 0) continue;
      R m{Q(c)};
      for (int k = 0; k < i; ++k) m = m * a;
      for (int k = 0; k < j; ++k) m = m * b;
      p = p + m;
    }
  return p;
}

inline R rand_ratfunc() {
  for (;;) {
    R d = rand_poly(1);
    if (!d.is_zero()) return rand_poly(2) / d;
  }
}

inline Mat4<Q> mat(std::vector<std::vector<long>> rows) {
  std::vector<Vec<Q>> r;
  for (const auto& row : rows) r.push_back(Vec<Q>(row.begin(), row.end()));
  return Mat4<Q>::from_rows(r, 4);
}

inline Mat4<Q> elem(int i, int j) {
  Mat4<Q> m(4, 4);
  m(i - 1, j - 1) = Q(1);
  return m;
}

inline Mat4<Q> rand_mat(long range = 6) {
  Mat4<Q> m(4, 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) m(i, j) = Q(rand_int(-range, range));
  return m;
}

// Entrywise gsp4 test: J is antidiagonal with J(i, 5-i) = eps_i, eps = (1,1,-1,-1).
template <class F>
bool gsp4_oracle(const Mat4<F>& A) {
  const int eps[4] = {1, 1, -1, -1};
  const F f = A.trace() / F(2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      F lhs = F(eps[3 - j]) * A(3 - j, i) + F(eps[i]) * A(3 - i, j);
      F rhs = (j == 3 - i) ? f * F(eps[i]) : F(0);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

// L_{w,i} solved as a combination of v_1..v_{5-i} whose coordinates outside
// w^{-1}({1..i}) vanish.
template <class F>
Vec<F> oracle_line(const F& a, const F& b, const WeylElem& w, int i) {
  const auto v = standard_basis_vectors(a, b);
  const WeylElem wi = w.inverse();
  std::vector<int> allowed;
  for (int k = 1; k <= i; ++k) allowed.push_back(wi(k) - 1);
  std::vector<Vec<F>> eqs;
  for (int c = 0; c < 4; ++c) {
    if (std::find(allowed.begin(), allowed.end(), c) != allowed.end()) continue;
    Vec<F> row;
    for (int k = 0; k < 5 - i; ++k) row.push_back(v[k][c]);
    eqs.push_back(row);
  }
  const auto ns = nullspace(Matrix<F>::from_rows(eqs, static_cast<size_t>(5 - i)));
  if (ns.size() != 1) throw Error(ErrorKind::DegenerateIntersection, "oracle line is not a line");
  Vec<F> x(4);
  for (int k = 0; k < 5 - i; ++k)
    for (int c = 0; c < 4; ++c) x[c] = x[c] + ns[0][k] * v[k][c];
  return x;
}

// P diag(t) P^{-1} with the oracle lines as columns of P.
template <class F>
Mat4<F> oracle_nu(const F& a, const F& b, const WeylElem& w, const Quad<F>& t) {
  Mat4<F> P(4, 4);
  for (int i = 1; i <= 4; ++i) {
    const auto x = oracle_line(a, b, w, i);
    for (int c = 0; c < 4; ++c) P(c, i - 1) = x[c];
  }
  return P * Mat4<F>::diagonal(Vec<F>(t.begin(), t.end())) * P.inverse();
}

// The summed map in raw gl4 entries: 16 rows, column 3k+j is torus basis
// vector j in block k of WeylElem::all().
template <class F>
Matrix<F> oracle_jbar_gl4(const F& a, const F& b) {
  const Quad<F> H[3] = {{F(1), F(0), F(0), F(-1)}, {F(0), F(1), F(-1), F(0)}, {F(1), F(1), F(1), F(1)}};
  Matrix<F> m(16, 24);
  const auto& W = WeylElem::all();
  for (size_t k = 0; k < W.size(); ++k)
    for (size_t j = 0; j < 3; ++j) {
      const auto nu = oracle_nu(a, b, W[k], H[j]);
      for (size_t r = 0; r < 16; ++r) m(r, 3 * k + j) = nu(r / 4, r % 4);
    }
  return m;
}

// [nu]_B = B^{-1} nu B with B = (v1 | v2 | v3 | v4).
template <class F>
Mat4<F> in_hodge_basis(const F& a, const F& b, const Mat4<F>& nu) {
  const auto v = standard_basis_vectors(a, b);
  Mat4<F> B(4, 4);
  for (int k = 0; k < 4; ++k)
    for (int c = 0; c < 4; ++c) B(c, k) = v[k][c];
  return B.inverse() * nu * B;
}

// Matrices displayed for the eight generators in the basis (v1, v2, v3, v4).
template <class F>
std::vector<std::pair<std::string, Mat4<F>>> displayed_matrices(const F& a, const F& b) {
  const F o(1), z(0), m(-1), t(2);
  auto M = [](std::vector<Vec<F>> r) { return Mat4<F>::from_rows(r, 4); };
  const F s = a * b + a + b;
  return {
      {"f1", M({{o, z, z, z}, {z, o, z, z}, {z, z, m, z}, {z, z, z, m}})},
      {"f2", M({{o, z, z, z}, {z, o, t / (b + o), z}, {z, z, m, z}, {z, z, z, m}})},
      {"f3", M({{o, z, t / s, t * (b + o) / s}, {z, o, t * (a + o) / s, t / s}, {z, z, m, z}, {z, z, z, m}})},
      {"f4", M({{o, z, t / (a + b), t / (a + b)}, {z, o, t / (a + b), t / (a + b)}, {z, z, m, z}, {z, z, z, m}})},
      {"g1", M({{o, z, z, z}, {z, z, z, z}, {z, z, z, z}, {z, z, z, m}})},
      {"g2", M({{o, m, z, z}, {z, z, z, z}, {z, z, z, o}, {z, z, z, m}})},
      {"g3", M({{o, -(b + o), m, z}, {z, z, z, m}, {z, z, z, b + o}, {z, z, z, m}})},
      {"g4", M({{o, b / a, o / a, t / a}, {z, z, z, o / a}, {z, z, z, -b / a}, {z, z, z, m}})},
  };
}

// Subsets of {0..3} by bitmask; sum of val_p over S versus t_H from the
// jump indices and intersection dimensions with the flag.
inline AdmissibilityReport oracle_weak_admissibility(long p, const Alphas& al, const HodgeWeights& h,
                                                     const Flag<Q>& f) {
  AdmissibilityReport r;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<size_t> idx;
    Q tn;
    for (size_t j = 0; j < 4; ++j)
      if (mask & (1 << j)) {
        idx.push_back(j);
        tn += Q(padic_val(al[j], p));
      }
    const auto V = Subspace<Q>::coordinate(idx, 4);
    // Fil^{-h1} = V, Fil^{-h2} = F3, Fil^{-h3} = F2, Fil^{-h4} = F1, then 0
    long d[5] = {static_cast<long>(V.dim()), static_cast<long>(V.intersect(f.members[2]).dim()),
                 static_cast<long>(V.intersect(f.members[1]).dim()),
                 static_cast<long>(V.intersect(f.members[0]).dim()), 0};
    Q th;
    for (int k = 0; k < 4; ++k) th += Q(-h[k] * (d[k] - d[k + 1]));
    const bool ok = mask == 15 ? tn == th : tn >= th;
    if (!ok && r.admissible) {
      r.admissible = false;
      for (size_t j : idx) r.witness.push_back(static_cast<int>(j + 1));
    }
    if (mask == 15) {
      r.newton_total = tn;
      r.hodge_total = th;
    }
  }
  return r;
}

// (t)_w in E^24 with the torus basis H1 = (1,0,0,-1), H2 = (0,1,-1,0), Z = (1,1,1,1).
template <class F>
Vec<F> oracle_block(const WeylElem& w, const Quad<F>& t) {
  Vec<F> v(24);
  const size_t k = w.index();
  const F half = F(1) / F(2);
  v[3 * k] = (t[0] - t[3]) * half;
  v[3 * k + 1] = (t[1] - t[2]) * half;
  v[3 * k + 2] = (t[0] + t[3]) * half;
  return v;
}

template <class F>
Vec<F> sub(Vec<F> x, const Vec<F>& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] = x[i] - y[i];
  return x;
}

}  // namespace support
