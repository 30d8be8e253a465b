#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "gsp4h/rational.hpp"
#include "gsp4h/symplectic.hpp"

namespace gsp4h {

// Permutation of {1,2,3,4} in one-line notation: p[k-1] = w(k).
class WeylElem {
 public:
  WeylElem() : p_{1, 2, 3, 4} {}
  explicit WeylElem(std::array<int, 4> p);

  static WeylElem id() { return {}; }
  static WeylElem s1() { return WeylElem({2, 1, 4, 3}); }
  static WeylElem s2() { return WeylElem({1, 3, 2, 4}); }
  static WeylElem s0() { return WeylElem({4, 3, 2, 1}); }
  // The 8 elements of W in lexicographic one-line order.
  static const std::vector<WeylElem>& all();
  // All 24 permutations in lexicographic order.
  static std::vector<WeylElem> all_s4();

  int operator()(int k) const { return p_[k - 1]; }
  const std::array<int, 4>& one_line() const { return p_; }
  bool in_W() const { return p_[0] + p_[3] == 5 && p_[1] + p_[2] == 5; }

  // (x*y)(k) = x(y(k))
  friend WeylElem operator*(const WeylElem& x, const WeylElem& y);
  WeylElem inverse() const;
  friend bool operator==(const WeylElem&, const WeylElem&) = default;
  friend auto operator<=>(const WeylElem&, const WeylElem&) = default;

  // Index into all(); requires in_W().
  size_t index() const;
  int length() const;
  // Shortest word in s1, s2 ("e" for the identity), lexicographically least.
  std::string word() const;
  std::string one_line_string() const;
  // Accepts "e"/"id", "s0", words such as "s1s2" or "s2*s1", and "[2,1,4,3]".
  static WeylElem parse(std::string_view s);

 private:
  std::array<int, 4> p_;
};

// Diagram automorphism exchanging s1 and s2.
WeylElem check_involution(const WeylElem& w);

// Signed permutation matrix in GSp4 representing w.
Mat4<Rational> weyl_matrix(const WeylElem& w);

// Exponents (n1, n2, n3) of p1^n1 p2^n2 p3^n3.
template <class T>
using Triple = std::array<T, 3>;
template <class T>
using Quad = std::array<T, 4>;

using Weight = Triple<Rational>;
using CocharTuple = Quad<Rational>;

// Action of w on X, written additively; T needs + and - (characters use
// multiplication and division).
template <class T>
Triple<T> weyl_act(const WeylElem& w, const Triple<T>& n) {
  // exponents on diag(x1,x2,x3,x4), with x3 eliminated via x3 = x1 x4 / x2
  Quad<T> e{n[0] + n[2], n[1], n[1] - n[1], n[2]};
  Quad<T> m = e;
  for (int i = 1; i <= 4; ++i) m[w(i) - 1] = e[i - 1];
  Quad<T> r{m[0] + m[2], m[1] - m[2], m[2] - m[2], m[3] + m[2]};
  return {r[0] - r[3], r[1], r[3]};
}

// Entry permutation by w^{-1}: (w m)_i = m_{w^{-1}(i)}.
template <class T>
Quad<T> weyl_act(const WeylElem& w, const Quad<T>& m) {
  WeylElem wi = w.inverse();
  Quad<T> r = m;
  for (int i = 1; i <= 4; ++i) r[i - 1] = m[wi(i) - 1];
  return r;
}

template <class T>
bool satisfies_torus_constraint(const Quad<T>& m) {
  return m[0] + m[3] == m[1] + m[2];
}

// (m1 - m3, m1 - m2, m4). Throws ConstraintViolated unless m1+m4 = m2+m3.
template <class T>
Triple<T> L_map(const Quad<T>& m) {
  if (!satisfies_torus_constraint(m))
    throw Error(ErrorKind::ConstraintViolated, "cocharacter violates m1+m4 = m2+m3");
  return {m[0] - m[2], m[0] - m[1], m[3]};
}

Rational pairing(const Weight& mu, const CocharTuple& c);
bool dominant(const Weight& mu);
bool strictly_dominant(const Weight& mu);

namespace roots {
inline Weight alpha() { return {1, -1, 0}; }
inline Weight beta() { return {0, 2, -1}; }
inline Weight sim() { return {0, 0, 1}; }
inline CocharTuple alpha_vee() { return {1, -1, 1, -1}; }
inline CocharTuple beta_vee() { return {0, 1, -1, 0}; }
// Half the sum of the positive roots.
inline Weight rho() { return {2, 1, Rational(-3, 2)}; }
std::vector<Weight> positive();
}  // namespace roots

Weight dot_action(const WeylElem& u, const Weight& lambda);

// unr(coeff * p^pexp) * z^alg on Q_p^x; coeff carries no factor of p.
class QpChar {
 public:
  QpChar() = default;
  QpChar(long p, const Rational& unit, const Rational& alg = Rational());
  static QpChar unr_power(long p, const Rational& pexp, const Rational& alg = Rational());

  long p() const { return p_; }
  const Rational& coeff() const { return coeff_; }
  const Rational& pexp() const { return pexp_; }
  const Rational& alg() const { return alg_; }
  // Value of the unramified part at p when pexp is integral.
  Rational unit_value() const;
  bool unit_is(const Rational& c, long e) const { return coeff_ == c && pexp_ == Rational(e); }

  friend QpChar operator+(const QpChar& x, const QpChar& y);  // product
  friend QpChar operator-(const QpChar& x, const QpChar& y);  // quotient
  friend bool operator==(const QpChar&, const QpChar&) = default;

  std::string to_string() const;

 private:
  long p_ = 0;
  Rational coeff_{1};
  Rational pexp_;
  Rational alg_;
};

using TChar = Triple<QpChar>;

std::string to_string(const TChar& t);

}  // namespace gsp4h
