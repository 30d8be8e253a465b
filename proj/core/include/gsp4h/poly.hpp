#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsp4h/rational.hpp"

namespace gsp4h {

// Dense univariate polynomial over Q, coefficients low degree first.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static QPoly constant(const Rational& r) { return QPoly({r}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lc() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i < 0 || i > degree() ? Rational() : c_[i]; }

  QPoly operator-() const;
  friend QPoly operator+(const QPoly& x, const QPoly& y);
  friend QPoly operator-(const QPoly& x, const QPoly& y);
  friend QPoly operator*(const QPoly& x, const QPoly& y);
  QPoly scaled(const Rational& r) const;
  QPoly monic() const;
  friend bool operator==(const QPoly&, const QPoly&) = default;

  // Euclidean division; divisor nonzero.
  static std::pair<QPoly, QPoly> divmod(const QPoly& x, const QPoly& d);
  // Monic gcd, zero if both are zero.
  static QPoly gcd(QPoly x, QPoly y);

 private:
  void trim();
  std::vector<Rational> c_;
};

// Exponents (deg_a, deg_b).
using Mono = std::pair<int, int>;

// Graded lexicographic order with a > b; ascending.
struct GrlexLess {
  bool operator()(const Mono& x, const Mono& y) const {
    int dx = x.first + x.second, dy = y.first + y.second;
    if (dx != dy) return dx < dy;
    return x.first < y.first;
  }
};

// Sparse polynomial in a, b over Q.
class Poly2 {
 public:
  using Terms = std::map<Mono, Rational, GrlexLess>;

  Poly2() = default;
  Poly2(const Rational& r);  // NOLINT(google-explicit-constructor)
  static Poly2 var_a();
  static Poly2 var_b();
  static Poly2 monomial(Mono m, const Rational& c);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  const Terms& terms() const { return t_; }
  Mono lead_mono() const { return t_.rbegin()->first; }
  const Rational& lc() const { return t_.rbegin()->second; }
  int total_degree() const;
  int degree_a() const;
  int degree_b() const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 x, const Poly2& y) { return x += y; }
  friend Poly2 operator-(Poly2 x, const Poly2& y) { return x -= y; }
  friend Poly2 operator*(const Poly2& x, const Poly2& y);
  Poly2 scaled(const Rational& r) const;
  Poly2 pow(unsigned e) const;
  friend bool operator==(const Poly2&, const Poly2&) = default;

  // Quotient when d divides *this exactly, nullopt otherwise.
  std::optional<Poly2> exact_div(const Poly2& d) const;
  // Gcd with leading coefficient 1 (grlex); zero if both are zero.
  static Poly2 gcd(const Poly2& x, const Poly2& y);

  Rational eval(const Rational& a, const Rational& b) const;

  // View as polynomial in a with coefficients in Q[b].
  std::vector<QPoly> as_poly_in_a() const;
  static Poly2 from_poly_in_a(const std::vector<QPoly>& c);

  std::string to_string() const;

 private:
  void add_term(const Mono& m, const Rational& c);
  Terms t_;
};

}  // namespace gsp4h
