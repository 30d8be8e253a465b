#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "gsp4h/poly.hpp"

namespace gsp4h {

// Element of Q(a,b): num/den with gcd 1 and den monic in grlex order.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& r) : num_(r), den_(Rational(1)) {}  // NOLINT
  RatFunc(long v) : RatFunc(Rational(v)) {}                     // NOLINT
  RatFunc(const Poly2& p) : num_(p), den_(Rational(1)) { check_degree(); }  // NOLINT
  RatFunc(Poly2 num, Poly2 den);

  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return RatFunc(1); }
  static RatFunc var_a() { return RatFunc(Poly2::var_a()); }
  static RatFunc var_b() { return RatFunc(Poly2::var_b()); }

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  // Value of a constant function.
  Rational constant_value() const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  RatFunc inv() const;
  // Substitute rational values; throws DivisionByZero if the denominator vanishes.
  Rational eval(const Rational& a, const Rational& b) const;

  std::string to_string() const;
  // Arithmetic expression in a, b, integers, + - * / ^ and parentheses.
  static RatFunc parse(std::string_view s);

 private:
  void canonicalize();
  void check_degree() const;
  Poly2 num_;
  Poly2 den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& r);

// Symbolic degree cap, read from GSP4H_MAX_DEGREE (default 64).
int max_symbolic_degree();

}  // namespace gsp4h
