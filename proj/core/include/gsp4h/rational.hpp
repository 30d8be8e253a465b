#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gsp4h {

// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  static Rational from_mpz(const mpz_class& num, const mpz_class& den);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.v_, y.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inv() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  // Integer power; negative exponents invert.
  Rational pow(long e) const;
  Rational floor() const;

  // "n" for integers, otherwise "n/d".
  std::string to_string() const;
  // Accepts "n", "n/d", "p^k", "c*p^k" and products of such factors.
  static Rational parse(std::string_view s);

  long to_long() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Exponent of the prime p in x.
long padic_val(const Rational& x, long p);
long padic_val(const mpz_class& x, long p);

bool is_prime(long n);

}  // namespace gsp4h
