#include "gsp4h/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <string>

#include "gsp4h/errors.hpp"

namespace gsp4h {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_mpz(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return from_mpz(n, d);
}

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw Error(ErrorKind::InvalidData, "not a machine integer: " + to_string());
  return v_.get_num().get_si();
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_int(std::string_view s, std::string_view whole) {
  s = strip(s);
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  bool ok = !t.empty();
  for (size_t i = 0; i < t.size() && ok; ++i) {
    if (i == 0 && t[i] == '-') { ok = t.size() > 1; continue; }
    ok = std::isdigit(static_cast<unsigned char>(t[i])) != 0;
  }
  if (!ok) throw Error(ErrorKind::ParseError, "bad rational: '" + std::string(whole) + "'");
  return mpz_class(t, 10);
}

Rational parse_factor(std::string_view f, std::string_view whole) {
  f = strip(f);
  auto caret = f.find('^');
  if (caret != std::string_view::npos) {
    mpz_class base = parse_int(f.substr(0, caret), whole);
    mpz_class ex = parse_int(f.substr(caret + 1), whole);
    if (!ex.fits_slong_p()) throw Error(ErrorKind::ParseError, "exponent too large");
    Rational r(base);
    if (r.is_zero() && ex < 0) throw Error(ErrorKind::DivisionByZero, "0 to a negative power");
    return r.pow(ex.get_si());
  }
  auto slash = f.find('/');
  if (slash != std::string_view::npos) {
    return Rational::from_mpz(parse_int(f.substr(0, slash), whole),
                              parse_int(f.substr(slash + 1), whole));
  }
  return Rational(parse_int(f, whole));
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  std::string_view whole = s;
  s = strip(s);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  Rational acc(1);
  // factors separated by '*'; a trailing "/d" applies to the last factor
  size_t start = 0;
  while (true) {
    size_t star = s.find('*', start);
    acc *= parse_factor(s.substr(start, star == std::string_view::npos ? s.npos : star - start), whole);
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

long padic_val(const mpz_class& x, long p) {
  if (x == 0) throw Error(ErrorKind::ZeroArgument, "valuation of zero");
  if (p < 2) throw Error(ErrorKind::InvalidData, "p must be prime");
  mpz_class rest;
  mpz_class pz(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long padic_val(const Rational& x, long p) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroArgument, "valuation of zero");
  return padic_val(x.num(), p) - padic_val(x.den(), p);
}

bool is_prime(long n) {
  if (n < 2) return false;
  mpz_class z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace gsp4h
