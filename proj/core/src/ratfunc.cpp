#include "gsp4h/ratfunc.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <string>

#include "gsp4h/errors.hpp"

namespace gsp4h {

int max_symbolic_degree() {
  static const int cap = [] {
    const char* env = std::getenv("GSP4H_MAX_DEGREE");
    if (env == nullptr || *env == '\0') return 64;
    int v = std::atoi(env);
    return v > 0 ? v : 64;
  }();
  return cap;
}

RatFunc::RatFunc(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  canonicalize();
}

void RatFunc::check_degree() const {
  int cap = max_symbolic_degree();
  if (num_.total_degree() > cap || den_.total_degree() > cap)
    throw Error(ErrorKind::DegreeLimit,
                "symbolic degree exceeds GSP4H_MAX_DEGREE=" + std::to_string(cap));
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly2(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    Poly2 g = Poly2::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.exact_div(g);
      den_ = *den_.exact_div(g);
    }
  }
  Rational l = den_.lc();
  if (!l.is_one()) {
    Rational inv = l.inv();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  check_degree();
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidData, "not a constant: " + to_string());
  return num_.is_zero() ? Rational() : num_.lc();
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
  // Henrici: only the gcd of the denominators can survive in the sum
  Poly2 g = Poly2::gcd(x.den_, y.den_);
  Poly2 xd = *x.den_.exact_div(g), yd = *y.den_.exact_div(g);
  Poly2 t = x.num_ * yd + y.num_ * xd;
  RatFunc r;
  if (t.is_zero()) return r;
  Poly2 g2 = g.is_constant() ? Poly2(Rational(1)) : Poly2::gcd(t, g);
  r.num_ = *t.exact_div(g2);
  r.den_ = xd * *y.den_.exact_div(g2);
  Rational l = r.den_.lc();
  if (!l.is_one()) {
    r.num_ = r.num_.scaled(l.inv());
    r.den_ = r.den_.scaled(l.inv());
  }
  r.check_degree();
  return r;
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  if (x.is_zero() || y.is_zero()) return RatFunc();
  // cross-cancel first to keep intermediate degrees small
  Poly2 g1 = Poly2::gcd(x.num_, y.den_);
  Poly2 g2 = Poly2::gcd(y.num_, x.den_);
  Poly2 n1 = *x.num_.exact_div(g1), d2 = *y.den_.exact_div(g1);
  Poly2 n2 = *y.num_.exact_div(g2), d1 = *x.den_.exact_div(g2);
  RatFunc r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  Rational l = r.den_.lc();
  if (!l.is_one()) {
    r.num_ = r.num_.scaled(l.inv());
    r.den_ = r.den_.scaled(l.inv());
  }
  r.check_degree();
  return r;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) { return x * y.inv(); }

Rational RatFunc::eval(const Rational& a, const Rational& b) const {
  Rational d = den_.eval(a, b);
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator vanishes at evaluation point");
  return num_.eval(a, b) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  auto wrap = [](const Poly2& p) {
    std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.to_string(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at position " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc r;
    bool neg = eat('-');
    if (!neg) eat('+');
    r = term();
    if (neg) r = -r;
    while (true) {
      if (eat('+')) r = r + term();
      else if (eat('-')) r = r - term();
      else return r;
    }
  }

  RatFunc term() {
    RatFunc r = unary();
    while (true) {
      if (eat('*')) r = r * unary();
      else if (eat('/')) r = r / unary();
      else return r;
    }
  }

  RatFunc unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      long e = integer();
      if (e > max_symbolic_degree()) fail("exponent exceeds degree cap");
      RatFunc r = RatFunc(Poly2(base.num()).pow(static_cast<unsigned>(e)),
                          Poly2(base.den()).pow(static_cast<unsigned>(e)));
      return neg ? r.inv() : r;
    }
    return base;
  }

  long integer() {
    skip();
    size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer");
    if (i_ - start > 9) fail("integer exponent too large");
    return std::stol(std::string(s_.substr(start, i_ - start)));
  }

  RatFunc atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      RatFunc r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == 'a') { ++i_; return RatFunc::var_a(); }
    if (c == 'b') { ++i_; return RatFunc::var_b(); }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return RatFunc(Rational(mpz_class(std::string(s_.substr(start, i_ - start)), 10)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  size_t i_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view s) { return Parser(s).parse(); }

}  // namespace gsp4h
