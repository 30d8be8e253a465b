#include "gsp4h/poly.hpp"

#include <algorithm>
#include <sstream>

#include "gsp4h/errors.hpp"

namespace gsp4h {

void QPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QPoly operator+(const QPoly& x, const QPoly& y) {
  std::vector<Rational> c(std::max(x.c_.size(), y.c_.size()));
  for (size_t i = 0; i < x.c_.size(); ++i) c[i] += x.c_[i];
  for (size_t i = 0; i < y.c_.size(); ++i) c[i] += y.c_[i];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& x, const QPoly& y) { return x + (-y); }

QPoly operator*(const QPoly& x, const QPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Rational> c(x.c_.size() + y.c_.size() - 1);
  for (size_t i = 0; i < x.c_.size(); ++i)
    for (size_t j = 0; j < y.c_.size(); ++j) c[i + j] += x.c_[i] * y.c_[j];
  return QPoly(std::move(c));
}

QPoly QPoly::scaled(const Rational& r) const {
  if (r.is_zero()) return {};
  QPoly out = *this;
  for (auto& x : out.c_) x *= r;
  return out;
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(lc().inv());
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& x, const QPoly& d) {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (x.degree() < d.degree()) return {QPoly(), x};
  std::vector<Rational> r = x.c_;
  std::vector<Rational> q(x.degree() - d.degree() + 1);
  Rational inv = d.lc().inv();
  for (int k = x.degree() - d.degree(); k >= 0; --k) {
    Rational f = r[k + d.degree()] * inv;
    q[k] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= d.degree(); ++j) r[k + j] -= f * d.c_[j];
  }
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly QPoly::gcd(QPoly x, QPoly y) {
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly2::Poly2(const Rational& r) {
  if (!r.is_zero()) t_.emplace(Mono{0, 0}, r);
}

Poly2 Poly2::var_a() { return monomial({1, 0}, Rational(1)); }
Poly2 Poly2::var_b() { return monomial({0, 1}, Rational(1)); }

Poly2 Poly2::monomial(Mono m, const Rational& c) {
  Poly2 p;
  if (!c.is_zero()) p.t_.emplace(m, c);
  return p;
}

bool Poly2::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mono{0, 0});
}

int Poly2::total_degree() const {
  if (t_.empty()) return -1;
  return t_.rbegin()->first.first + t_.rbegin()->first.second;
}

int Poly2::degree_a() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.first);
  return d;
}

int Poly2::degree_b() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m.second);
  return d;
}

void Poly2::add_term(const Mono& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly2 operator*(const Poly2& x, const Poly2& y) {
  Poly2 r;
  for (const auto& [mx, cx] : x.t_)
    for (const auto& [my, cy] : y.t_)
      r.add_term({mx.first + my.first, mx.second + my.second}, cx * cy);
  return r;
}

Poly2 Poly2::scaled(const Rational& r) const {
  if (r.is_zero()) return {};
  Poly2 out = *this;
  for (auto& [m, c] : out.t_) c *= r;
  return out;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 r(Rational(1)), base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

std::optional<Poly2> Poly2::exact_div(const Poly2& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly2 r = *this, q;
  const Mono ld = d.lead_mono();
  const Rational inv = d.lc().inv();
  while (!r.is_zero()) {
    Mono lr = r.lead_mono();
    if (lr.first < ld.first || lr.second < ld.second) return std::nullopt;
    Poly2 t = monomial({lr.first - ld.first, lr.second - ld.second}, r.lc() * inv);
    q += t;
    r -= t * d;
  }
  return q;
}

Rational Poly2::eval(const Rational& a, const Rational& b) const {
  Rational s;
  for (const auto& [m, c] : t_) s += c * a.pow(m.first) * b.pow(m.second);
  return s;
}

std::vector<QPoly> Poly2::as_poly_in_a() const {
  int da = degree_a();
  std::vector<std::vector<Rational>> raw(da + 1);
  for (const auto& [m, c] : t_) {
    auto& v = raw[m.first];
    if (static_cast<int>(v.size()) <= m.second) v.resize(m.second + 1);
    v[m.second] += c;
  }
  std::vector<QPoly> out;
  out.reserve(raw.size());
  for (auto& v : raw) out.emplace_back(std::move(v));
  return out;
}

Poly2 Poly2::from_poly_in_a(const std::vector<QPoly>& c) {
  Poly2 p;
  for (size_t i = 0; i < c.size(); ++i)
    for (int j = 0; j <= c[i].degree(); ++j) p.add_term({static_cast<int>(i), j}, c[i].coeff(j));
  return p;
}

namespace {

using APoly = std::vector<QPoly>;  // polynomial in a over Q[b]

void trim(APoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly content(const APoly& p) {
  QPoly g;
  for (const auto& c : p) {
    g = QPoly::gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

APoly primitive(const APoly& p) {
  QPoly g = content(p);
  APoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(QPoly::divmod(c, g).first);
  return out;
}

// lc(d)^k * x mod d over Q[b][a].
APoly pseudo_rem(APoly x, const APoly& d) {
  const int dd = static_cast<int>(d.size()) - 1;
  const QPoly& l = d.back();
  while (static_cast<int>(x.size()) - 1 >= dd && !x.empty()) {
    int dx = static_cast<int>(x.size()) - 1;
    QPoly lx = x.back();
    for (auto& c : x) c = c * l;
    for (int j = 0; j <= dd; ++j) x[dx - dd + j] = x[dx - dd + j] - lx * d[j];
    trim(x);
  }
  return x;
}

}  // namespace

Poly2 Poly2::gcd(const Poly2& x, const Poly2& y) {
  if (x.is_zero() && y.is_zero()) return {};
  if (x.is_zero()) return y.scaled(y.lc().inv());
  if (y.is_zero()) return x.scaled(x.lc().inv());
  if (x.is_constant() || y.is_constant()) return Poly2(Rational(1));
  APoly A = x.as_poly_in_a(), B = y.as_poly_in_a();
  QPoly gc = QPoly::gcd(content(A), content(B));
  A = primitive(A);
  B = primitive(B);
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    APoly R = pseudo_rem(A, B);
    A = std::move(B);
    B = R.empty() ? R : primitive(R);
  }
  for (auto& c : A) c = c * gc;
  Poly2 g = from_poly_in_a(A);
  return g.scaled(g.lc().inv());
}

std::string Poly2::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m.first == 0 && m.second == 0;
    bool need_star = false;
    if (!mag.is_one() || constant) {
      os << mag.to_string();
      need_star = true;
    }
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (need_star) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      need_star = true;
    };
    var('a', m.first);
    var('b', m.second);
  }
  return os.str();
}

}  // namespace gsp4h
