#include "gsp4h/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

namespace gsp4h {

WeylElem::WeylElem(std::array<int, 4> p) : p_(p) {
  std::array<int, 4> s = p;
  std::sort(s.begin(), s.end());
  if (s != std::array<int, 4>{1, 2, 3, 4})
    throw Error(ErrorKind::InvalidData, "not a permutation of {1,2,3,4}");
}

WeylElem operator*(const WeylElem& x, const WeylElem& y) {
  std::array<int, 4> r{};
  for (int k = 1; k <= 4; ++k) r[k - 1] = x(y(k));
  return WeylElem(r);
}

WeylElem WeylElem::inverse() const {
  std::array<int, 4> r{};
  for (int k = 1; k <= 4; ++k) r[p_[k - 1] - 1] = k;
  return WeylElem(r);
}

std::vector<WeylElem> WeylElem::all_s4() {
  std::vector<WeylElem> out;
  std::array<int, 4> p{1, 2, 3, 4};
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

const std::vector<WeylElem>& WeylElem::all() {
  static const std::vector<WeylElem> w = [] {
    std::vector<WeylElem> out;
    for (const auto& x : all_s4())
      if (x.in_W()) out.push_back(x);
    return out;
  }();
  return w;
}

size_t WeylElem::index() const {
  const auto& w = all();
  auto it = std::find(w.begin(), w.end(), *this);
  if (it == w.end()) throw Error(ErrorKind::InvalidData, "element is not in W: " + one_line_string());
  return static_cast<size_t>(it - w.begin());
}

namespace {

// Shortest words, breadth first, generators tried in the order s1, s2.
const std::map<WeylElem, std::string>& word_table() {
  static const std::map<WeylElem, std::string> table = [] {
    std::map<WeylElem, std::string> t;
    std::deque<WeylElem> q{WeylElem::id()};
    t[WeylElem::id()] = "";
    while (!q.empty()) {
      WeylElem x = q.front();
      q.pop_front();
      for (int g = 1; g <= 2; ++g) {
        WeylElem y = x * (g == 1 ? WeylElem::s1() : WeylElem::s2());
        if (!t.count(y)) {
          t[y] = t[x] + (g == 1 ? "s1" : "s2");
          q.push_back(y);
        }
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

int WeylElem::length() const {
  const auto& t = word_table();
  auto it = t.find(*this);
  if (it == t.end()) throw Error(ErrorKind::InvalidData, "element is not in W: " + one_line_string());
  return static_cast<int>(it->second.size() / 2);
}

std::string WeylElem::word() const {
  const auto& t = word_table();
  auto it = t.find(*this);
  if (it == t.end()) throw Error(ErrorKind::InvalidData, "element is not in W: " + one_line_string());
  return it->second.empty() ? "e" : it->second;
}

std::string WeylElem::one_line_string() const {
  std::ostringstream os;
  os << "[" << p_[0] << "," << p_[1] << "," << p_[2] << "," << p_[3] << "]";
  return os.str();
}

WeylElem WeylElem::parse(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') t.push_back(c);
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty Weyl element");
  if (t == "e" || t == "id" || t == "1") return id();
  if (t.front() == '[') {
    if (t.back() != ']') throw Error(ErrorKind::ParseError, "bad one-line notation: " + std::string(s));
    std::array<int, 4> p{};
    size_t k = 0;
    for (size_t i = 1; i + 1 < t.size(); ++i) {
      if (t[i] == ',') continue;
      if (!std::isdigit(static_cast<unsigned char>(t[i])) || k >= 4)
        throw Error(ErrorKind::ParseError, "bad one-line notation: " + std::string(s));
      p[k++] = t[i] - '0';
    }
    if (k != 4) throw Error(ErrorKind::ParseError, "bad one-line notation: " + std::string(s));
    return WeylElem(p);
  }
  WeylElem w;
  for (size_t i = 0; i < t.size(); i += 2) {
    if (t[i] != 's' || i + 1 >= t.size()) throw Error(ErrorKind::ParseError, "bad Weyl word: " + std::string(s));
    switch (t[i + 1]) {
      case '0': w = w * s0(); break;
      case '1': w = w * s1(); break;
      case '2': w = w * s2(); break;
      default: throw Error(ErrorKind::ParseError, "bad Weyl word: " + std::string(s));
    }
  }
  return w;
}

WeylElem check_involution(const WeylElem& w) {
  WeylElem r;
  std::string word = w.word();
  if (word == "e") return r;
  for (size_t i = 0; i < word.size(); i += 2) r = r * (word[i + 1] == '1' ? WeylElem::s2() : WeylElem::s1());
  return r;
}

Mat4<Rational> weyl_matrix(const WeylElem& w) {
  auto from_rows = [](std::vector<Vec<Rational>> rows) { return Mat4<Rational>::from_rows(rows, 4); };
  const Mat4<Rational> m1 = from_rows({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
  const Mat4<Rational> m2 = from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}});
  Mat4<Rational> r = Mat4<Rational>::identity(4);
  std::string word = w.word();
  if (word == "e") return r;
  for (size_t i = 0; i < word.size(); i += 2) r = r * (word[i + 1] == '1' ? m1 : m2);
  return r;
}

Rational pairing(const Weight& mu, const CocharTuple& c) {
  Quad<Rational> e{mu[0] + mu[2], mu[1], Rational(), mu[2]};
  Rational s;
  for (int i = 0; i < 4; ++i) s += e[i] * c[i];
  return s;
}

bool dominant(const Weight& mu) { return mu[0] >= mu[1] && mu[1] >= Rational(0); }
bool strictly_dominant(const Weight& mu) { return mu[0] > mu[1] && mu[1] > Rational(0); }

std::vector<Weight> roots::positive() {
  Weight a = alpha(), b = beta();
  Weight ab{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  Weight a2b{ab[0] + a[0], ab[1] + a[1], ab[2] + a[2]};
  return {a, b, ab, a2b};
}

Weight dot_action(const WeylElem& u, const Weight& lambda) {
  const Weight r = roots::rho();
  Weight shifted{lambda[0] + r[0], lambda[1] + r[1], lambda[2] + r[2]};
  Weight m = weyl_act(u, shifted);
  return {m[0] - r[0], m[1] - r[1], m[2] - r[2]};
}

QpChar::QpChar(long p, const Rational& unit, const Rational& alg) : p_(p), alg_(alg) {
  if (unit.is_zero()) throw Error(ErrorKind::InvalidData, "unramified character needs a nonzero unit");
  if (!is_prime(p)) throw Error(ErrorKind::InvalidData, "p must be prime");
  long v = padic_val(unit, p);
  coeff_ = unit * Rational(p).pow(-v);
  pexp_ = Rational(v);
}

QpChar QpChar::unr_power(long p, const Rational& pexp, const Rational& alg) {
  QpChar c(p, Rational(1), alg);
  c.pexp_ = pexp;
  return c;
}

Rational QpChar::unit_value() const {
  if (!pexp_.is_integer()) throw Error(ErrorKind::InvalidData, "unit has a fractional power of p");
  return coeff_ * Rational(p_).pow(pexp_.to_long());
}

namespace {
long common_p(const QpChar& x, const QpChar& y) {
  if (x.p() != y.p() && x.p() != 0 && y.p() != 0)
    throw Error(ErrorKind::InvalidData, "characters for different primes");
  return x.p() != 0 ? x.p() : y.p();
}
}  // namespace

QpChar operator+(const QpChar& x, const QpChar& y) {
  QpChar r;
  r.p_ = common_p(x, y);
  r.coeff_ = x.coeff_ * y.coeff_;
  r.pexp_ = x.pexp_ + y.pexp_;
  r.alg_ = x.alg_ + y.alg_;
  return r;
}

QpChar operator-(const QpChar& x, const QpChar& y) {
  QpChar r;
  r.p_ = common_p(x, y);
  r.coeff_ = x.coeff_ / y.coeff_;
  r.pexp_ = x.pexp_ - y.pexp_;
  r.alg_ = x.alg_ - y.alg_;
  return r;
}

std::string QpChar::to_string() const {
  std::ostringstream os;
  os << "unr(";
  if (pexp_.is_zero()) {
    os << coeff_.to_string();
  } else {
    if (!coeff_.is_one()) os << coeff_.to_string() << "*";
    os << p_ << "^" << (pexp_.is_integer() ? pexp_.to_string() : "(" + pexp_.to_string() + ")");
  }
  os << ")";
  if (!alg_.is_zero()) os << "*z^" << (alg_.is_integer() ? alg_.to_string() : "(" + alg_.to_string() + ")");
  return os.str();
}

std::string to_string(const TChar& t) {
  return t[0].to_string() + "(p1) " + t[1].to_string() + "(p2) " + t[2].to_string() + "(p3)";
}

}  // namespace gsp4h
