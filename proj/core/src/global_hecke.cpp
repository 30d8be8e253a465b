#include "gsp4h/global_hecke.hpp"

#include <sstream>

namespace gsp4h {

std::string FrobeniusData::to_string() const {
  std::ostringstream os;
  os << "T^4";
  const char* powers[] = {"", "*T^3", "*T^2", "*T", ""};
  for (int k = 1; k <= 4; ++k) {
    if (coeffs[k].is_zero()) continue;
    os << (coeffs[k].sign() < 0 ? " - " : " + ") << coeffs[k].abs().to_string() << powers[k];
  }
  return os.str();
}

FrobeniusData hecke_charpoly(const HeckeData& d) {
  if (!is_prime(d.l)) throw Error(ErrorKind::InvalidData, "l must be prime");
  if (d.c0.is_zero()) throw Error(ErrorKind::InvalidData, "c0 must be invertible");
  const Rational l(d.l);
  const Rational l3 = l.pow(3);
  FrobeniusData f;
  f.coeffs = {Rational(1), -d.c1, (l3 + l) * d.c0 + l * d.c2, -l3 * d.c0 * d.c1, l.pow(6) * d.c0 * d.c0};
  f.sim = l3 * d.c0;
  return f;
}

HeckeData ideal_generators(const FrobeniusData& f, long l) {
  if (!is_prime(l)) throw Error(ErrorKind::InvalidData, "l must be prime");
  if (!f.coeffs[0].is_one()) throw Error(ErrorKind::InconsistentData, "characteristic polynomial is not monic");
  if (f.sim.is_zero()) throw Error(ErrorKind::InconsistentData, "similitude must be nonzero");
  if (f.coeffs[4] != f.sim * f.sim)
    throw Error(ErrorKind::InconsistentData, "constant term " + f.coeffs[4].to_string() + " != sim^2 = " +
                                                 (f.sim * f.sim).to_string());
  const Rational lq(l);
  const Rational trace = -f.coeffs[1];
  if (f.coeffs[3] != -f.sim * trace)
    throw Error(ErrorKind::InconsistentData, "linear term " + f.coeffs[3].to_string() + " != -sim*trace");
  HeckeData d;
  d.l = l;
  d.c0 = f.sim / lq.pow(3);
  d.c1 = trace;
  d.c2 = f.coeffs[2] / lq - (lq.inv() + lq.pow(-3)) * f.sim;
  return d;
}

bool ClassifyReport::bounds_pass() const {
  for (const auto& b : bounds)
    if (!b.pass) return false;
  return true;
}

bool ClassifyReport::gaps_pass() const {
  for (const auto& g : gaps)
    if (!g.pass) return false;
  return true;
}

namespace {

void check_structure(const Alphas& alphas, const HodgeWeights& h, long p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidData, "p must be prime");
  for (const auto& a : alphas)
    if (a.is_zero()) throw Error(ErrorKind::InvalidData, "eigenvalues must be nonzero");
  if (alphas[0] * alphas[3] != alphas[1] * alphas[2])
    throw Error(ErrorKind::InvalidData, "alpha1*alpha4 != alpha2*alpha3");
  if (h[0] + h[3] != h[1] + h[2]) throw Error(ErrorKind::InvalidData, "h1+h4 != h2+h3");
}

}  // namespace

ClassifyReport classicality_classify(const Alphas& alphas, const HodgeWeights& h, long p, const Rational& C) {
  check_structure(alphas, h, p);
  if (C.sign() <= 0) throw Error(ErrorKind::InvalidData, "C must be positive");
  ClassifyReport r;
  r.C = C;
  r.gap_bound = Rational(kGapSlope) * C + Rational(kGapOffset);
  std::array<long, 4> val{};
  for (int i = 0; i < 4; ++i) val[i] = padic_val(alphas[i], p);

  for (int i = 0; i < 4; ++i) {
    Rational x(h[i] + val[i]);
    Rational y(h[i] + val[0]);
    r.bounds.push_back({i + 1, x, -C <= x && x <= C});
    r.bounds_literal.push_back({i + 1, y, -C <= y && y <= C});
    if (r.bounds.back().pass != r.bounds_literal.back().pass) r.readings_differ = true;
  }
  for (int i = 0; i < 3; ++i) {
    long gap = h[i] - h[i + 1];
    r.gaps.push_back({i + 1, gap, Rational(gap) > r.gap_bound});
  }

  long total = 0;
  for (int i = 0; i < 4; ++i) total += h[i] + val[i];
  r.admissible = total == 0;

  if (r.admissible) {
    for (const auto& w : WeylElem::all()) {
      WeylElem wci = check_involution(w).inverse();
      long s = 0;
      bool ok = true;
      for (int i = 1; i <= 4 && ok; ++i) {
        s += h[wci(i) - 1] + val[i - 1];
        ok = i < 4 ? s >= 0 : s == 0;
      }
      if (ok) r.w_set.push_back(w);
    }
  }
  r.very_classical = r.w_set.size() == 1 && r.w_set[0] == WeylElem::id();
  return r;
}

std::vector<WeylElem> classify_wset_bruteforce(const Alphas& alphas, const HodgeWeights& h, long p) {
  check_structure(alphas, h, p);
  std::vector<WeylElem> out;
  for (const auto& w : WeylElem::all()) {
    WeylElem tau = check_involution(w) * WeylElem::s0();
    Flag<Rational> fl{FlagKind::complete, {}};
    std::vector<size_t> idx;
    for (int k = 1; k <= 3; ++k) {
      idx.push_back(static_cast<size_t>(tau(k) - 1));
      fl.members.push_back(Subspace<Rational>::coordinate(idx, 4));
    }
    bool ok = true;
    Rational tn;
    std::vector<size_t> prefix;
    for (size_t i = 0; i < 4 && ok; ++i) {
      prefix.push_back(i);
      tn += Rational(padic_val(alphas[i], p));
      Rational th = hodge_number(Subspace<Rational>::coordinate(prefix, 4), fl, h);
      ok = i < 3 ? tn >= th : tn == th;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

}  // namespace gsp4h
