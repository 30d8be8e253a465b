#include "gsp4h/phi_module.hpp"

#include <sstream>

namespace gsp4h {

template <class F>
ValidityReport validate(const PhiModuleData<F>& d) {
  ValidityReport r;
  const auto& al = d.alphas;
  const auto& h = d.weights;
  const long p = d.p;

  r.checks.push_back({"p_prime", is_prime(p), is_prime(p) ? "" : std::to_string(p) + " is not prime"});

  bool nonzero = true;
  std::string zw;
  for (int i = 0; i < 4; ++i)
    if (al[i].is_zero()) {
      nonzero = false;
      zw = "alpha" + std::to_string(i + 1) + " = 0";
      break;
    }
  r.checks.push_back({"alphas_nonzero", nonzero, zw});

  bool prod = al[0] * al[3] == al[1] * al[2];
  r.checks.push_back({"alpha_product", prod,
                      prod ? "" : "alpha1*alpha4 = " + (al[0] * al[3]).to_string() +
                                      ", alpha2*alpha3 = " + (al[1] * al[2]).to_string()});

  Check gen{"genericity", true, ""};
  if (nonzero) {
    const Rational pr(p);
    for (int i = 0; i < 4 && gen.pass; ++i)
      for (int j = 0; j < 4 && gen.pass; ++j) {
        if (i == j) continue;
        Rational q = al[i] / al[j];
        if (q.is_one() || q == pr || q == pr.inv()) {
          gen.pass = false;
          gen.witness = "(" + std::to_string(std::min(i, j) + 1) + "," + std::to_string(std::max(i, j) + 1) +
                        ") ratio alpha" + std::to_string(i + 1) + "/alpha" + std::to_string(j + 1) + " = " +
                        q.to_string();
        }
      }
  } else {
    gen.pass = false;
    gen.witness = "undefined for zero eigenvalue";
  }
  r.checks.push_back(gen);

  bool strict = h[0] > h[1] && h[1] > h[2] && h[2] > h[3];
  r.checks.push_back({"weights_strict", strict, strict ? "" : "need h1 > h2 > h3 > h4"});
  bool hsum = h[0] + h[3] == h[1] + h[2];
  r.checks.push_back({"weights_sum", hsum,
                      hsum ? "" : "h1+h4 = " + std::to_string(h[0] + h[3]) + ", h2+h3 = " + std::to_string(h[1] + h[2])});

  Check nd{"nondegeneracy", true, ""};
  for (const auto& [name, v] : nondegeneracy_factors(d.a, d.b))
    if (v.is_zero()) {
      nd.pass = false;
      nd.witness = "factor " + name + " vanishes";
      break;
    }
  r.checks.push_back(nd);
  return r;
}

template <class F>
Flag<F> hodge_flag(const F& a, const F& b) {
  auto v = standard_basis_vectors(a, b);
  Flag<F> fl{FlagKind::complete, {}};
  for (size_t k = 1; k <= 3; ++k)
    fl.members.push_back(Subspace<F>::span(std::vector<Vec<F>>(v.begin(), v.begin() + k), 4));
  return fl;
}

template <class F>
HodgeFlag<F> standard_filtration(const PhiModuleData<F>& d) {
  ValidityReport r = validate(d);
  if (const Check* c = r.first_failure())
    throw Error(ErrorKind::InvalidData, "invalid data: " + c->name + (c->witness.empty() ? "" : " (" + c->witness + ")"));
  HodgeFlag<F> hf;
  hf.flag = hodge_flag(d.a, d.b);
  hf.v = standard_basis_vectors(d.a, d.b);
  for (int i = 0; i < 4; ++i) hf.jumps[i] = -d.weights[i];
  return hf;
}

template <class F>
bool general_position(const Flag<F>& f) {
  for (unsigned mask = 1; mask < 15; ++mask) {
    std::vector<size_t> idx;
    for (size_t k = 0; k < 4; ++k)
      if (mask & (1u << k)) idx.push_back(k);
    Subspace<F> es = Subspace<F>::coordinate(idx, 4);
    for (const auto& m : f.members) {
      long want = std::max<long>(0, static_cast<long>(m.dim() + idx.size()) - 4);
      if (static_cast<long>(m.intersect(es).dim()) != want) return false;
    }
  }
  return true;
}

template <class F>
std::array<F, 6> f2_plucker(const F& a, const F& b) {
  auto v = standard_basis_vectors(a, b);
  std::array<F, 6> out;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) out[k++] = v[0][i] * v[1][j] - v[0][j] * v[1][i];
  return out;
}

template <class F>
Rational hodge_number(const Subspace<F>& v, const Flag<F>& f, const HodgeWeights& h) {
  if (f.members.size() != 3) throw Error(ErrorKind::InvalidData, "complete flag required");
  std::array<long, 5> dims{static_cast<long>(v.dim()), static_cast<long>(v.intersect(f.members[2]).dim()),
                           static_cast<long>(v.intersect(f.members[1]).dim()),
                           static_cast<long>(v.intersect(f.members[0]).dim()), 0};
  Rational t;
  for (int i = 0; i < 4; ++i) t += Rational(-h[i]) * Rational(dims[i] - dims[i + 1]);
  return t;
}

namespace {

std::vector<int> subset_indices(unsigned mask) {
  std::vector<int> s;
  for (int k = 0; k < 4; ++k)
    if (mask & (1u << k)) s.push_back(k + 1);
  return s;
}

}  // namespace

template <class F>
AdmissibilityReport weak_admissibility(long p, const Alphas& alphas, const HodgeWeights& h, const Flag<F>& f) {
  AdmissibilityReport r;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<size_t> idx;
    Rational tn;
    for (size_t k = 0; k < 4; ++k)
      if (mask & (1u << k)) {
        idx.push_back(k);
        tn += Rational(padic_val(alphas[k], p));
      }
    Rational th = hodge_number(Subspace<F>::coordinate(idx, 4), f, h);
    if (mask == 15) {
      r.newton_total = tn;
      r.hodge_total = th;
    }
    bool ok = mask == 15 ? tn == th : tn >= th;
    if (!ok && r.admissible) {
      r.admissible = false;
      r.witness = subset_indices(mask);
    }
  }
  return r;
}

template <class F>
AdmissibilityReport weak_admissibility(const PhiModuleData<F>& d) {
  for (const auto& a : d.alphas)
    if (a.is_zero()) throw Error(ErrorKind::InvalidData, "eigenvalues must be nonzero");
  if (!is_prime(d.p)) throw Error(ErrorKind::InvalidData, "p must be prime");
  return weak_admissibility(d.p, d.alphas, d.weights, hodge_flag(d.a, d.b));
}

AdmissibilityReport weak_admissibility_refinements(long p, const Alphas& alphas, const HodgeWeights& h) {
  AdmissibilityReport r;
  for (const auto& w : WeylElem::all()) {
    WeylElem wi = w.inverse();
    Rational tn, th;
    unsigned mask = 0;
    for (int i = 1; i <= 4; ++i) {
      int j = wi(i);
      mask |= 1u << (j - 1);
      tn += Rational(padic_val(alphas[j - 1], p));
      th -= Rational(h[i - 1]);
      bool ok = i == 4 ? tn == th : tn >= th;
      if (i == 4) {
        r.newton_total = tn;
        r.hodge_total = th;
      }
      if (!ok && r.admissible) {
        r.admissible = false;
        r.witness = subset_indices(mask);
      }
    }
  }
  return r;
}

Quad<QpChar> refinement_parameters(long p, const Alphas& alphas, const HodgeWeights& h, const WeylElem& w) {
  WeylElem wi = w.inverse();
  Quad<QpChar> out;
  for (int i = 1; i <= 4; ++i) out[i - 1] = QpChar(p, alphas[wi(i) - 1], Rational(h[i - 1]));
  return out;
}

#define GSP4H_INSTANTIATE(F)                                                                     \
  template ValidityReport validate<F>(const PhiModuleData<F>&);                                 \
  template Flag<F> hodge_flag<F>(const F&, const F&);                                           \
  template HodgeFlag<F> standard_filtration<F>(const PhiModuleData<F>&);                        \
  template bool general_position<F>(const Flag<F>&);                                            \
  template std::array<F, 6> f2_plucker<F>(const F&, const F&);                                  \
  template Rational hodge_number<F>(const Subspace<F>&, const Flag<F>&, const HodgeWeights&);   \
  template AdmissibilityReport weak_admissibility<F>(long, const Alphas&, const HodgeWeights&,  \
                                                     const Flag<F>&);                           \
  template AdmissibilityReport weak_admissibility<F>(const PhiModuleData<F>&);

GSP4H_INSTANTIATE(Rational)
GSP4H_INSTANTIATE(RatFunc)

#undef GSP4H_INSTANTIATE

}  // namespace gsp4h
