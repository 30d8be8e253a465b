#pragma once

#include <string>
#include <vector>

#include "gsp4h/characters.hpp"
#include "gsp4h/symplectic.hpp"

namespace gsp4h {

template <class F>
struct PhiModuleData {
  long p = 2;
  Alphas alphas{Rational(1), Rational(1), Rational(1), Rational(1)};
  HodgeWeights weights{0, 0, 0, 0};
  F a{};
  F b{};
};

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct ValidityReport {
  std::vector<Check> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

// The Hodge flag F^1 < F^2 < F^3 spanned by prefixes of (v1, v2, v3), and the
// jump indices -h1 < -h2 < -h3 < -h4.
template <class F>
struct HodgeFlag {
  Flag<F> flag;
  std::array<Vec<F>, 4> v;
  std::array<long, 4> jumps{};
};

// v1 = a e1 - e2 + e3 - e4, v2 = b e1 + (b+1) e2 - e3, v3 = e1 + e2, v4 = e1
template <class F>
std::array<Vec<F>, 4> standard_basis_vectors(const F& a, const F& b) {
  return {Vec<F>{a, F(-1), F(1), F(-1)}, Vec<F>{b, b + F(1), F(-1), F(0)},
          Vec<F>{F(1), F(1), F(0), F(0)}, Vec<F>{F(1), F(0), F(0), F(0)}};
}

// Factors a, b, b+1, a+b, ab+a+b with labels.
template <class F>
std::vector<std::pair<std::string, F>> nondegeneracy_factors(const F& a, const F& b) {
  return {{"a", a}, {"b", b}, {"b+1", b + F(1)}, {"a+b", a + b}, {"ab+a+b", a * b + a + b}};
}

template <class F>
bool nondegenerate(const F& a, const F& b) {
  for (const auto& [name, v] : nondegeneracy_factors(a, b))
    if (v.is_zero()) return false;
  return true;
}

template <class F>
ValidityReport validate(const PhiModuleData<F>& d);

template <class F>
HodgeFlag<F> standard_filtration(const PhiModuleData<F>& d);

// Flag from (a, b) alone with jumps left at zero.
template <class F>
Flag<F> hodge_flag(const F& a, const F& b);

template <class F>
bool general_position(const Flag<F>& f);

// Plucker coordinates of F^2 in pair order (12,13,14,23,24,34) for the basis (v1, v2).
template <class F>
std::array<F, 6> f2_plucker(const F& a, const F& b);

// Filtration jumps: Fil^{-h1} = E^4, Fil^{-h2} = F^3, Fil^{-h3} = F^2, Fil^{-h4} = F^1.
// t_H of a subspace from actual intersection dimensions.
template <class F>
Rational hodge_number(const Subspace<F>& v, const Flag<F>& f, const HodgeWeights& h);

struct AdmissibilityReport {
  bool admissible = true;
  Rational newton_total, hodge_total;
  // First failing subset (1-based indices), empty when admissible.
  std::vector<int> witness;
};

// Brute force over all nonempty subsets S of the eigenbasis.
template <class F>
AdmissibilityReport weak_admissibility(const PhiModuleData<F>& d);
template <class F>
AdmissibilityReport weak_admissibility(long p, const Alphas& alphas, const HodgeWeights& h, const Flag<F>& f);

// Shortcut for flags in general position: t_H depends only on |S| and only the
// prefix sets of refinements w in W are tested.
AdmissibilityReport weak_admissibility_refinements(long p, const Alphas& alphas, const HodgeWeights& h);

// (unr(alpha_{w^-1(i)}) z^{h_i})_{i=1..4}
Quad<QpChar> refinement_parameters(long p, const Alphas& alphas, const HodgeWeights& h, const WeylElem& w);

}  // namespace gsp4h
