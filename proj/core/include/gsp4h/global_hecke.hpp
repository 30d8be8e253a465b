#pragma once

#include <array>
#include <string>
#include <vector>

#include "gsp4h/phi_module.hpp"

namespace gsp4h {

struct HeckeData {
  long l = 2;
  Rational c0{1}, c1, c2;
};

struct FrobeniusData {
  // Leading coefficient first: T^4 + c[1] T^3 + c[2] T^2 + c[3] T + c[4].
  std::array<Rational, 5> coeffs;
  Rational sim;
  std::string to_string() const;
};

FrobeniusData hecke_charpoly(const HeckeData& d);
// Throws InconsistentData unless constant = sim^2 and linear = -l^3 c0 c1.
HeckeData ideal_generators(const FrobeniusData& f, long l);

inline constexpr long kGapSlope = 20170901;
inline constexpr long kGapOffset = 20260630;

struct BoundCheck {
  int i = 0;
  Rational value;
  bool pass = true;
};

struct GapCheck {
  int i = 0;
  long gap = 0;
  bool pass = true;
};

struct ClassifyReport {
  Rational C;
  Rational gap_bound;
  std::vector<BoundCheck> bounds;          // h_i + val(alpha_i)
  std::vector<BoundCheck> bounds_literal;  // h_i + val(alpha_1)
  bool readings_differ = false;
  std::vector<GapCheck> gaps;
  bool admissible = true;                  // full-space equality
  std::vector<WeylElem> w_set;
  bool very_classical = false;
  bool bounds_pass() const;
  bool gaps_pass() const;
};

ClassifyReport classicality_classify(const Alphas& alphas, const HodgeWeights& h, long p, const Rational& C);

// Same w-set via weak admissibility of prefix subspaces against coordinate
// Hodge flags of relative position w^ s0.
std::vector<WeylElem> classify_wset_bruteforce(const Alphas& alphas, const HodgeWeights& h, long p);

}  // namespace gsp4h
