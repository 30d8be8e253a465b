#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsp4h/hodge_kernel.hpp"

namespace gsp4h {

// Hom(Q_p^x, E) has basis {val, log}. Characters Q_p^x -> t are stored as
// (val_1..val_4, log_1..log_4); characters T(Q_p) -> E as (val_1..val_3, log_1..log_3).
constexpr size_t kQpToTDim = 8;
constexpr size_t kTToEDim = 6;

enum class HomKind {
  full_t,
  sm_t,
  gprime_t,
  P_gprime_t,
  Q_gprime_t,
  full_T,
  sm_T,
  gprime_T,
  P_gprime_T,
  Q_gprime_T,
};

const char* to_string(HomKind k);
HomKind parse_hom_kind(const std::string& s);
bool is_torus_side(HomKind k);

Subspace<Rational> hom_space(HomKind kind);

// (psi1 - psi3, psi1 - psi2, psi4) on val and log parts.
Vec<Rational> ell_map(const Vec<Rational>& psi);
Vec<Rational> weyl_act_qp_to_t(const WeylElem& w, const Vec<Rational>& psi);
Vec<Rational> weyl_act_T_to_E(const WeylElem& w, const Vec<Rational>& chi);

struct Constituent {
  bool alg = false;
  std::vector<int> I;  // sorted, 1-based
  int i = 0;

  static Constituent pi_alg() { return {true, {}, 0}; }
  std::string to_string() const;
  friend bool operator==(const Constituent&, const Constituent&) = default;
};

// Throws InvalidIndexSet unless |I| = i and sum(I) != 5.
Constituent make_constituent(std::vector<int> I, int i);
std::vector<Constituent> constituents(int i);
std::vector<Constituent> all_constituents();
Constituent constituent_of(const WeylElem& w, int i);
bool isomorphic(const WeylElem& w, int i, const WeylElem& w2, int i2);
// Multiplicity of C(w,u) in PS: 1 for length(u) <= 1, unknown otherwise.
std::optional<int> ps_multiplicity(const WeylElem& u);

// S_{I_P} (I_P a valid pair) or S_{I_Q} (I_Q a singleton).
std::vector<Constituent> selection_set(char parabolic, const std::vector<int>& I);

enum class SocleKind { PS1, pi1, pimin };
SocleKind parse_socle_kind(const std::string& s);
const char* to_string(SocleKind k);

struct SocleDiagram {
  std::string name;
  std::vector<std::vector<Constituent>> layers;
};

SocleDiagram socle_diagram(SocleKind kind, const std::optional<WeylElem>& w = std::nullopt);
std::string to_dot(const SocleDiagram& d);
std::string to_text(const SocleDiagram& d);

struct LedgerEntry {
  std::string name;
  long dim = 0;
  long expected = 0;
  std::string source;
  bool pass() const { return dim == expected; }
};

struct SequenceCheck {
  std::string name;
  std::string identity;
  long lhs = 0, rhs = 0;
  bool pass() const { return lhs == rhs; }
};

struct LedgerReport {
  std::vector<LedgerEntry> entries;
  std::vector<SequenceCheck> sequences;
  bool ok() const;
  long dim(const std::string& name) const;
};

// Every dimension derived from the finite models at the sample point (a, b).
LedgerReport compute_ledger(const Rational& a = Rational(2), const Rational& b = Rational(3));
// As compute_ledger, throwing LedgerInconsistent on the first failure.
LedgerReport check_ledger(const Rational& a = Rational(2), const Rational& b = Rational(3));

}  // namespace gsp4h
