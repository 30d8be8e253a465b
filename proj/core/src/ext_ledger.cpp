#include "gsp4h/ext_ledger.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gsp4h {

const char* to_string(HomKind k) {
  switch (k) {
    case HomKind::full_t: return "full_t";
    case HomKind::sm_t: return "sm_t";
    case HomKind::gprime_t: return "gprime_t";
    case HomKind::P_gprime_t: return "P_gprime_t";
    case HomKind::Q_gprime_t: return "Q_gprime_t";
    case HomKind::full_T: return "full_T";
    case HomKind::sm_T: return "sm_T";
    case HomKind::gprime_T: return "gprime_T";
    case HomKind::P_gprime_T: return "P_gprime_T";
    case HomKind::Q_gprime_T: return "Q_gprime_T";
  }
  return "?";
}

HomKind parse_hom_kind(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(HomKind::Q_gprime_T); ++k)
    if (s == to_string(static_cast<HomKind>(k))) return static_cast<HomKind>(k);
  throw Error(ErrorKind::ParseError, "unknown Hom-space kind: " + s);
}

bool is_torus_side(HomKind k) { return k >= HomKind::full_T; }

namespace {

using Q4 = Quad<Rational>;

Vec<Rational> qp_to_t(const Q4& val, const Q4& log) {
  return {val[0], val[1], val[2], val[3], log[0], log[1], log[2], log[3]};
}

std::vector<Q4> torus_basis() { return {{1, 0, 0, -1}, {0, 1, -1, 0}, {1, 1, 1, 1}}; }

std::vector<Vec<Rational>> smooth_t() {
  std::vector<Vec<Rational>> out;
  for (const auto& t : torus_basis()) out.push_back(qp_to_t(t, {}));
  return out;
}

std::vector<Vec<Rational>> log_t(const std::vector<Q4>& span) {
  std::vector<Vec<Rational>> out;
  for (const auto& t : span) out.push_back(qp_to_t({}, t));
  return out;
}

Vec<Rational> unit6(size_t i) {
  Vec<Rational> v(kTToEDim);
  v[i] = Rational(1);
  return v;
}

// log parts of T-characters killing the given coroot
std::vector<Vec<Rational>> log_T_killing(const CocharTuple& c) {
  Matrix<Rational> m(1, 3);
  for (size_t j = 0; j < 3; ++j) {
    Weight e{};
    e[j] = Rational(1);
    m(0, j) = pairing(e, c);
  }
  std::vector<Vec<Rational>> out;
  for (const auto& n : nullspace(m)) out.push_back({0, 0, 0, n[0], n[1], n[2]});
  return out;
}

std::vector<Vec<Rational>> concat(std::vector<Vec<Rational>> x, const std::vector<Vec<Rational>>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

}  // namespace

Subspace<Rational> hom_space(HomKind kind) {
  const std::vector<Vec<Rational>> sm_T{unit6(0), unit6(1), unit6(2)};
  switch (kind) {
    case HomKind::full_t: {
      auto tb = torus_basis();
      return Subspace<Rational>::span(concat(smooth_t(), log_t(tb)), kQpToTDim);
    }
    case HomKind::sm_t: return Subspace<Rational>::span(smooth_t(), kQpToTDim);
    case HomKind::gprime_t: return Subspace<Rational>::span(concat(smooth_t(), log_t({{1, 1, 1, 1}})), kQpToTDim);
    case HomKind::P_gprime_t:
      return Subspace<Rational>::span(concat(smooth_t(), log_t({{1, 1, 0, 0}, {0, 0, 1, 1}})), kQpToTDim);
    case HomKind::Q_gprime_t:
      return Subspace<Rational>::span(concat(smooth_t(), log_t({{1, 0, 0, -1}, {0, 1, 1, 2}})), kQpToTDim);
    case HomKind::full_T: return Subspace<Rational>::whole(kTToEDim);
    case HomKind::sm_T: return Subspace<Rational>::span(sm_T, kTToEDim);
    case HomKind::gprime_T: return Subspace<Rational>::span(concat(sm_T, {{0, 0, 0, 0, 0, 1}}), kTToEDim);
    // characters of the Levi factor: trivial on its simple coroot
    case HomKind::P_gprime_T: return Subspace<Rational>::span(concat(sm_T, log_T_killing(roots::alpha_vee())), kTToEDim);
    case HomKind::Q_gprime_T: return Subspace<Rational>::span(concat(sm_T, log_T_killing(roots::beta_vee())), kTToEDim);
  }
  throw Error(ErrorKind::InvalidData, "unknown Hom-space kind");
}

Vec<Rational> ell_map(const Vec<Rational>& psi) {
  if (psi.size() != kQpToTDim) throw Error(ErrorKind::InvalidData, "expected 8 coordinates");
  Q4 val{psi[0], psi[1], psi[2], psi[3]}, log{psi[4], psi[5], psi[6], psi[7]};
  Triple<Rational> lv = L_map(val), ll = L_map(log);
  return {lv[0], lv[1], lv[2], ll[0], ll[1], ll[2]};
}

Vec<Rational> weyl_act_qp_to_t(const WeylElem& w, const Vec<Rational>& psi) {
  Q4 val = weyl_act(w, Q4{psi.at(0), psi.at(1), psi.at(2), psi.at(3)});
  Q4 log = weyl_act(w, Q4{psi.at(4), psi.at(5), psi.at(6), psi.at(7)});
  return qp_to_t(val, log);
}

Vec<Rational> weyl_act_T_to_E(const WeylElem& w, const Vec<Rational>& chi) {
  Weight val = weyl_act(w, Weight{chi.at(0), chi.at(1), chi.at(2)});
  Weight log = weyl_act(w, Weight{chi.at(3), chi.at(4), chi.at(5)});
  return {val[0], val[1], val[2], log[0], log[1], log[2]};
}

std::string Constituent::to_string() const {
  if (alg) return "pi_alg";
  std::ostringstream os;
  os << "C({";
  for (size_t k = 0; k < I.size(); ++k) os << (k ? "," : "") << I[k];
  os << "},s" << i << ")";
  return os.str();
}

Constituent make_constituent(std::vector<int> I, int i) {
  std::sort(I.begin(), I.end());
  bool distinct = std::adjacent_find(I.begin(), I.end()) == I.end();
  bool range = std::all_of(I.begin(), I.end(), [](int x) { return x >= 1 && x <= 4; });
  int sum = std::accumulate(I.begin(), I.end(), 0);
  if ((i != 1 && i != 2) || static_cast<int>(I.size()) != i || !distinct || !range || sum == 5)
    throw Error(ErrorKind::InvalidIndexSet, "no constituent with index set of size " + std::to_string(I.size()) +
                                                " and i = " + std::to_string(i));
  return {false, I, i};
}

std::vector<Constituent> constituents(int i) {
  std::vector<Constituent> out;
  if (i == 1) {
    for (int k = 1; k <= 4; ++k) out.push_back(make_constituent({k}, 1));
  } else if (i == 2) {
    for (int x = 1; x <= 4; ++x)
      for (int y = x + 1; y <= 4; ++y)
        if (x + y != 5) out.push_back(make_constituent({x, y}, 2));
  } else {
    throw Error(ErrorKind::InvalidIndexSet, "i must be 1 or 2");
  }
  return out;
}

std::vector<Constituent> all_constituents() {
  auto out = constituents(1);
  auto two = constituents(2);
  out.insert(out.end(), two.begin(), two.end());
  return out;
}

Constituent constituent_of(const WeylElem& w, int i) {
  if (i != 1 && i != 2) throw Error(ErrorKind::InvalidIndexSet, "i must be 1 or 2");
  WeylElem wi = w.inverse();
  std::vector<int> I;
  for (int k = 1; k <= i; ++k) I.push_back(wi(k));
  return make_constituent(I, i);
}

bool isomorphic(const WeylElem& w, int i, const WeylElem& w2, int i2) {
  return i == i2 && constituent_of(w, i) == constituent_of(w2, i2);
}

std::optional<int> ps_multiplicity(const WeylElem& u) {
  if (u.length() <= 1) return 1;
  return std::nullopt;
}

std::vector<Constituent> selection_set(char parabolic, const std::vector<int>& I) {
  std::vector<Constituent> out;
  if (parabolic == 'P') {
    Constituent ip = make_constituent(I, 2);
    for (const auto& c : constituents(1))
      if (std::includes(ip.I.begin(), ip.I.end(), c.I.begin(), c.I.end())) out.push_back(c);
    out.push_back(ip);
  } else if (parabolic == 'Q') {
    Constituent iq = make_constituent(I, 1);
    out.push_back(iq);
    for (const auto& c : constituents(2))
      if (std::includes(c.I.begin(), c.I.end(), iq.I.begin(), iq.I.end())) out.push_back(c);
  } else {
    throw Error(ErrorKind::InvalidData, "parabolic must be P or Q");
  }
  return out;
}

SocleKind parse_socle_kind(const std::string& s) {
  if (s == "PS1" || s == "ps1") return SocleKind::PS1;
  if (s == "pi1") return SocleKind::pi1;
  if (s == "pimin") return SocleKind::pimin;
  throw Error(ErrorKind::ParseError, "unknown socle diagram: " + s);
}

const char* to_string(SocleKind k) {
  switch (k) {
    case SocleKind::PS1: return "PS1";
    case SocleKind::pi1: return "pi1";
    case SocleKind::pimin: return "pimin";
  }
  return "?";
}

SocleDiagram socle_diagram(SocleKind kind, const std::optional<WeylElem>& w) {
  SocleDiagram d;
  d.name = to_string(kind);
  d.layers.push_back({Constituent::pi_alg()});
  switch (kind) {
    case SocleKind::PS1:
      if (!w) throw Error(ErrorKind::InvalidData, "PS1 needs a Weyl element");
      d.name += "(" + w->word() + ")";
      d.layers.push_back({constituent_of(*w, 1), constituent_of(*w, 2)});
      break;
    case SocleKind::pi1: d.layers.push_back(all_constituents()); break;
    case SocleKind::pimin:
      d.layers.push_back(all_constituents());
      d.layers.push_back({Constituent::pi_alg(), Constituent::pi_alg()});
      break;
  }
  return d;
}

std::string to_dot(const SocleDiagram& d) {
  std::ostringstream os;
  os << "digraph \"" << d.name << "\" {\n  rankdir=BT;\n";
  auto id = [](size_t l, size_t k) { return "n" + std::to_string(l) + "_" + std::to_string(k); };
  for (size_t l = 0; l < d.layers.size(); ++l) {
    os << "  { rank=same;";
    for (size_t k = 0; k < d.layers[l].size(); ++k) os << " " << id(l, k) << ";";
    os << " }\n";
    for (size_t k = 0; k < d.layers[l].size(); ++k)
      os << "  " << id(l, k) << " [label=\"" << d.layers[l][k].to_string() << "\"];\n";
  }
  for (size_t l = 0; l + 1 < d.layers.size(); ++l)
    for (size_t k = 0; k < d.layers[l].size(); ++k)
      for (size_t m = 0; m < d.layers[l + 1].size(); ++m) os << "  " << id(l, k) << " -> " << id(l + 1, m) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_text(const SocleDiagram& d) {
  std::ostringstream os;
  os << d.name << "\n";
  for (size_t l = 0; l < d.layers.size(); ++l) {
    os << "  layer " << l << ":";
    for (const auto& c : d.layers[l]) os << " " << c.to_string();
    os << "\n";
  }
  return os.str();
}

bool LedgerReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass(); }) &&
         std::all_of(sequences.begin(), sequences.end(), [](const auto& s) { return s.pass(); });
}

long LedgerReport::dim(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e.dim;
  throw Error(ErrorKind::InvalidData, "no ledger entry " + name);
}

namespace {

// Subalgebra of gsp4 preserving every member of the flag.
long stabilizer_dim(const Flag<Rational>& fl) {
  const auto basis = gsp4_basis<Rational>();
  std::vector<Vec<Rational>> rows;
  for (const auto& m : fl.members) {
    auto ann = m.annihilator().vectors();
    for (const auto& v : m.vectors())
      for (const auto& n : ann) {
        Vec<Rational> row(kGspDim);
        for (size_t k = 0; k < kGspDim; ++k) {
          Vec<Rational> bv = basis[k].apply(v);
          for (size_t i = 0; i < 4; ++i) row[k] += n[i] * bv[i];
        }
        rows.push_back(std::move(row));
      }
  }
  return static_cast<long>(kGspDim - rank(Matrix<Rational>::from_rows(rows, kGspDim)));
}

long block_rank(const Matrix<Rational>& j, const std::vector<WeylElem>& ws) {
  Matrix<Rational> sub(j.rows(), kTorusDim * ws.size());
  for (size_t k = 0; k < ws.size(); ++k)
    for (size_t c = 0; c < kTorusDim; ++c)
      for (size_t r = 0; r < j.rows(); ++r) sub(r, kTorusDim * k + c) = j(r, kTorusDim * ws[k].index() + c);
  return static_cast<long>(rank(sub));
}

long hdim(HomKind k) { return static_cast<long>(hom_space(k).dim()); }

}  // namespace

LedgerReport compute_ledger(const Rational& a, const Rational& b) {
  LedgerReport r;
  // Euler characteristic: dim H^1 = rank + dim H^0 + dim H^2, with H^0 the
  // scalars and H^2 = 0 for generic non-critical data.
  const long h0 = 1;
  const long gsp = static_cast<long>(kGspDim);
  const long borel = static_cast<long>(borel_of_hodge_flag(a, b).dim());
  const long siegel = stabilizer_dim(standard_flag<Rational>(FlagKind::siegel));
  const long klingen = stabilizer_dim(standard_flag<Rational>(FlagKind::klingen));

  Matrix<Rational> j = jbar(a, b);
  const long rank_j = static_cast<long>(rank(j));
  const long kernel = static_cast<long>(kBlockDim) - rank_j;
  const long glue = static_cast<long>(glue_subspace<Rational>().dim());
  const WeylElem w = WeylElem::id();
  const long rank_w = block_rank(j, {w});
  const long rank_P = block_rank(j, {w, WeylElem::s1() * w});
  const long rank_Q = block_rank(j, {w, WeylElem::s2() * w});

  const long ext = gsp + h0;
  const long ext_w = borel + h0;
  const long ext_F = siegel + h0;
  const long ext_0 = ext_w - hdim(HomKind::full_t);
  const long ext_g = ext_0 + hdim(HomKind::sm_t);
  const long ext_gp = ext_0 + hdim(HomKind::gprime_t);

  const long ext_alg = hdim(HomKind::gprime_T);
  const long lalg = hdim(HomKind::sm_T);
  const long ps1 = ext_alg + static_cast<long>(socle_diagram(SocleKind::PS1, w).layers[1].size());
  const long pi1 = ext_alg + static_cast<long>(socle_diagram(SocleKind::pi1).layers[1].size());
  const long piP = ext_alg + static_cast<long>(selection_set('P', {1, 2}).size());
  const long piQ = ext_alg + static_cast<long>(selection_set('Q', {1}).size());
  const long ixg = hdim(HomKind::P_gprime_T);
  const long ixg_Q = hdim(HomKind::Q_gprime_T);
  const long l_inv = kernel - glue;
  const long ext_U = ext - ext_g;
  const long ext_Uw = ext_w - ext_g;
  const long u_gp_ker = ext_Uw - l_inv;
  const long u_ker = u_gp_ker + static_cast<long>(all_constituents().size());

  r.entries = {
      {"Ext^G", ext, 12, "deformations-with-gsp4-structure"},
      {"Ext^G_w", ext_w, 8, "trianguline-deformations"},
      {"Ext^G_F", ext_F, 9, "parabolic-filtration-deformations"},
      {"Ext^G_0", ext_0, 2, "kernel-of-kappa"},
      {"Ext^G_g", ext_g, 5, "de-rham-deformations"},
      {"Ext^G_g'", ext_gp, 6, "twisted-de-rham-deformations"},
      {"Ext1(pi_alg,pi_alg)", ext_alg, 4, "locally-algebraic-self-extensions"},
      {"Ext1_lalg(pi_alg,pi_alg)", lalg, 3, "locally-algebraic-self-extensions"},
      {"Ext1(pi_alg,PS1)", ps1, 6, "extensions-by-principal-series"},
      {"Ext1(pi_alg,pi1)", pi1, 12, "extensions-by-amalgam"},
      {"Ext1(pi_alg,pi_IX)", piP, 7, "parabolic-amalgam-extensions"},
      {"Ext1_{IX,g'}(pi_alg,pi1)", ixg, 5, "parabolic-twisted-extensions"},
      {"L(D)", l_inv, 2, "l-invariant-plane"},
      {"Ext^G_U", ext_U, 7, "unipotent-deformations"},
      {"Ext^G_{U,w}", ext_Uw, 3, "unipotent-trianguline-deformations"},
      {"ker Ext1_{U,g'}", u_gp_ker, 1, "unipotent-extension-kernels"},
      {"ker Ext1_U", u_ker, 9, "unipotent-extension-kernels"},
  };
  r.sequences = {
      {"klingen-vs-siegel", "dim Ext^G_F (Klingen) = dim Ext^G_F (Siegel)", klingen + h0, ext_F},
      {"ext-over-ext0", "Ext^G - Ext^G_0 = rank jbar + dim Hom_sm(Q_p^x,t)", ext - ext_0, rank_j + hdim(HomKind::sm_t)},
      {"ext-w-over-ext0", "Ext^G_w - Ext^G_0 = dim Hom(Q_p^x,t)", ext_w - ext_0, hdim(HomKind::full_t)},
      {"ext-over-ext-g", "Ext^G = Ext^G_g + rank jbar", ext, ext_g + rank_j},
      {"ext-w-over-ext-g", "Ext^G_w = Ext^G_g + rank jbar on one block", ext_w, ext_g + rank_w},
      {"ext-F-over-ext-g-P", "Ext^G_F = Ext^G_g + rank jbar on {w, s1 w}", ext_F, ext_g + rank_P},
      {"ext-F-over-ext-g-Q", "Ext^G_F = Ext^G_g + rank jbar on {w, s2 w}", ext_F, ext_g + rank_Q},
      {"ps1-sequence", "Ext1(pi_alg,PS1) = 4 + 2*1", ps1, ext_alg + 2},
      {"pi1-sequence", "Ext1(pi_alg,pi1) = 4 + 8*1", pi1, ext_alg + 8},
      {"pi-IP-sequence", "Ext1(pi_alg,pi_IP) = 4 + |S_IP|*1", piP, ext_alg + 3},
      {"pi-IQ-sequence", "Ext1(pi_alg,pi_IQ) = 4 + |S_IQ|*1", piQ, ext_alg + 3},
      {"twisted-intersection", "Ext1_{IX,g'} = 6 + 6 - 7", ixg, ps1 + ps1 - piP},
      {"twisted-P-vs-Q", "dim Hom_{P,g'}(T,E) = dim Hom_{Q,g'}(T,E)", ixg, ixg_Q},
      {"l-invariant", "dim ker jbar - dim glue = L(D)", kernel - glue, 2},
      {"unipotent-kernel", "Ext^G_{U,w} - L(D) = 1", ext_Uw - l_inv, u_gp_ker},
      {"unipotent-total", "ker Ext1_U = 1 + 8", u_ker, u_gp_ker + 8},
  };
  return r;
}

LedgerReport check_ledger(const Rational& a, const Rational& b) {
  LedgerReport r = compute_ledger(a, b);
  for (const auto& e : r.entries)
    if (!e.pass())
      throw Error(ErrorKind::LedgerInconsistent,
                  e.name + ": derived " + std::to_string(e.dim) + ", expected " + std::to_string(e.expected));
  for (const auto& s : r.sequences)
    if (!s.pass())
      throw Error(ErrorKind::LedgerInconsistent,
                  s.name + ": " + std::to_string(s.lhs) + " != " + std::to_string(s.rhs) + " (" + s.identity + ")");
  return r;
}

}  // namespace gsp4h
