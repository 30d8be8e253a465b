#include "gsp4h/characters.hpp"

namespace gsp4h {

TChar phi_char(long p, const Alphas& alpha) {
  for (const auto& a : alpha)
    if (a.is_zero()) throw Error(ErrorKind::InvalidData, "eigenvalues must be nonzero");
  return {QpChar(p, alpha[0] / alpha[2]), QpChar(p, alpha[0] / alpha[1]), QpChar(p, alpha[3])};
}

TChar eta_char(long p) {
  return {QpChar(p, Rational(p * p)), QpChar(p, Rational(p)), QpChar(p, Rational(1))};
}

TChar lambda_char(long p, const HodgeWeights& h) {
  return {QpChar(p, Rational(1), Rational(h[0] - h[2] - 2)),
          QpChar(p, Rational(1), Rational(h[0] - h[1] - 1)),
          QpChar(p, Rational(1), Rational(h[3]))};
}

TChar delta_char(const WeylElem& w, const TChar& phi, const TChar& eta, const TChar& lambda) {
  TChar wphi = weyl_act(w, phi);
  TChar out;
  for (int i = 0; i < 3; ++i) out[i] = wphi[i] + eta[i] + lambda[i];
  return out;
}

TChar llc_param(long p, const Quad<QpChar>& chi) {
  TChar l = L_map(chi);
  TChar e = eta_char(p);
  // |x|^(3/2) = unr(p^(-3/2))
  QpChar twist = QpChar::unr_power(p, Rational(-3, 2));
  return {e[0] + l[0], e[1] + l[1], e[2] + twist + l[2]};
}

bool is_generic(const TChar& phi) {
  const QpChar& x = phi[0];
  const QpChar& y = phi[1];
  for (const QpChar& c : {x, y, x + y, x - y}) {
    if (!c.alg().is_zero()) continue;
    if (c.unit_is(Rational(1), 0) || c.unit_is(Rational(1), 1) || c.unit_is(Rational(1), -1)) return false;
  }
  return true;
}

}  // namespace gsp4h
