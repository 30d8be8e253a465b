#pragma once

#include <array>

#include "gsp4h/weyl.hpp"

namespace gsp4h {

using Alphas = std::array<Rational, 4>;
using HodgeWeights = std::array<long, 4>;

// unr(a1/a3)(p1) unr(a1/a2)(p2) unr(a4)(p3)
TChar phi_char(long p, const Alphas& alpha);
// |p1|^-2 |p2|^-1
TChar eta_char(long p);
// p1^(h1-h3-2) p2^(h1-h2-1) p3^h4
TChar lambda_char(long p, const HodgeWeights& h);
// w(phi) * eta * lambda
TChar delta_char(const WeylElem& w, const TChar& phi, const TChar& eta, const TChar& lambda);
// eta * |p3|^(3/2) * L(chi) for chi = diag(chi1..chi4)
TChar llc_param(long p, const Quad<QpChar>& chi);

// phi1, phi2, phi1 phi2, phi1/phi2 avoid 1 and |.|^{+-1}.
bool is_generic(const TChar& phi);

}  // namespace gsp4h
