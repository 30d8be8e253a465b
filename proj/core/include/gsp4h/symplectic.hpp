#pragma once

#include <string>
#include <vector>

#include "gsp4h/matrix.hpp"

namespace gsp4h {

template <class F>
using Mat4 = Matrix<F>;

// sim(M) with M^T J M = sim(M) J. Throws NotSymplectic otherwise.
template <class F>
F similitude(const Mat4<F>& m) {
  if (m.rows() != 4 || m.cols() != 4) throw Error(ErrorKind::InvalidData, "expected 4x4 matrix");
  const Mat4<F> j = j_form<F>();
  Mat4<F> s = m.transpose() * j * m;
  F lambda = s(0, 3);
  if (lambda.is_zero() || !(s == lambda * j))
    throw Error(ErrorKind::NotSymplectic, "M^T J M is not a nonzero multiple of J");
  return lambda;
}

template <class F>
bool is_gsp4(const Mat4<F>& m) {
  try {
    similitude(m);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotSymplectic) return false;
    throw;
  }
}

template <class F>
struct LieMembership {
  bool in_gsp4 = false;
  F f{};
};

template <class F>
LieMembership<F> lie_membership(const Mat4<F>& a) {
  const Mat4<F> j = j_form<F>();
  F half_tr = a.trace() / F(2);
  LieMembership<F> r;
  r.in_gsp4 = (a.transpose() * j + j * a) == half_tr * j;
  if (r.in_gsp4) r.f = half_tr;
  return r;
}

// A* = J^{-1} A^T J, adjoint for r(x,y) = x^T J y.
template <class F>
Mat4<F> adjoint(const Mat4<F>& a) {
  const Mat4<F> j = j_form<F>();
  return -(j * a.transpose() * j);
}

template <class F>
Mat4<F> s_involution(const Mat4<F>& a) {
  return (a.trace() / F(2)) * Mat4<F>::identity(4) - adjoint(a);
}

// (A + s(A)) / 2
template <class F>
Mat4<F> gsp4_projection(const Mat4<F>& a) {
  return F(1) / F(2) * (a + s_involution(a));
}

enum class FlagKind { complete, siegel, klingen };

template <class F>
struct Flag {
  FlagKind kind = FlagKind::complete;
  std::vector<Subspace<F>> members;
};

template <class F>
void check_well_formed(const Flag<F>& fl) {
  std::vector<size_t> want;
  switch (fl.kind) {
    case FlagKind::complete: want = {1, 2, 3}; break;
    case FlagKind::siegel: want = {2}; break;
    case FlagKind::klingen: want = {1, 3}; break;
  }
  if (fl.members.size() != want.size()) throw Error(ErrorKind::InvalidData, "wrong number of flag members");
  for (size_t i = 0; i < want.size(); ++i) {
    if (fl.members[i].ambient() != 4 || fl.members[i].dim() != want[i])
      throw Error(ErrorKind::InvalidData, "flag member has wrong dimension");
    if (i > 0 && !fl.members[i].contains(fl.members[i - 1]))
      throw Error(ErrorKind::InvalidData, "flag members are not nested");
  }
}

template <class F>
bool flag_anisotropy_check(const Flag<F>& fl) {
  check_well_formed(fl);
  for (const auto& v : fl.members) {
    const size_t d = 4 - v.dim();
    const Subspace<F>* dual = nullptr;
    for (const auto& u : fl.members)
      if (u.dim() == d) dual = &u;
    if (dual == nullptr || !(v.perp() == *dual)) return false;
  }
  return true;
}

// Is the J-form zero on U?
template <class F>
bool is_isotropic(const Subspace<F>& u) {
  return u.perp().contains(u);
}

// Stabilizes every member of the flag.
template <class F>
bool stabilizes(const Mat4<F>& g, const Flag<F>& fl) {
  for (const auto& v : fl.members)
    for (const auto& x : v.vectors())
      if (!v.contains(g.apply(x))) return false;
  return true;
}

template <class F>
Flag<F> standard_flag(FlagKind kind) {
  Flag<F> fl{kind, {}};
  auto c = [](std::vector<size_t> idx) { return Subspace<F>::coordinate(idx, 4); };
  switch (kind) {
    case FlagKind::complete: fl.members = {c({0}), c({0, 1}), c({0, 1, 2})}; break;
    case FlagKind::siegel: fl.members = {c({0, 1})}; break;
    case FlagKind::klingen: fl.members = {c({0}), c({0, 1, 2})}; break;
  }
  return fl;
}

}  // namespace gsp4h
