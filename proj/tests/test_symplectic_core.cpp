#include <doctest.h>

#include "support.hpp"

using namespace support;

namespace {

Subspace<Q> span(std::vector<std::vector<long>> rows) {
  std::vector<Vec<Q>> vs;
  for (const auto& r : rows) vs.push_back(Vec<Q>(r.begin(), r.end()));
  return Subspace<Q>::span(vs, 4);
}

// Random element of the upper-triangular Borel: torus times positive root unipotents.
Mat4<Q> rand_borel() {
  const Q x = rand_nonzero_q(5, 3), y = rand_nonzero_q(5, 3), c = rand_nonzero_q(5, 3);
  Mat4<Q> g = Mat4<Q>::diagonal({x, y, c / y, c / x});
  const Mat4<Q> I = Mat4<Q>::identity(4);
  const Mat4<Q> Xa = elem(1, 2) - elem(3, 4), Xb = elem(2, 3), Xab = elem(1, 3) + elem(2, 4), X2ab = elem(1, 4);
  for (const auto& X : {Xa, Xb, Xab, X2ab}) g = g * (I + rand_q(4, 3) * X);
  return g;
}

}  // namespace

TEST_CASE("J form") {
  const auto J = j_form<Q>();
  CHECK(J == mat({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}));
  CHECK(J * J == -Mat4<Q>::identity(4));
  CHECK(J.transpose() == -J);
}

TEST_CASE("similitude") {
  CHECK(similitude(Mat4<Q>::identity(4)) == Q(1));
  const Q a(3), b(-5, 2), c(7);
  CHECK(similitude(Mat4<Q>::diagonal({a, b, c / b, c / a})) == c);
  CHECK(similitude(weyl_matrix(WeylElem::s2())) == Q(1));
  CHECK(similitude(weyl_matrix(WeylElem::s1())) == Q(1));
  try {
    similitude(Mat4<Q>::diagonal({Q(1), Q(2), Q(3), Q(4)}));
    FAIL("expected NotSymplectic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSymplectic);
  }
  CHECK_FALSE(is_gsp4(elem(1, 2) + Mat4<Q>::identity(4)));
  for (int k = 0; k < 200; ++k) {
    Mat4<Q> g = rand_borel();
    if (k % 2) g = g * weyl_matrix(WeylElem::all()[static_cast<size_t>(k) % 8]) * rand_borel();
    REQUIRE(is_gsp4(g));
    const Q s = similitude(g);
    REQUIRE(s * s == g.det());
  }
}

TEST_CASE("Lie algebra membership agrees with the entrywise oracle") {
  // torus
  const Q t1(2), t2(5), t3(-1);
  const auto T = Mat4<Q>::diagonal({t1, t2, t3, t2 + t3 - t1});
  auto lm = lie_membership(T);
  CHECK(lm.in_gsp4);
  CHECK(lm.f == t2 + t3);
  // single elementary matrices and pairwise sums
  int members = 0;
  std::vector<Mat4<Q>> elems;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) elems.push_back(elem(i, j));
  for (size_t x = 0; x < elems.size(); ++x)
    for (size_t y = x; y < elems.size(); ++y)
      for (long sgn : {1L, -1L}) {
        const Mat4<Q> A = x == y ? elems[x] : elems[x] + Q(sgn) * elems[y];
        REQUIRE(lie_membership(A).in_gsp4 == gsp4_oracle(A));
        members += gsp4_oracle(A) ? 1 : 0;
      }
  CHECK(members > 0);
  // E12 alone fails: its J-partner -E34 is required
  CHECK_FALSE(lie_membership(elem(1, 2)).in_gsp4);
  CHECK(lie_membership(elem(1, 2) - elem(3, 4)).in_gsp4);
  CHECK(lie_membership(elem(1, 4)).in_gsp4);
  CHECK(lie_membership(elem(2, 1) + elem(3, 4)).in_gsp4 == gsp4_oracle(elem(2, 1) + elem(3, 4)));
  for (int k = 0; k < 300; ++k) {
    const Mat4<Q> A = rand_mat(2);
    REQUIRE(lie_membership(A).in_gsp4 == gsp4_oracle(A));
    const Mat4<Q> P = gsp4_projection(A);
    REQUIRE(gsp4_oracle(P));
  }
}

TEST_CASE("involution s") {
  const Mat4<Q> I = Mat4<Q>::identity(4);
  CHECK(s_involution(I) == I);
  CHECK(adjoint(elem(1, 1)) == elem(4, 4));
  CHECK(s_involution(elem(1, 1)) == Q(1, 2) * I - elem(4, 4));
  // fixed space of s on gl4 is gsp4 (dim 11); rank of (1 - s) is 5
  Matrix<Q> one_minus_s(16, 16);
  for (size_t c = 0; c < 16; ++c) {
    const Mat4<Q> E = elem(static_cast<int>(c / 4) + 1, static_cast<int>(c % 4) + 1);
    const Mat4<Q> d = E - s_involution(E);
    for (size_t r = 0; r < 16; ++r) one_minus_s(r, c) = d(r / 4, r % 4);
  }
  CHECK(rank(one_minus_s) == 5);
  for (int k = 0; k < 1000; ++k) {
    const Mat4<Q> A = rand_mat(), B = rand_mat();
    REQUIRE(s_involution(s_involution(A)) == A);
    REQUIRE(adjoint(A * B) == adjoint(B) * adjoint(A));
    REQUIRE((s_involution(A) == A) == gsp4_oracle(A));
    const Mat4<Q> P = gsp4_projection(A);
    REQUIRE(gsp4_projection(P) == P);
  }
}

TEST_CASE("adjoint is the J-adjoint") {
  const auto J = j_form<Q>();
  for (int k = 0; k < 200; ++k) {
    const Mat4<Q> A = rand_mat();
    Vec<Q> x(4), y(4);
    for (auto& v : x) v = rand_q(5, 1);
    for (auto& v : y) v = rand_q(5, 1);
    auto r = [&](const Vec<Q>& u, const Vec<Q>& v) {
      const auto Jv = J.apply(v);
      Q s;
      for (size_t i = 0; i < 4; ++i) s += u[i] * Jv[i];
      return s;
    };
    REQUIRE(r(A.apply(x), y) == r(x, adjoint(A).apply(y)));
  }
}

TEST_CASE("subspace algebra") {
  CHECK(span({{1, 0, 0, 0}}).perp() == span({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  CHECK(span({{1, 0, 0, 0}, {0, 1, 0, 0}}).perp() == span({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  // <e1, e2> meets the hyperplane F^3 of the Hodge flag in the line <v3>
  const Q a(2), b(3);
  const auto F = hodge_flag(a, b);
  const auto meet = span({{1, 0, 0, 0}, {0, 1, 0, 0}}).intersect(F.members[2]);
  CHECK(meet == span({{1, 1, 0, 0}}));
  for (int k = 0; k < 300; ++k) {
    std::vector<Vec<Q>> u, v;
    const long du = rand_int(0, 4), dv = rand_int(0, 4);
    for (long i = 0; i < du; ++i) u.push_back({rand_q(3, 2), rand_q(3, 2), rand_q(3, 2), rand_q(3, 2)});
    for (long i = 0; i < dv; ++i) v.push_back({rand_q(3, 2), rand_q(3, 2), rand_q(3, 2), rand_q(3, 2)});
    const auto U = Subspace<Q>::span(u, 4), V = Subspace<Q>::span(v, 4);
    REQUIRE(U.intersect(V).dim() + U.sum(V).dim() == U.dim() + V.dim());
    REQUIRE(U.perp().perp() == U);
    REQUIRE(U.perp().dim() == 4 - U.dim());
    REQUIRE(U.sum(V).contains(U));
    REQUIRE(U.contains(U.intersect(V)));
    REQUIRE(V.contains(U.intersect(V)));
  }
}

TEST_CASE("flag anisotropy") {
  CHECK(flag_anisotropy_check(standard_flag<Q>(FlagKind::complete)));
  CHECK(flag_anisotropy_check(standard_flag<Q>(FlagKind::siegel)));
  CHECK(flag_anisotropy_check(standard_flag<Q>(FlagKind::klingen)));
  // <e1, e3> is isotropic: e1 pairs only with e4 and e3 only with e2
  const auto e13 = span({{1, 0, 0, 0}, {0, 0, 1, 0}});
  CHECK(is_isotropic(e13));
  CHECK(flag_anisotropy_check(Flag<Q>{FlagKind::siegel, {e13}}));
  const auto e14 = span({{1, 0, 0, 0}, {0, 0, 0, 1}});
  CHECK_FALSE(is_isotropic(e14));
  CHECK_FALSE(flag_anisotropy_check(Flag<Q>{FlagKind::siegel, {e14}}));
  CHECK(flag_anisotropy_check(hodge_flag(Q(1), Q(1))));
  CHECK_THROWS_AS(check_well_formed(Flag<Q>{FlagKind::complete, {e13}}), Error);
}

TEST_CASE("parabolic stabilizers") {
  const auto B = standard_flag<Q>(FlagKind::complete);
  const auto P = standard_flag<Q>(FlagKind::siegel);
  const auto Qf = standard_flag<Q>(FlagKind::klingen);
  const Mat4<Q> s1 = weyl_matrix(WeylElem::s1()), s2 = weyl_matrix(WeylElem::s2());
  for (int k = 0; k < 100; ++k) {
    const Mat4<Q> b = rand_borel();
    REQUIRE(stabilizes(b, B));
    REQUIRE(stabilizes(s1 * b, P));
    REQUIRE(stabilizes(b * s1 * rand_borel(), P));
    REQUIRE(stabilizes(s2 * b, Qf));
    REQUIRE(stabilizes(b * s2 * rand_borel(), Qf));
    REQUIRE_FALSE(stabilizes(s1 * b, B));
    REQUIRE_FALSE(stabilizes(s2 * b, P));
    REQUIRE_FALSE(stabilizes(s1 * b, Qf));
  }
}
