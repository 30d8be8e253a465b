#include <doctest.h>

#include "support.hpp"

using namespace support;

namespace {

// s1: (n1,n2,n3) -> (n2,n1,n3); s2: (n1,n2,n3) -> (n1,-n2,n2+n3)
Weight gen_act(char s, const Weight& n) {
  if (s == '1') return {n[1], n[0], n[2]};
  return {n[0], -n[1], n[1] + n[2]};
}

// Applies the word right to left: (x y)(n) = x(y(n)).
Weight word_act(const std::string& word, Weight n) {
  if (word == "e") return n;
  for (size_t i = word.size(); i >= 2; i -= 2) n = gen_act(word[i - 1], n);
  return n;
}

Weight rand_weight() { return {Q(rand_int(-9, 9)), Q(rand_int(-9, 9)), Q(rand_int(-9, 9))}; }

CocharTuple rand_cochar() {
  const Q m1(rand_int(-9, 9)), m2(rand_int(-9, 9)), m3(rand_int(-9, 9));
  return {m1, m2, m3, m2 + m3 - m1};
}

}  // namespace

TEST_CASE("Weyl group presentation") {
  const auto& W = WeylElem::all();
  CHECK(W.size() == 8);
  for (const auto& w : W) CHECK(w.in_W());
  CHECK(std::is_sorted(W.begin(), W.end()));
  int in_w = 0;
  for (const auto& w : WeylElem::all_s4()) in_w += w.in_W() ? 1 : 0;
  CHECK(in_w == 8);
  const auto s1 = WeylElem::s1(), s2 = WeylElem::s2(), e = WeylElem::id();
  CHECK(s1 * s1 == e);
  CHECK(s2 * s2 == e);
  const auto s12 = s1 * s2;
  CHECK(s12 * s12 * s12 * s12 == e);
  CHECK(s12 * s12 != e);
  CHECK(WeylElem::s0() == s1 * s2 * s1 * s2);
  CHECK(WeylElem::s0() == s2 * s1 * s2 * s1);
  CHECK(WeylElem::s0().length() == 4);
  for (size_t i = 0; i < W.size(); ++i) {
    CHECK(W[i].index() == i);
    CHECK(W[i] * W[i].inverse() == e);
    CHECK(WeylElem::parse(W[i].word()) == W[i]);
    CHECK(WeylElem::parse(W[i].one_line_string()) == W[i]);
    for (const auto& v : W) CHECK((W[i] * v).in_W());
  }
  CHECK(WeylElem::parse("s1s2") == s1 * s2);
  CHECK(WeylElem::parse("s2*s1") == s2 * s1);
  CHECK(WeylElem::parse("id") == e);
  CHECK(WeylElem::parse("[2,1,4,3]") == s1);
  CHECK(s1.one_line_string() == "[2,1,4,3]");
  CHECK_THROWS_AS(WeylElem::parse("s3"), Error);
  CHECK_THROWS_AS(WeylElem::parse("[1,1,2,3]"), Error);
}

TEST_CASE("Weyl matrices realize the permutation action on the torus") {
  for (const auto& w : WeylElem::all()) {
    const auto M = weyl_matrix(w);
    REQUIRE(is_gsp4(M));
    const Quad<Q> x{Q(2), Q(3), Q(5), Q(7)};
    const auto conj = M * Mat4<Q>::diagonal({x[0], x[1], x[2], x[3]}) * M.inverse();
    const auto wx = weyl_act(w, x);
    REQUIRE(conj == Mat4<Q>::diagonal({wx[0], wx[1], wx[2], wx[3]}));
  }
}

TEST_CASE("action on weights") {
  CHECK(weyl_act(WeylElem::s1(), roots::alpha()) == Weight{-1, 1, 0});
  CHECK(weyl_act(WeylElem::s2(), roots::beta()) == Weight{0, -2, 1});
  CHECK(weyl_act(WeylElem::s1(), roots::beta()) == Weight{2, 0, -1});
  CHECK(weyl_act(WeylElem::s2(), roots::alpha()) == Weight{1, 1, -1});
  for (int k = 0; k < 200; ++k) {
    const Weight n = rand_weight();
    for (const auto& w : WeylElem::all()) {
      REQUIRE(weyl_act(w, n) == word_act(w.word(), n));
      REQUIRE(weyl_act(w, roots::sim()) == roots::sim());
    }
    REQUIRE(weyl_act(WeylElem::id(), n) == n);
  }
}

TEST_CASE("pairings and dominance") {
  using namespace roots;
  CHECK(pairing(alpha(), alpha_vee()) == Q(2));
  CHECK(pairing(beta(), beta_vee()) == Q(2));
  CHECK(pairing(beta(), alpha_vee()) == Q(-2));
  CHECK(pairing(alpha(), beta_vee()) == Q(-1));
  CHECK(pairing(sim(), alpha_vee()) == Q(0));
  CHECK(pairing(sim(), beta_vee()) == Q(0));
  CHECK(dominant({3, 1, -5}));
  CHECK(strictly_dominant({3, 1, -5}));
  CHECK(dominant({2, 0, 4}));
  CHECK_FALSE(strictly_dominant({2, 0, 4}));
  CHECK_FALSE(dominant({1, 2, 0}));
  Weight sum{};
  for (const auto& r : positive())
    for (int i = 0; i < 3; ++i) sum[i] += r[i];
  CHECK(sum == Weight{4, 2, -3});
  CHECK(rho() == Weight{2, 1, Q(-3, 2)});
  CHECK(positive().size() == 4);
  // W-invariance of the pairing
  for (int k = 0; k < 100; ++k) {
    const Weight mu = rand_weight();
    const CocharTuple c = rand_cochar();
    for (const auto& w : WeylElem::all()) {
      const auto wc = weyl_act(w, c);
      REQUIRE(satisfies_torus_constraint(wc));
      REQUIRE(pairing(weyl_act(w, mu), wc) == pairing(mu, c));
    }
  }
}

TEST_CASE("check involution") {
  CHECK(check_involution(WeylElem::s1()) == WeylElem::s2());
  CHECK(check_involution(WeylElem::s2()) == WeylElem::s1());
  CHECK(check_involution(WeylElem::s0()) == WeylElem::s0());
  CHECK(check_involution(WeylElem::id()) == WeylElem::id());
  for (const auto& x : WeylElem::all()) {
    CHECK(check_involution(check_involution(x)) == x);
    CHECK(check_involution(x).length() == x.length());
    for (const auto& y : WeylElem::all()) CHECK(check_involution(x * y) == check_involution(x) * check_involution(y));
  }
}

TEST_CASE("L map") {
  CHECK(L_map(CocharTuple{0, 0, 0, 0}) == Weight{0, 0, 0});
  const HodgeWeights h{7, 4, 2, -1};
  CHECK(L_map(CocharTuple{h[0], h[1], h[2], h[3]}) == Weight{h[0] - h[2], h[0] - h[1], h[3]});
  try {
    L_map(CocharTuple{1, 0, 0, 0});
    FAIL("expected ConstraintViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConstraintViolated);
  }
  for (int k = 0; k < 200; ++k) {
    const CocharTuple c = rand_cochar();
    for (const auto& w : WeylElem::all()) REQUIRE(weyl_act(w, L_map(c)) == L_map(weyl_act(check_involution(w), c)));
  }
  // surjective onto Z^3 with preimage m1 = n1 + n2 + n3
  for (int k = 0; k < 100; ++k) {
    const Weight n = rand_weight();
    const Q m1 = n[0] + n[1] + n[2];
    REQUIRE(L_map(CocharTuple{m1, m1 - n[1], m1 - n[0], n[2]}) == n);
  }
}

TEST_CASE("dot action") {
  for (int k = 0; k < 100; ++k) {
    const Weight l = rand_weight();
    REQUIRE(dot_action(WeylElem::id(), l) == l);
    REQUIRE(dot_action(WeylElem::s1(), l) == Weight{l[1] - 1, l[0] + 1, l[2]});
    for (const auto& u : WeylElem::all()) {
      const Weight d = dot_action(u, l);
      for (const auto& x : d) REQUIRE(x.is_integer());
      for (const auto& v : WeylElem::all()) REQUIRE(dot_action(u * v, l) == dot_action(u, dot_action(v, l)));
    }
  }
}

TEST_CASE("characters") {
  const long p = 5;
  const Alphas al{Q(2), Q(3), Q(10), Q(15)};
  const TChar phi = phi_char(p, al);
  CHECK(phi[0].unit_value() == al[0] / al[2]);
  CHECK(phi[1].unit_value() == al[0] / al[1]);
  CHECK(phi[2].unit_value() == al[3]);
  const TChar eta = eta_char(p);
  CHECK(eta[0].unit_value() == Q(25));
  CHECK(eta[1].unit_value() == Q(5));
  CHECK(eta[2].unit_value() == Q(1));
  for (const auto& c : eta) CHECK(c.alg().is_zero());
  const HodgeWeights h{3, 2, 1, 0};
  const TChar lam = lambda_char(p, h);
  CHECK(lam[0].alg() == Q(h[0] - h[2] - 2));
  CHECK(lam[1].alg() == Q(h[0] - h[1] - 1));
  CHECK(lam[2].alg() == Q(h[3]));
  // lambda = L(z^h) p1^-2 p2^-1
  const Weight Lh = L_map(CocharTuple{h[0], h[1], h[2], h[3]});
  CHECK(lam[0].alg() == Lh[0] - 2);
  CHECK(lam[1].alg() == Lh[1] - 1);
  // delta_w = w(phi) eta lambda
  const TChar d = delta_char(WeylElem::s1(), phi, eta, lam);
  const TChar wphi = weyl_act(WeylElem::s1(), phi);
  CHECK(wphi[0].unit_value() == phi[1].unit_value());
  CHECK(d[0].unit_value() == wphi[0].unit_value() * Q(25));
  CHECK(d[0].alg() == lam[0].alg());
  // the LLC parameter carries |p3|^{3/2}
  const Quad<QpChar> chi{QpChar(p, al[0]), QpChar(p, al[1]), QpChar(p, al[2]), QpChar(p, al[3])};
  const TChar llc = llc_param(p, chi);
  CHECK(llc[2].pexp() == Q(-3, 2) + Q(padic_val(al[3], p)));
  CHECK(llc[0].unit_value() == Q(25) * al[0] / al[2]);
  CHECK_THROWS_AS(phi_char(p, Alphas{Q(0), Q(1), Q(1), Q(1)}), Error);
}

TEST_CASE("genericity of phi") {
  const long p = 3;
  CHECK(is_generic(phi_char(p, Alphas{Q(1), Q(9), Q(81), Q(729)})));
  // alpha1/alpha2 = 1/3 = |p|
  CHECK_FALSE(is_generic(phi_char(p, Alphas{Q(1), Q(3), Q(27), Q(81)})));
  CHECK_FALSE(is_generic(phi_char(p, Alphas{Q(2), Q(2), Q(7), Q(7)})));
  CHECK(is_generic(phi_char(p, Alphas{Q(2), Q(5), Q(7), Q(35, 2)})));
}
