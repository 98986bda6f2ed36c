#include <doctest.h>

#include "helpers.hpp"
#include "qaff/centralizer.hpp"

using namespace qaff;
using qaff::test::P;

namespace {

std::unordered_map<uint32_t, Polynomial> no_sub;

}  // namespace

TEST_SUITE("centralizer") {

TEST_CASE("matrix entries") {
  SRing S2(2);
  Centralizer C2(S2);
  CHECK(C2.entry(1, 1) == 1);
  CHECK(C2.entry(1, 2) == P("g_1"));
  CHECK(C2.entry(2, 1).is_zero());
  CHECK(C2.entry(2, 2) == S2.reduce(P("1 + (a_1 - a_2)*g_1")));

  SRing S(3);
  Centralizer C(S);
  CHECK(C.entry(2, 3) == S.reduce(P("g_1 + (a_1 - a_3)*g_2")));
  CHECK(C.entry(3, 3) == S.reduce(P("1 + (a_1 - a_3)*g_1 + (a_1 - a_3)*(a_2 - a_3)*g_2")));
  auto L = C.lower_chart();
  CHECK(L[0][2] == P("g_2"));
  CHECK(L[1][2] == P("g_1"));
  CHECK(L[2][2] == 1);
}

TEST_CASE("minors and D") {
  SRing S(3);
  Centralizer C(S);
  CHECK(C.minor(Partition(), 0) == 1);
  CHECK(Centralizer::R(3, 1) == Partition({1, 1}));
  CHECK(C.D(3) == 1);
  CHECK(C.D(2) == P("g_2"));
  CHECK(C.D(1) == S.reduce(P("g_1^2 - g_2 + (a_2 - a_3)*g_2*g_1")));
  CHECK(C.D(0) == C.minor_at(3, {1, 2, 3}));
  CHECK(C.D_prime(1) == S.reduce(P("g_1 + (a_1 - a_3)*g_2")));
  CHECK(Centralizer::minor_columns(Partition({1}), 2) == std::vector<int>{1, 3});
  // Minors of the upper-triangular matrix with unit (1,1) entry.
  CHECK(C.minor(Partition({2}), 1) == P("g_2"));
}

TEST_CASE("Kostant substitution") {
  SRing S2(2);
  Centralizer C2(S2);
  CHECK(C2.apply_psi(P("x_1")) == RationalFunction(S2.a(1)) + RationalFunction(1, P("g_1")));
  CHECK(C2.psi_times(S2.reduce(P("x_1 - a_1")), {1}) == 1);
  CHECK_THROWS_AS(C2.psi_times(P("x_1"), {}), NotDivisible);

  SRing S(3);
  Centralizer C(S);
  CHECK(C.psi_q(1) == RationalFunction(C.D(2) * C.D(0), C.D(1).pow(2)));
  CHECK(C.psi_partial_sum(3).is_zero());
  CHECK(C.apply_psi(P("x_1 + x_2 + x_3")).is_zero());
  SchubertFamily F(S);
  RationalFunction qq = C.psi_q(1) * C.psi_q(2);
  CHECK(C.apply_psi(F(parse_perm(3, "s1 s2"))) / qq == RationalFunction(C.D(1), C.D(0)));
}

TEST_CASE("Kim ideal is killed") {
  for (int n = 2; n <= 3; ++n) {
    SRing S(n);
    Centralizer C(S);
    for (auto& g : kim_ideal_generators(S)) CHECK(C.apply_psi(g).is_zero());
  }
}

TEST_CASE("Psi is a ring homomorphism") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 3; ++n) {
    SRing S(n);
    Centralizer C(S);
    std::vector<VarId> vars{var_a(1)};
    for (int i = 1; i <= n; ++i) vars.push_back(var_x(i));
    for (int i = 1; i < n; ++i) vars.push_back(var_q(i));
    for (int t = 0; t < 6; ++t) {
      Polynomial p = S.reduce(qaff::test::random_poly(rng, vars, 3, 2));
      Polynomial q = S.reduce(qaff::test::random_poly(rng, vars, 3, 2));
      CHECK(C.apply_psi(p * q) == C.apply_psi(p) * C.apply_psi(q));
      CHECK(C.apply_psi(p + q) == C.apply_psi(p) + C.apply_psi(q));
      CHECK(C.to_rational(C.psi_fraction(p)) == C.apply_psi(p));
      CHECK(C.to_rational(C.cancel(C.psi_fraction(p))) == C.apply_psi(p));
    }
  }
}

TEST_CASE("phi-tilde on entries") {
  for (int n = 2; n <= 3; ++n) {
    SRing S(n);
    NilHecke H(n);
    Peterson Pn(H);
    Centralizer C(S);
    PhiTilde phi(Pn, C);
    PetersonElement prod = Pn.one();
    for (int k = 1; k <= n; ++k) {
      Coweight d = fundamental_coweight(n, k);
      Coweight prev = fundamental_coweight(n, k - 1);
      for (int i = 0; i < n; ++i) d[i] -= prev[i];
      CHECK(phi.entry(k, k) == Pn.translation(d));
      prod = Pn.mul(prod, phi.entry(k, k));
      if (k < n) CHECK(prod == Pn.translation(fundamental_coweight(n, k)));
    }
    std::string witness;
    CHECK(phi.check_recursion(&witness));
    CHECK(phi.minor_grassmannian(Partition(), 0) == Pn.one().element());
  }
}

TEST_CASE("negative control changes the matrix") {
  SRing S(3);
  Centralizer C(S), M(S, {true});
  CHECK(M.recursion_sign() == -1);
  CHECK(M.entry(1, 2) == C.entry(1, 2));
  CHECK(M.entry(2, 2) != C.entry(2, 2));
}

}
