#include <doctest.h>

#include "helpers.hpp"
#include "qaff/schubert.hpp"

using namespace qaff;
using qaff::test::P;

namespace {

Polynomial at_q_zero(const Polynomial& p) {
  return p.filter([](const Monomial& m) {
    for (auto& [k, e] : m.factors())
      if (VarId::from_key(k).family == Family::Q) return false;
    return true;
  });
}

// x_i -> a_i.
Polynomial x_to_a(const SRing& S, const Polynomial& p) {
  std::unordered_map<uint32_t, Polynomial> sub;
  for (int i = 1; i <= S.n(); ++i) sub[var_x(i).key()] = S.a(i);
  return S.reduce(p.substitute(sub));
}

}  // namespace

TEST_SUITE("schubert") {

TEST_CASE("basic invariants") {
  CHECK(basic_invariants(1) == std::vector<Polynomial>{P("x_1")});
  CHECK(basic_invariants(2) == std::vector<Polynomial>{P("x_1 + x_2"), P("x_1*x_2 + q_1")});
  auto g3 = basic_invariants(3);
  CHECK(g3[2] == P("x_1*x_2*x_3 + q_1*x_3 + q_2*x_1"));
  CHECK(g3[1] == P("x_1*x_2 + x_1*x_3 + x_2*x_3 + q_1 + q_2"));
}

TEST_CASE("Kim ideal generators") {
  for (int n = 2; n <= 4; ++n) {
    SRing S(n);
    auto gens = kim_ideal_generators(S);
    REQUIRE(gens.size() == size_t(n));
    Polynomial xsum;
    for (int i = 1; i <= n; ++i) xsum += Polynomial::var(var_x(i));
    CHECK(gens[0] == xsum);
    for (auto& g : gens) CHECK(x_to_a(S, at_q_zero(g)).is_zero());
  }
  SRing S2(2);
  CHECK(kim_ideal_generators(S2)[1] == P("x_1*x_2 + q_1 + a_1^2"));
}

TEST_CASE("divided differences in a") {
  SRing S(3);
  CHECK(divided_difference_a(S, 1, S.a(1)) == 1);
  CHECK(divided_difference_a(S, 1, S.a(2)) == -1);
  CHECK(divided_difference_a(S, 1, P("x_1")).is_zero());
  CHECK(divided_difference_a(S, 2, P("(x_1 - a_2)*(x_1 - a_1)")) == P("a_1 - x_1"));
}

TEST_CASE("quantum double Schubert polynomials") {
  SRing S2(2);
  SchubertFamily F2(S2);
  CHECK(F2(perm_identity(2)) == 1);
  CHECK(F2(perm_s(2, 1)) == S2.reduce(P("x_1 - a_1")));

  SRing S(3);
  SchubertFamily F(S);
  CHECK(F(perm_identity(3)) == 1);
  CHECK(F(parse_perm(3, "s1 s2 s1")) == S.reduce(P("(x_1 - a_1)*(x_1 - a_2)*(x_2 - a_1) + q_1*(x_1 - a_2)")));
  CHECK(F(parse_perm(3, "s2 s1")) == S.reduce(P("(x_1 - a_1)*(x_1 - a_2) - q_1")));
  CHECK(F(parse_perm(3, "s1 s2")) == S.reduce(P("(x_1 - a_1)*(x_2 - a_1) + q_1")));
  CHECK(F(perm_s(3, 2)) == S.reduce(P("x_1 + x_2 - a_1 - a_2")));
}

TEST_CASE("recursion is independent of the path") {
  for (int n = 2; n <= 4; ++n) {
    SRing S(n);
    SchubertFamily F(S), C(S, {false, false});
    for (auto& w : all_perms(n)) {
      CAPTURE(perm_to_string(w));
      CHECK(F.along_largest_ascent(w) == F(w));
      CHECK(C.along_largest_ascent(w) == C(w));
    }
  }
}

TEST_CASE("classical specialization") {
  for (int n = 2; n <= 4; ++n) {
    SRing S(n);
    SchubertFamily F(S), C(S, {false, false});
    for (auto& w : all_perms(n)) {
      CAPTURE(perm_to_string(w));
      CHECK(at_q_zero(F(w)) == C(w));
      CHECK(C(w).total_degree() <= unsigned(perm_length(w)));
      // Vanishing at x = a for w ≠ id.
      CHECK(x_to_a(S, C(w)) == (w == perm_identity(n) ? Polynomial(1) : Polynomial()));
    }
    for (int i = 1; i < n; ++i) {
      Polynomial expect;
      for (int j = 1; j <= i; ++j) expect += Polynomial::var(var_x(j)) - S.a(j);
      CHECK(C(perm_s(n, i)) == S.reduce(expect));
    }
  }
}

TEST_CASE("standard elementary expansion") {
  for (int n = 2; n <= 4; ++n) {
    SRing S(n);
    SchubertFamily C(S, {false, false}), F(S);
    CHECK(standard_elementary_indices(n).size() == size_t([&] {
            int f = 1;
            for (int k = 2; k <= n; ++k) f *= k;
            return f;
          }()));
    for (auto& w : all_perms(n)) {
      auto ex = standard_elementary_expansion(C(w), n);
      REQUIRE(ex.has_value());
      CHECK(quantize(*ex, n) == F(w));
    }
  }
  CHECK_FALSE(standard_elementary_expansion(P("x_1^2"), 2).has_value());
}

TEST_CASE("negative control flips the recursion") {
  SRing S(3);
  SchubertFamily F(S), M(S, {true, true});
  CHECK(M(perm_longest(3)) == F(perm_longest(3)));
  CHECK(M(perm_identity(3)) == -F(perm_identity(3)));
}

}
