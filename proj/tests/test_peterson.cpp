#include <doctest.h>

#include "helpers.hpp"
#include "qaff/peterson.hpp"

using namespace qaff;
using qaff::test::P;

namespace {

ExtAffine W(int n, std::initializer_list<int> word, int k = 0) { return ExtAffine::from_word(n, k, word); }

NilHeckeElement A(int n, std::initializer_list<int> word, int k = 0) { return NilHeckeElement::basis(W(n, word, k)); }

}  // namespace

TEST_SUITE("peterson") {

TEST_CASE("translations") {
  NilHecke H(2);
  Peterson Pn(H);
  CHECK(Pn.j_translation({0, 0}) == Pn.one());
  CHECK(Pn.j_translation({-1, 1}).element() == A(2, {1, 0}) + A(2, {0, 1}));

  NilHecke H3(3);
  Peterson P3(H3);
  PetersonElement j = P3.j_translation({-1, 0, 1});
  CHECK(j.element().size() == 6);
  CHECK(H3.centralizes(j.element()));
  CHECK(j == P3.j(ExtAffine::translation({-1, 0, 1})));
}

TEST_CASE("j_tau") {
  NilHecke H2(2);
  Peterson P2(H2);
  Polynomial al = H2.ring().alpha(1);
  CHECK(P2.j_tau(0) == P2.one());
  CHECK(P2.j_tau(1).element() == A(2, {}, 1) - al * A(2, {1}, 1));

  NilHecke H(3);
  Peterson P3(H);
  const SRing& S = H.ring();
  Polynomial a1 = S.alpha(1), a12 = S.alpha(1) + S.alpha(2);
  CHECK(P3.j_tau(1).element() ==
        A(3, {}, 1) - a1 * A(3, {1}, 1) - a12 * A(3, {2}, 1) + S.reduce(a1 * a12) * A(3, {2, 1}, 1));
  for (int k = 0; k < 3; ++k) CHECK(P3.j_tau(k) == P3.translation(fundamental_coweight(3, k)));
}

TEST_CASE("j_tau_c") {
  NilHecke H(3);
  Peterson P3(H);
  const SRing& S = H.ring();
  CHECK(P3.j_tau_c(1, 0) == P3.j_tau(1));
  CHECK(P3.j_tau_c(1, 1).element() == A(3, {0}, 1) + A(3, {1}, 1) + A(3, {2}, 1) - S.alpha(2) * A(3, {0, 2}, 1) -
                                          (S.alpha(1) + S.alpha(2)) * A(3, {2, 1}, 1));
  CHECK(P3.j_tau_c(1, 2).element() == A(3, {1, 0}, 1) + A(3, {2, 1}, 1) + A(3, {0, 2}, 1));
  for (int k = 0; k < 3; ++k)
    for (int p = 0; p < 3 && k + p <= 3; ++p)
      CHECK(P3.j_tau_c(k, p) == P3.j(ExtAffine::tau(3, k) * ExtAffine::cyclic(3, p)));
}

TEST_CASE("linear-solve oracle") {
  NilHecke H(2);
  Peterson P2(H);
  Polynomial al = H.ring().alpha(1);
  CHECK(P2.j_solve(ExtAffine::identity(2), 0) == P2.one());
  CHECK(P2.j_solve(W(2, {0}), 2).element() == A(2, {0}) + A(2, {1}) - al * A(2, {0, 1}));
  CHECK(P2.j(W(2, {0})) == P2.j_solve(W(2, {0}), 2));
  CHECK(P2.j(W(2, {1, 0})) == P2.j_translation({-1, 1}));
}

TEST_CASE("products at n = 2") {
  NilHecke H(2);
  Peterson P2(H);
  Polynomial al = H.ring().alpha(1);
  auto jt = P2.j_tau(1);
  auto j0 = P2.j(W(2, {0}));
  CHECK(P2.mul(jt, jt) == P2.one() - al * j0);
  auto jt0 = P2.j(W(2, {0}, 1));
  CHECK(P2.mul(jt0, jt0) == P2.j(W(2, {1, 0})));
  CHECK(P2.pow(jt, 2) == P2.mul(jt, jt));
  auto sc = P2.structure_constants(W(2, {0}), W(2, {0}));
  CHECK(sc.size() == 2);
  CHECK(sc[W(2, {1, 0})] == 1);
  CHECK(sc[W(2, {0, 1, 0})] == -al);
}

TEST_CASE("gr and commutativity") {
  NilHecke H(3);
  Peterson P3(H);
  auto gs = grassmannian_elements(3, 3);
  for (auto& w : gs) CHECK(P3.gr(P3.j(w).element()) == P3.j(w));
  for (size_t i = 0; i < gs.size(); i += 3)
    for (size_t k = i; k < gs.size(); k += 4) {
      auto u = P3.j(gs[i]), v = P3.j(gs[k]);
      CHECK(P3.mul(u, v) == P3.mul(v, u));
      CHECK(P3.structure_constants(gs[i], gs[k]) == P3.structure_constants(gs[k], gs[i]));
      NilHeckeElement gp = P3.mul_grassmannian({u, v});
      CHECK(gp == P3.mul(u, v).element().grassmannian_part());
    }
}

TEST_CASE("determinantal constructions") {
  NilHecke H(3);
  Peterson P3(H);
  CHECK(P3.j_partition(Partition(), 0) == P3.one());
  CHECK(P3.j_partition(Partition({1}), 1) == P3.j(ExtAffine::cyclic(3, 1)));
  CHECK(P3.j_partition(Partition({1, 1}), 2) == P3.j(partition_to_grassmannian(Partition({1, 1}), 3)));
  CHECK(P3.j_partition(Partition({2}), 1) == P3.j(ExtAffine::cyclic(3, 2)));
  CHECK_THROWS_AS(P3.j_partition(Partition({2, 1}), 2), std::invalid_argument);
  CHECK(P3.j_twist(P3.one(), 1) == P3.one());
  PetersonElement tw = P3.j_twist(P3.j(W(3, {0})), 1);
  CHECK(H.centralizes(tw.element()));
  CHECK(P3.j_twist(tw, 2) == P3.j(W(3, {0})));
}

TEST_CASE("construction routes agree with the oracle") {
  for (int n = 2; n <= 3; ++n) {
    NilHecke H(n);
    Peterson Pn(H);
    for (auto& w : grassmannian_elements(n, 4)) {
      CAPTURE(w.word_string());
      std::string route;
      PetersonElement c = Pn.j_construct(w, &route);
      CHECK_FALSE(route.empty());
      CHECK(c == Pn.j(w));
    }
  }
}

TEST_CASE("localized equality") {
  NilHecke H(2);
  Peterson P2(H);
  auto jt = P2.j_tau(1), j10 = P2.j(W(2, {1, 0}));
  LocalizedPetersonElement x{P2.mul(jt, j10), {j10}}, y{jt, {}};
  CHECK(P2.equal(x, y));
  LocalizedPetersonElement z{j10, {jt}};
  CHECK_FALSE(P2.equal(x, z));
}

TEST_CASE("Graham positivity") {
  NilHecke H(3);
  Peterson P3(H);
  const SRing& S = H.ring();
  CHECK(P3.to_simple_roots(S.alpha(1) + S.alpha(2)) == P("alpha_1 + alpha_2"));
  CHECK(P3.graham_positive(S.reduce(S.alpha(1) * (S.alpha(1) + S.alpha(2)))));
  CHECK_FALSE(P3.graham_positive(-S.alpha(2)));
  CHECK_FALSE(P3.graham_positive(S.a(1)));
  CHECK(P3.graham_positive(Polynomial()));

  NilHecke H2(2);
  Peterson P2(H2);
  auto rep = P2.positivity_scan(4);
  CHECK(rep.violations(false) == 0);
  CHECK(rep.violations(true) == 0);
  CHECK(rep.entries.size() == grassmannian_elements(2, 4).size());
}

TEST_CASE("errors") {
  NilHecke H(3);
  Peterson P3(H);
  CHECK_THROWS(P3.j(ExtAffine::s(3, 1)));
  CHECK_THROWS(P3.j_translation({1, 0, -1}));
}

}
