#include <doctest.h>

#include "helpers.hpp"
#include "qaff/nilhecke.hpp"
#include "qaff/peterson.hpp"

using namespace qaff;
using qaff::test::P;

namespace {

NilHeckeElement A(int n, std::initializer_list<int> word, int k = 0) {
  return NilHeckeElement::basis(ExtAffine::from_word(n, k, word));
}

NilHeckeElement scalar(int n, const char* text) { return NilHeckeElement::scalar(n, SRing(n).reduce(P(text))); }

std::vector<NilHeckeElement> sample_elements(const NilHecke& H, std::mt19937& rng) {
  int n = H.n();
  std::vector<VarId> vars;
  for (int i = 1; i < n; ++i) vars.push_back(var_a(i));
  std::vector<NilHeckeElement> out;
  auto elems = elements_up_to(n, 0, 3);
  std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
  std::uniform_int_distribution<int> tk(0, n - 1);
  for (int t = 0; t < 6; ++t) {
    NilHeckeElement x(n);
    for (int m = 0; m < 3; ++m) {
      ExtAffine w = ExtAffine::tau(n, tk(rng)) * elems[pick(rng)];
      x.add(w, H.ring().reduce(qaff::test::random_poly(rng, vars, 2, 1)));
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST_SUITE("nilhecke") {

TEST_CASE("basis products") {
  NilHecke H(3);
  CHECK(H.mul(A(3, {0}), A(3, {0})).is_zero());
  CHECK(H.mul(A(3, {1}), A(3, {0})) == A(3, {1, 0}));
  CHECK(H.mul(A(3, {1, 0}), A(3, {0})).is_zero());
  CHECK(H.mul(A(3, {1}), scalar(3, "a_1")) == SRing(3).a(2) * A(3, {1}) - NilHeckeElement::scalar(3, 1));
  CHECK(H.mul(A(3, {}, 1), A(3, {0})) == A(3, {0}, 1));
  CHECK(H.mul(A(3, {0}), A(3, {}, 1)) == A(3, {2}, 1));
}

TEST_CASE("nil-Coxeter relations") {
  for (int n = 3; n <= 4; ++n) {
    NilHecke H(n);
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      CHECK(H.mul(A(n, {i}), A(n, {i})).is_zero());
      CHECK(H.mul(H.mul(A(n, {i}), A(n, {j})), A(n, {i})) == H.mul(H.mul(A(n, {j}), A(n, {i})), A(n, {j})));
      if (n == 4) {
        int l = (i + 2) % n;
        CHECK(H.mul(A(n, {i}), A(n, {l})) == H.mul(A(n, {l}), A(n, {i})));
      }
    }
  }
}

TEST_CASE("action on S") {
  NilHecke H(3);
  const SRing& S = H.ring();
  CHECK(H.divided_difference(1, S.a(1)) == -1);
  CHECK(H.divided_difference(1, S.a(2)) == 1);
  CHECK(H.divided_difference(1, S.reduce(P("a_1*a_2"))).is_zero());
  CHECK(H.divided_difference(1, S.reduce(P("a_1^2"))) == S.reduce(P("-a_1 - a_2")));
  CHECK(H.act_tau(1, S.a(1)) == S.a(2));
  CHECK(H.act_tau(1, S.a(3)) == S.a(1));
  CHECK(H.act_s(0, S.a(1)) == S.a(3));
  CHECK(H.act(A(3, {1}), S.a(1)) == -1);
  CHECK(H.act(A(3, {}, 1), S.a(1)) == S.a(2));
}

TEST_CASE("group elements") {
  NilHecke H(3);
  const SRing& S = H.ring();
  CHECK(H.expand_group(ExtAffine::s(3, 1)) == NilHeckeElement::scalar(3, 1) + S.alpha(1) * A(3, {1}));
  CHECK(H.expand_group(ExtAffine::tau(3)) == A(3, {}, 1));
  NilHeckeElement s1 = H.expand_group(ExtAffine::s(3, 1)), s0 = H.expand_group(ExtAffine::s(3, 0));
  CHECK(H.expand_group(ExtAffine::s(3, 1) * ExtAffine::s(3, 0)) == H.mul(s1, s0));
  CHECK(H.mul(s1, s1) == NilHeckeElement::scalar(3, 1));
  // s_1 s_0 = 1 + α_1 A_1 + (s_1 α_0) A_0 + α_1 (s_1 α_0) A_{10}
  Polynomial s1a0 = H.act_s(1, S.alpha(0));
  CHECK(H.mul(s1, s0) == NilHeckeElement::scalar(3, 1) + S.alpha(1) * A(3, {1}) + s1a0 * A(3, {0}) +
                             S.reduce(S.alpha(1) * s1a0) * A(3, {1, 0}));
}

TEST_CASE("group elements act through the level-zero action") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 4; ++n) {
    NilHecke H(n);
    std::vector<VarId> vars;
    for (int i = 1; i < n; ++i) vars.push_back(var_a(i));
    for (auto& w : elements_up_to(n, 1, 4)) {
      Polynomial f = H.ring().reduce(qaff::test::random_poly(rng, vars, 4, 3));
      CHECK(H.act(H.expand_group(w), f) == H.act_group(w, f));
    }
  }
}

TEST_CASE("coproduct fixtures") {
  NilHecke H(2);
  Peterson Pn(H);
  const SRing& S = H.ring();
  NilHeckeElement one = NilHeckeElement::scalar(2, 1);
  CHECK(H.coproduct(NilHeckeElement::scalar(2, S.a(1))) == tensor(NilHeckeElement::scalar(2, S.a(1)), one));
  NilHeckeElement t = Pn.translation({1, -1}).element();
  CHECK(H.coproduct(t) == tensor(t, t));
  NilHeckeElement j0 = Pn.j(ExtAffine::s(2, 0)).element();
  CHECK(H.coproduct(j0) == tensor(one, j0) + tensor(j0, one) - S.alpha(1) * tensor(j0, j0));
}

TEST_CASE("algebra properties on random elements") {
  std::mt19937 rng(11);
  for (int n = 2; n <= 3; ++n) {
    NilHecke H(n);
    std::vector<VarId> vars;
    for (int i = 1; i < n; ++i) vars.push_back(var_a(i));
    auto xs = sample_elements(H, rng);
    for (size_t i = 0; i + 2 < xs.size(); ++i) {
      const auto &x = xs[i], &y = xs[i + 1], &z = xs[i + 2];
      CHECK(H.mul(H.mul(x, y), z) == H.mul(x, H.mul(y, z)));
      CHECK(H.mul(x, y + z) == H.mul(x, y) + H.mul(x, z));
      Polynomial f = H.ring().reduce(qaff::test::random_poly(rng, vars, 4, 3));
      CHECK(H.act(H.mul(x, y), f) == H.act(x, H.act(y, f)));
      CHECK(H.coproduct(H.mul(x, y)) == H.tensor_mul(H.coproduct(x), H.coproduct(y)));
      for (int k = 1; k < n; ++k)
        CHECK(H.twist(x, k) == H.mul(H.mul(A(n, {}, k), x), A(n, {}, -k)));
      CHECK(H.mul_scalar_right(x, f) == H.mul(x, NilHeckeElement::scalar(n, f)));
    }
  }
}

TEST_CASE("centralizer membership") {
  NilHecke H(3);
  Peterson Pn(H);
  CHECK(H.centralizes(Pn.translation({1, 0, -1}).element()));
  std::string witness;
  CHECK_FALSE(H.centralizes(A(3, {1}), &witness));
  CHECK_FALSE(witness.empty());
  CHECK_THROWS_AS(PetersonElement::certify(H, A(3, {0})), NotCentral);
}

TEST_CASE("braid invariance of the coproduct") {
  NilHecke H(3);
  CHECK(H.coproduct_word(0, {1, 2, 1}) == H.coproduct_word(0, {2, 1, 2}));
  CHECK(H.coproduct_word(1, {0, 1, 0}) == H.coproduct_word(1, {1, 0, 1}));
  CHECK(H.coproduct(A(3, {1, 2, 1})) == H.coproduct_word(0, {2, 1, 2}));
}

}
