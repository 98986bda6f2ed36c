#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"

using namespace qaff;
using qaff::test::random_point;
using qaff::test::random_poly;

namespace {

const std::vector<VarId> kVars{var_a(1), var_a(2), var_g(1), var_x(1)};

Polynomial leibniz_det(const Matrix<Polynomial>& m) {
  std::vector<int> p(m.size());
  std::iota(p.begin(), p.end(), 0);
  Polynomial sum;
  do {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
    Polynomial term(inv % 2 ? -1 : 1);
    for (size_t i = 0; i < p.size(); ++i) term *= m[i][p[i]];
    sum += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("polynomial ring axioms") {
  std::mt19937 rng(1);
  for (int t = 0; t < 60; ++t) {
    Polynomial p = random_poly(rng, kVars, 4, 3), q = random_poly(rng, kVars, 4, 3), r = random_poly(rng, kVars, 3, 2);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    CHECK(p.pow(3) == p * p * p);
    auto pt = random_point(rng, kVars);
    CHECK((p * q + r).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt) + r.evaluate(pt));
    PolyAccumulator acc;
    acc.add_product(p, q);
    acc.add(r, 2);
    CHECK(acc.finish() == p * q + Polynomial(2) * r);
  }
}

TEST_CASE("division and gcd") {
  std::mt19937 rng(2);
  for (int t = 0; t < 40; ++t) {
    Polynomial p = random_poly(rng, kVars, 3, 2), q = random_poly(rng, kVars, 3, 2), c = random_poly(rng, kVars, 2, 2);
    if (q.is_zero() || c.is_zero() || p.is_zero()) continue;
    CHECK((p * q).divide_exact(q) == p);
    Polynomial g = gcd(p * c, q * c);
    Polynomial quo;
    CHECK((p * c).try_divide(g, quo));
    CHECK((q * c).try_divide(g, quo));
    CHECK(g.total_degree() >= c.total_degree());
    if (!c.is_constant()) CHECK(g.try_divide(c.monic(), quo));
  }
}

TEST_CASE("rational function field operations") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    Polynomial n1 = random_poly(rng, kVars, 3, 2), d1 = random_poly(rng, kVars, 2, 2);
    Polynomial n2 = random_poly(rng, kVars, 3, 2), d2 = random_poly(rng, kVars, 2, 2);
    if (d1.is_zero() || d2.is_zero()) continue;
    RationalFunction f(n1, d1), g(n2, d2);
    auto pt = random_point(rng, kVars);
    if (d1.evaluate(pt) == 0 || d2.evaluate(pt) == 0 || f.den().evaluate(pt) == 0 || g.den().evaluate(pt) == 0)
      continue;
    CHECK((f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt));
    CHECK((f - g).evaluate(pt) == f.evaluate(pt) - g.evaluate(pt));
    CHECK((f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt));
    CHECK(f + g == g + f);
    CHECK((f + g) - g == f);
    if (!g.is_zero()) CHECK((f / g) * g == f);
    CHECK(f.den().leading().coef == 1);
    CHECK(gcd(f.num(), f.den()).is_constant());
  }
}

TEST_CASE("determinant agrees with the Leibniz formula") {
  std::mt19937 rng(4);
  for (int size = 0; size <= 5; ++size)
    for (int t = 0; t < 4; ++t) {
      Matrix<Polynomial> m(size, std::vector<Polynomial>(size));
      for (auto& row : m)
        for (auto& e : row) e = random_poly(rng, kVars, 2, 1);
      CHECK(det(m, Polynomial(), Polynomial(1)) == leibniz_det(m));
    }
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(5);
  std::vector<VarId> vars = kVars;
  vars.push_back(var_q(2));
  vars.push_back(var_a(-3));
  for (int t = 0; t < 60; ++t) {
    Polynomial p = random_poly(rng, vars, 5, 3) * Polynomial(Rational(1, 1 + t % 4));
    CHECK(parse_polynomial(p.to_string()) == p);
    RationalFunction f(p, random_poly(rng, vars, 2, 1) + Polynomial(7));
    CHECK(parse_rational_function(f.to_string()) == f);
  }
}

TEST_CASE("reduction in S is a ring map") {
  std::mt19937 rng(6);
  for (int n = 2; n <= 4; ++n) {
    SRing S(n);
    std::vector<VarId> vars;
    for (int i = 0; i <= n + 1; ++i) vars.push_back(var_a(i));
    for (int t = 0; t < 20; ++t) {
      Polynomial p = random_poly(rng, vars, 3, 2), q = random_poly(rng, vars, 3, 2);
      CHECK(S.reduce(p * q) == S.reduce(S.reduce(p) * S.reduce(q)));
      CHECK(S.is_reduced(S.reduce(p)));
      CHECK(S.shift(S.reduce(p), n) == S.reduce(p));
    }
  }
}

}
