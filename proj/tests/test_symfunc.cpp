#include <doctest.h>

#include "helpers.hpp"
#include "qaff/symfunc.hpp"

using namespace qaff;

namespace {

constexpr int N = 6;

Polynomial a(int i) { return Polynomial::var(var_a(i)); }

TruncatedSeries E(int j) { return TruncatedSeries::e(j, N); }
TruncatedSeries H(int j) { return TruncatedSeries::h(j, N); }

// Σ_k (-c)^k e_k · Σ_m d^m h_m.
TruncatedSeries omega_series(const Polynomial& c, const Polynomial& d) {
  TruncatedSeries num = TruncatedSeries::constant(0, N), den = TruncatedSeries::constant(0, N);
  for (int k = 0; k <= N; ++k) {
    num = num + (-c).pow(k) * E(k);
    den = den + d.pow(k) * H(k);
  }
  return num * den;
}

}  // namespace

TEST_SUITE("symfunc") {

TEST_CASE("truncated series") {
  CHECK(E(2).min_degree() == 2);
  CHECK((E(3) * E(4)).is_zero());
  CHECK((E(2) * E(1)).component(3) == (E(2) * E(1)).poly());
  CHECK(TruncatedSeries::e(N + 1, N).is_zero());
  CHECK(E(0) == TruncatedSeries::constant(1, N));
  CHECK(H(2) == E(1) * E(1) - E(2));
  CHECK(E(1).to_string() == "e_1 + O(y^7)");
  CHECK(y_degree(Monomial::var({Family::EY, 3}, 2)) == 6);
}

TEST_CASE("coefficient automorphisms") {
  CHECK(tau_shift(TruncatedSeries::constant(a(0), N)) == TruncatedSeries::constant(a(1), N));
  CHECK(tau_shift(TruncatedSeries::constant(a(0), N), -2) == TruncatedSeries::constant(a(-2), N));
  SRing S(3);
  CHECK(reduce_mod(TruncatedSeries::constant(a(4), N), S) == TruncatedSeries::constant(a(1), N));
  CHECK(classical_limit(a(2) * E(1) + E(2)) == E(2));
  CHECK(omega(E(2)) == H(2));
  SymFunc F(N);
  TruncatedSeries x = F.dual_e(2) + a(3) * F.dual_e(3);
  CHECK(omega(omega(x)) == x);
  CHECK(eta(eta(x)) == x);
  CHECK(F.dual_e(2).a_indices() == std::vector<int>{0, 1, 2});
}

TEST_CASE("dual elementary functions") {
  SymFunc F(N);
  CHECK(F.dual_e(0) == TruncatedSeries::constant(1, N));
  // 1 + (a_0 - a_1) ê_1 = ∏(1 - a_1 y)/(1 - a_0 y)
  CHECK(TruncatedSeries::constant(1, N) + (a(0) - a(1)) * F.dual_e(1) == omega_series(a(1), a(0)));
  // Σ_{j<=2} ê_j ∏_{i<j}(a_i - a_2) = ∏(1 - a_2 y)/(1 - a_0 y)
  CHECK(F.dual_e(0) + (a(0) - a(2)) * F.dual_e(1) + ((a(0) - a(2)) * (a(1) - a(2))) * F.dual_e(2) ==
        omega_series(a(2), a(0)));
  for (int j = 0; j <= 4; ++j) {
    CHECK(classical_limit(F.dual_e(j)) == E(j));
    CHECK(F.dual_e(j).min_degree() == j);
  }
  CHECK(F.dual_h(1) == F.dual_e(1));
  CHECK(F.dual_e(1, 2) == tau_shift(F.dual_e(1), 2));
}

TEST_CASE("dual Schur functions") {
  SymFunc F(N);
  CHECK(F.dual_schur(Partition()) == TruncatedSeries::constant(1, N));
  CHECK(F.dual_schur(Partition({1})) == F.dual_e(1));
  for (int r = 1; r <= 4; ++r) CHECK(F.dual_schur(Partition(std::vector<int>(r, 1))) == F.dual_e(r));
  for (int r = 1; r <= 4; ++r) CHECK(F.dual_schur(Partition({r})) == F.dual_h(r));
  for (int size = 1; size <= 4; ++size)
    for (auto& l : partitions_of(size)) {
      CAPTURE(l.to_string());
      TruncatedSeries s = F.dual_schur(l);
      CHECK(omega(eta(s)) == F.dual_schur(l.transpose()));
      CHECK(classical_limit(s) == F.schur(l));
      CHECK(F.special_determinant(l.transpose(), l.transpose().length()) == s);
    }
  CHECK(F.resolve({Partition({2, 1}), 1}) == tau_shift(F.dual_schur(Partition({2, 1})), 1));
}

TEST_CASE("textbook Schur functions") {
  SymFunc F(N);
  CHECK(F.schur(Partition({2, 1})) == H(2) * H(1) - H(3));
  CHECK(F.schur(Partition({1, 1})) == E(2));
  CHECK(F.schur(Partition({2, 2})) == E(2) * E(2) - E(1) * E(3));
}

TEST_CASE("labels") {
  CHECK(DualSchurName{Partition({2, 1}), -1}.to_string() == "s-hat[2,1]^tau^-1");
  CHECK(kdouble_small(Partition({1}), 2).to_string() == "s-hat[1]");
  CHECK(kdouble_small(Partition({2, 1}), 4).to_string() == "s-hat[2,1]");
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i) CHECK_NOTHROW(kdouble_small(rectangle(n, i).transpose(), n));
  CHECK_THROWS_AS(kdouble_small(Partition({2, 1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(kdouble_small(Partition({3, 1}), 4), std::invalid_argument);
}

}
