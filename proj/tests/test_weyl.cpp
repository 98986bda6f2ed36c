#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qaff/weyl.hpp"

using namespace qaff;

namespace {

Coweight neg(Coweight c) {
  for (auto& x : c) x = -x;
  return c;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("lengths") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(ExtAffine::identity(n).length() == 0);
    for (int k = -n; k <= n; ++k) CHECK(ExtAffine::tau(n, k).length() == 0);
    for (int p = 0; p < n; ++p) CHECK(ExtAffine::cyclic(n, p).length() == p);
  }
  CHECK(ExtAffine::tau(3).tau_power() == 1);
  CHECK(ExtAffine::tau(3, 3) == ExtAffine::identity(3));
}

TEST_CASE("translations") {
  CHECK(ExtAffine::s(2, 1) * ExtAffine::s(2, 0) == ExtAffine::translation({-1, 1}));
  for (int n = 2; n <= 4; ++n) {
    CHECK(ExtAffine::translation(Coweight(n, 0)) == ExtAffine::identity(n));
    for (int i = 1; i < n; ++i) {
      Coweight w = fundamental_coweight(n, i);
      CHECK((ExtAffine::translation(w) * ExtAffine::translation(neg(w))) == ExtAffine::identity(n));
      CHECK(ExtAffine::translation(w).tau_power() == i);
    }
  }
  // t_{-ω_1} = s_1 ... s_{n-1} τ^{-1}
  for (int n = 2; n <= 5; ++n) {
    ExtAffine w = ExtAffine::identity(n);
    for (int i = 1; i < n; ++i) w = w * ExtAffine::s(n, i);
    CHECK(ExtAffine::translation(neg(fundamental_coweight(n, 1))) == w * ExtAffine::tau(n, -1));
  }
}

TEST_CASE("translations commute and add") {
  Coweight a{1, -2, 0}, b{0, 3, -1}, c{1, 1, -1};
  auto t = ExtAffine::translation;
  CHECK(t(a) * t(b) == t(b) * t(a));
  CHECK(t(a) * t(b) == t(c));
}

TEST_CASE("Grassmannian elements") {
  CHECK(ExtAffine::identity(3).is_grassmannian());
  for (int p = 0; p < 4; ++p) CHECK(ExtAffine::cyclic(4, p).is_grassmannian());
  CHECK_FALSE(ExtAffine::s(3, 1).is_grassmannian());
  CHECK(ExtAffine::tau(3, 2).is_grassmannian());
  for (int n = 2; n <= 4; ++n)
    for (auto& w : grassmannian_elements(n, 5)) {
      CHECK(w.is_grassmannian());
      for (int i = 1; i < n; ++i) CHECK_FALSE(w.has_right_descent(i));
    }
}

TEST_CASE("Grassmannian elements are counted by bounded partitions") {
  // Grassmannian elements of W_af of length l are (n-1)-bounded partitions of l.
  for (int n = 2; n <= 4; ++n)
    for (int l = 0; l <= 6; ++l) {
      int bounded = 0;
      for (auto& p : partitions_of(l))
        if (p.parts.empty() || p.parts[0] < n) ++bounded;
      int count = 0;
      for (auto& w : grassmannian_elements(n, 6))
        if (w.length() == l && w.tau_power() == 0) ++count;
      CHECK(count == bounded);
    }
}

TEST_CASE("bounded partitions and Grassmannian elements") {
  for (int n = 2; n <= 4; ++n) {
    CHECK(partition_to_grassmannian(Partition(), n) == ExtAffine::identity(n));
    for (int r = 1; r < n; ++r) CHECK(partition_to_grassmannian(Partition({r}), n) == ExtAffine::cyclic(n, r));
    for (int i = 1; i < n; ++i) {
      ExtAffine wr = partition_to_grassmannian(rectangle(n, i), n);
      CHECK(ExtAffine::tau(n, n - i) * wr == ExtAffine::translation(neg(fundamental_coweight(n, i))));
    }
    for (int size = 0; size <= 6; ++size)
      for (auto& p : partitions_of(size)) {
        if (!p.parts.empty() && p.parts[0] >= n) continue;
        ExtAffine u = partition_to_grassmannian(p, n);
        CHECK(u.length() == size);
        CHECK(u.is_grassmannian());
        CHECK(grassmannian_to_partition(u) == p);
      }
  }
  CHECK(rectangle(3, 1) == Partition({1, 1}));
  CHECK(rectangle(4, 3) == Partition({3}));
}

TEST_CASE("factor_sigma") {
  ExtAffine c1 = ExtAffine::cyclic(3, 1);
  auto [k, u] = factor_sigma(ExtAffine::tau(3, 2) * c1);
  CHECK(k == 2);
  CHECK(u == c1);
  auto [k0, u0] = factor_sigma(ExtAffine::identity(3));
  CHECK(k0 == 0);
  CHECK(u0 == ExtAffine::identity(3));
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      auto [ki, ui] = factor_sigma(ExtAffine::translation(neg(fundamental_coweight(n, i))));
      CHECK(ki == n - i);
      CHECK(grassmannian_to_partition(ui) == rectangle(n, i));
    }
}

TEST_CASE("partitions") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0).size() == 1);
  CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(Partition({2, 2}).fits_box(2, 2));
  CHECK_FALSE(Partition({3}).fits_box(2, 2));
  CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("parsing elements") {
  CHECK(parse_ext_affine(3, "tau^2 * s1 s0") == ExtAffine::tau(3, 2) * ExtAffine::s(3, 1) * ExtAffine::s(3, 0));
  CHECK(parse_ext_affine(3, "s_1 s_0") == ExtAffine::s(3, 1) * ExtAffine::s(3, 0));
  CHECK(parse_ext_affine(3, "tau c2") == ExtAffine::tau(3) * ExtAffine::cyclic(3, 2));
  CHECK(parse_ext_affine(3, "t[1,0,-1]") == ExtAffine::translation({1, 0, -1}));
  CHECK(parse_ext_affine(3, "[2,0,4]") == ExtAffine::from_window({2, 0, 4}));
  CHECK_THROWS(parse_ext_affine(3, "s4"));
  ExtAffine w = parse_ext_affine(4, "tau^3 * s2 s1 s0 s3");
  CHECK(parse_ext_affine(4, w.word_string()) == w);
}

TEST_CASE("finite permutations") {
  CHECK(perm_length(perm_longest(4)) == 6);
  CHECK(perm_right_descents(perm_longest(3)) == std::vector<int>{1, 2});
  CHECK(parse_perm(3, "s2 s1") == perm_compose(perm_s(3, 2), perm_s(3, 1)));
  CHECK(parse_perm(3, "[3,1,2]") == Perm{3, 1, 2});
  CHECK(parse_perm(3, "id") == perm_identity(3));
  CHECK(all_perms(4).size() == 24);
  CHECK(perm_right_descents(parse_perm(3, "s2 s1")) == std::vector<int>{1});
  CHECK(perm_has_left_descent(parse_perm(3, "s2 s1"), 2));
}

TEST_CASE("random words") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n) {
    std::uniform_int_distribution<int> gen(0, n - 1), tk(-2, 2), len(0, 10);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<int> word(len(rng));
      for (auto& i : word) i = gen(rng);
      ExtAffine w = ExtAffine::from_word(n, tk(rng), word);
      CAPTURE(w.to_string());
      CHECK(w.length() <= int(word.size()));
      CHECK(int(word.size() - w.length()) % 2 == 0);
      CHECK(w * w.inverse() == ExtAffine::identity(n));
      CHECK(w.inverse().length() == w.length());
      auto red = w.reduced_word();
      CHECK(int(red.size()) == w.length());
      CHECK(ExtAffine::from_word(n, w.tau_power(), red) == w);
      CHECK(w.body().length() == w.length());
      CHECK(ExtAffine::tau(n, w.tau_power()) * w.body() == w);
      for (int i = 0; i < n; ++i) {
        CHECK(w.mul_s_right(i) == w * ExtAffine::s(n, i));
        CHECK(w.mul_s_left(i) == ExtAffine::s(n, i) * w);
        CHECK(w.mul_s_right(i).length() == w.length() + (w.has_right_descent(i) ? -1 : 1));
        CHECK(w.mul_s_left(i).length() == w.length() + (w.has_left_descent(i) ? -1 : 1));
      }
      for (int k = -2; k <= 2; ++k)
        CHECK(w.conjugate_tau(k) == ExtAffine::tau(n, k) * w * ExtAffine::tau(n, -k));
      CHECK(ExtAffine::from_window(w.window()) == w);
    }
  }
}

TEST_CASE("braid relations") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 0; i < n; ++i) {
      auto s = [&](int j) { return ExtAffine::s(n, ((j % n) + n) % n); };
      CHECK(s(i) * s(i) == ExtAffine::identity(n));
      CHECK(s(i) * s(i + 1) * s(i) == s(i + 1) * s(i) * s(i + 1));
      if (n > 3) CHECK(s(i) * s(i + 2) == s(i + 2) * s(i));
      CHECK(ExtAffine::tau(n) * s(i) * ExtAffine::tau(n, -1) == s(i + 1));
    }
}

}
