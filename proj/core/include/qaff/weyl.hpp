#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qaff {

constexpr int kMaxRank = 8;

using Coweight = std::vector<int>;

// Element τ^k·u of the extended affine Weyl group of type A_{n-1}, stored as an
// affine permutation of Z (w(i+n) = w(i)+n) modulo the central shift i -> i+n.
// Products compose as functions: (uv)(i) = u(v(i)).
class ExtAffine {
 public:
  ExtAffine() = default;
  static ExtAffine identity(int n);
  static ExtAffine from_window(const std::vector<int>& window);
  static ExtAffine s(int n, int i);
  static ExtAffine tau(int n, int k = 1);
  static ExtAffine translation(const Coweight& lambda);
  // w = τ^k s_{word[0]} s_{word[1]} ...
  static ExtAffine from_word(int n, int k, const std::vector<int>& word);
  // c_p = s_{p-1} ... s_1 s_0.
  static ExtAffine cyclic(int n, int p);

  int n() const { return n_; }
  int operator()(int i) const;
  std::vector<int> window() const;
  int length() const { return len_; }
  int tau_power() const { return k_; }
  ExtAffine body() const;
  ExtAffine inverse() const;

  ExtAffine operator*(const ExtAffine& o) const;
  ExtAffine mul_s_right(int i) const;
  ExtAffine mul_s_left(int i) const;
  ExtAffine mul_tau_left(int k) const;
  // τ^k w τ^{-k}.
  ExtAffine conjugate_tau(int k) const;

  bool has_right_descent(int i) const;
  bool has_left_descent(int i) const;
  std::vector<int> right_descents() const;
  // Reduced word of the body: *this = τ^k s_{w[0]} ... s_{w[l-1]}.
  std::vector<int> reduced_word() const;
  bool is_grassmannian() const;
  // Residue of w(j) in 1..n (level-zero action on the a-variables).
  int residue_image(int j) const;

  std::string to_string() const;
  std::string word_string() const;

  friend bool operator==(const ExtAffine& a, const ExtAffine& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
  friend bool operator!=(const ExtAffine& a, const ExtAffine& b) { return !(a == b); }
  // Orders by length, then τ-power, then window.
  friend bool operator<(const ExtAffine& a, const ExtAffine& b);
  size_t hash() const;

 private:
  void normalize();
  int n_ = 0;
  int k_ = 0;
  int len_ = 0;
  std::array<int32_t, kMaxRank> w_{};
};

struct ExtAffineHash {
  size_t operator()(const ExtAffine& w) const { return w.hash(); }
};

// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);
  int size() const;
  int length() const { return int(parts.size()); }
  int operator[](size_t i) const { return i < parts.size() ? parts[i] : 0; }
  Partition transpose() const;
  bool fits_box(int rows, int cols) const { return length() <= rows && (parts.empty() || parts[0] <= cols); }
  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::vector<Partition> partitions_of(int size);
std::vector<Partition> partitions_in_box(int rows, int cols);
// Rectangle R_i = (i^{n-i}).
Partition rectangle(int n, int i);

// Bijection between (n-1)-bounded partitions and Grassmannian elements of W_af,
// via n-cores and residue box additions.
ExtAffine partition_to_grassmannian(const Partition& lambda, int n);
Partition grassmannian_to_partition(const ExtAffine& u);
Partition core_of(const ExtAffine& u);
Partition bounded_of_core(const Partition& core, int n);

// w = τ^k u with u in W_af.
std::pair<int, ExtAffine> factor_sigma(const ExtAffine& w);

// All Grassmannian elements of W_e with length <= maxlen, ordered by (length, τ-power, window).
std::vector<ExtAffine> grassmannian_elements(int n, int maxlen);
// All elements of W_e with the given τ-power and length <= maxlen.
std::vector<ExtAffine> elements_up_to(int n, int k, int maxlen);

Coweight fundamental_coweight(int n, int k);
bool is_antidominant(const Coweight& lambda);

// Parses "tau^2 * s1 s0", "s_1 s_0", "tau c2", "t[1,0,-1]", "[2,0,4]".
ExtAffine parse_ext_affine(int n, std::string_view text);

// Finite permutation in one-line notation (values 1..n).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_longest(int n);
Perm perm_compose(const Perm& u, const Perm& v);
Perm perm_s(int n, int i);
int perm_length(const Perm& w);
std::vector<int> perm_right_descents(const Perm& w);
bool perm_has_left_descent(const Perm& w, int i);
std::vector<Perm> all_perms(int n);
// Parses "s2 s1", "s_2 s_1", "[3,1,2]", "id".
Perm parse_perm(int n, std::string_view text);
std::string perm_to_string(const Perm& w);

}  // namespace qaff
