#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qaff/exactalg.hpp"
#include "qaff/weyl.hpp"

namespace qaff {

// Σ_w c_w A_w with coefficients c_w in S (written to the left of A_w).
class NilHeckeElement {
 public:
  using Map = std::map<ExtAffine, Polynomial>;

  NilHeckeElement() = default;
  explicit NilHeckeElement(int n) : n_(n) {}
  static NilHeckeElement basis(const ExtAffine& w, const Polynomial& c = Polynomial(1));
  static NilHeckeElement scalar(int n, const Polynomial& c);
  static NilHeckeElement from_map(int n, Map terms);

  int n() const { return n_; }
  const Map& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(const ExtAffine& w) const;
  void add(const ExtAffine& w, const Polynomial& c);
  int max_length() const;

  NilHeckeElement operator-() const;
  NilHeckeElement& operator+=(const NilHeckeElement& o);
  NilHeckeElement& operator-=(const NilHeckeElement& o);
  friend NilHeckeElement operator+(NilHeckeElement a, const NilHeckeElement& b) { return a += b; }
  friend NilHeckeElement operator-(NilHeckeElement a, const NilHeckeElement& b) { return a -= b; }
  // Left multiplication by a scalar.
  friend NilHeckeElement operator*(const Polynomial& c, const NilHeckeElement& x);
  friend bool operator==(const NilHeckeElement& a, const NilHeckeElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NilHeckeElement& a, const NilHeckeElement& b) { return !(a == b); }

  NilHeckeElement grassmannian_part() const;
  std::string to_string() const;

 private:
  int n_ = 0;
  Map terms_;
};

std::string basis_label(const ExtAffine& w);

// Σ c (A_u ⊗ A_v) in A ⊗_S A, scalars collected on the left.
class TensorElement {
 public:
  using Key = std::pair<ExtAffine, ExtAffine>;
  using Map = std::map<Key, Polynomial>;

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const ExtAffine& u, const ExtAffine& v, const Polynomial& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Polynomial& c, const TensorElement& x);
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }
  std::string to_string() const;

 private:
  Map terms_;
};

// x ⊗ y with all scalars moved to the left.
TensorElement tensor(const NilHeckeElement& x, const NilHeckeElement& y);

// The small-torus extended affine nilHecke algebra for fixed n, acting on S
// at level zero: w·a_j = a_{w(j) mod n}.
class NilHecke {
 public:
  explicit NilHecke(int n);
  NilHecke(const NilHecke&) = delete;
  NilHecke& operator=(const NilHecke&) = delete;

  int n() const { return n_; }
  const SRing& ring() const { return ring_; }

  Polynomial act_group(const ExtAffine& w, const Polynomial& f) const;
  Polynomial act_s(int i, const Polynomial& f) const;
  Polynomial act_tau(int k, const Polynomial& f) const { return ring_.shift(f, k); }
  // A_i·f = (s_i f - f)/α_i.
  Polynomial divided_difference(int i, const Polynomial& f) const;
  Polynomial act_basis(const ExtAffine& w, const Polynomial& f) const;
  Polynomial act(const NilHeckeElement& x, const Polynomial& f) const;

  NilHeckeElement left_mul_A(int i, const NilHeckeElement& y) const;
  NilHeckeElement left_mul_tau(int k, const NilHeckeElement& y) const;
  NilHeckeElement left_mul_basis(const ExtAffine& w, const NilHeckeElement& y) const;
  NilHeckeElement mul(const NilHeckeElement& x, const NilHeckeElement& y) const;
  // Product b·y for b commuting with S: Σ c_u d_v A_u A_v.
  NilHeckeElement mul_centralizing(const NilHeckeElement& b, const NilHeckeElement& y) const;
  // Grassmannian part of b·y for b commuting with S; only the Grassmannian part of y matters.
  NilHeckeElement mul_centralizing_grassmannian(const NilHeckeElement& b, const NilHeckeElement& y) const;
  NilHeckeElement mul_scalar_right(const NilHeckeElement& x, const Polynomial& f) const;
  // A_w a_j, memoized.
  const NilHeckeElement& basis_times_a(const ExtAffine& w, int j) const;
  // a_j x - x a_j.
  NilHeckeElement commutator_with_a(int j, const NilHeckeElement& x) const;
  bool centralizes(const NilHeckeElement& x, std::string* witness = nullptr) const;

  // Image of w ∈ W_e in A_e via s_i = 1 + α_i A_i, along the given word (default: reduced word).
  NilHeckeElement expand_group(const ExtAffine& w) const;
  NilHeckeElement expand_word(int k, const std::vector<int>& word) const;
  // τ^k x τ^{-k}.
  NilHeckeElement twist(const NilHeckeElement& x, int k) const;

  TensorElement coproduct(const NilHeckeElement& x) const;
  // Δ(A_w) computed along τ^k s_{word[0]} ... s_{word[l-1]}.
  TensorElement coproduct_word(int k, const std::vector<int>& word) const;
  TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) const;

 private:
  TensorElement coproduct_A_times(int i, const TensorElement& t) const;
  int n_;
  SRing ring_;
  std::vector<Polynomial> alpha_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::pair<ExtAffine, int>, NilHeckeElement> times_a_;
};

}  // namespace qaff
