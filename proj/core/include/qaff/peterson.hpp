#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaff/nilhecke.hpp"

namespace qaff {

class CutoffTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotCentral : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An element of the Peterson subalgebra B_e (the centralizer of S in A_e).
class PetersonElement {
 public:
  PetersonElement() = default;
  // Checks [a_j, x] = 0 for j = 1..n-1; throws NotCentral with a witness otherwise.
  static PetersonElement certify(const NilHecke& H, NilHeckeElement x);
  // For results of operations that preserve B_e (sums, products, twists).
  static PetersonElement trusted(NilHeckeElement x) {
    PetersonElement p;
    p.x_ = std::move(x);
    return p;
  }

  const NilHeckeElement& element() const { return x_; }
  int n() const { return x_.n(); }
  bool is_zero() const { return x_.is_zero(); }
  PetersonElement operator-() const { return trusted(-x_); }
  friend PetersonElement operator+(const PetersonElement& a, const PetersonElement& b) { return trusted(a.x_ + b.x_); }
  friend PetersonElement operator-(const PetersonElement& a, const PetersonElement& b) { return trusted(a.x_ - b.x_); }
  friend PetersonElement operator*(const Polynomial& c, const PetersonElement& b) { return trusted(c * b.x_); }
  friend bool operator==(const PetersonElement& a, const PetersonElement& b) { return a.x_ == b.x_; }
  friend bool operator!=(const PetersonElement& a, const PetersonElement& b) { return !(a == b); }
  std::string to_string() const { return x_.to_string(); }

 private:
  NilHeckeElement x_;
};

// numerator / ∏ denominators, compared by cross-multiplication in B_e.
struct LocalizedPetersonElement {
  PetersonElement numerator;
  std::vector<PetersonElement> denominators;
};

struct PositivityEntry {
  ExtAffine w;
  bool extended = false;  // τ-power ≠ 0
  bool positive = true;
  std::string witness;
};

struct PositivityReport {
  int n = 0;
  int maxlen = 0;
  std::vector<PositivityEntry> entries;
  int violations(bool extended) const;
};

struct PetersonOptions {
  // Negative control: flips the sign of the (a_{k-1} - a_{k+p}) term in the recursion.
  bool flip_recursion_sign = false;
};

class Peterson {
 public:
  explicit Peterson(const NilHecke& H, PetersonOptions opts = {});
  Peterson(const Peterson&) = delete;
  Peterson& operator=(const Peterson&) = delete;

  const NilHecke& algebra() const { return H_; }
  int n() const { return H_.n(); }

  PetersonElement one() const;
  PetersonElement zero() const;
  // Translation group element t_λ (central under the level-zero action).
  PetersonElement translation(const Coweight& lambda) const;
  PetersonElement mul(const PetersonElement& a, const PetersonElement& b) const;
  PetersonElement pow(const PetersonElement& a, int e) const;
  // Grassmannian part of a_1 a_2 ... a_m, multiplying right to left with truncation.
  NilHeckeElement mul_grassmannian(const std::vector<PetersonElement>& factors) const;
  bool equal(const LocalizedPetersonElement& x, const LocalizedPetersonElement& y) const;

  // j_{t_λ} = Σ_{μ ∈ W·λ} A_{t_μ} for antidominant λ.
  PetersonElement j_translation(const Coweight& lambda) const;
  // j_{τ^k} = t_{ω_k}.
  PetersonElement j_tau(int k) const;
  // j_{τ^k c_p} for 0 <= k, k + p <= n, p <= n-1.
  PetersonElement j_tau_c(int k, int p) const;
  PetersonElement j_twist(const PetersonElement& b, int k) const;
  // j_{w_λ} = det(j_{c_{λ_i - i + j}}^{τ^{1-j}}), a k×k determinant with ℓ(λ) <= k.
  PetersonElement j_partition(const Partition& lambda, int k) const;
  // Linear-solve oracle over support {x : ℓ(w) <= ℓ(x) <= cutoff}.
  PetersonElement j_solve(const ExtAffine& w, int cutoff) const;
  // j_solve with the smallest consistent cutoff >= ℓ(w); memoized.
  PetersonElement j(const ExtAffine& w) const;
  // j_w assembled from j_tau_c, j_partition, twists and antidominant translations;
  // `route` receives the construction used.
  PetersonElement j_construct(const ExtAffine& w, std::string* route = nullptr) const;

  // Grassmannian coefficients of x: the j-basis expansion when x ∈ B_e.
  std::map<ExtAffine, Polynomial> gr_coefficients(const NilHeckeElement& x) const;
  PetersonElement gr(const NilHeckeElement& x) const;
  std::map<ExtAffine, Polynomial> structure_constants(const ExtAffine& u, const ExtAffine& v) const;

  // Tests (-1)^{ℓ(x)-ℓ(w)} j_w^x ∈ Z_{>=0}[α_1..α_{n-1}] for all Grassmannian w with ℓ(w) <= maxlen.
  PositivityReport positivity_scan(int maxlen) const;
  // Rewrites a reduced polynomial in a_1..a_{n-1} in the simple roots α_i (variables alpha_i).
  Polynomial to_simple_roots(const Polynomial& p) const;
  bool graham_positive(const Polynomial& p) const;

 private:
  const NilHecke& H_;
  PetersonOptions opts_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, PetersonElement> tau_c_;
  mutable std::map<ExtAffine, PetersonElement> solved_;
  std::unordered_map<uint32_t, Polynomial> to_alpha_;
};

}  // namespace qaff
