#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaff/polynomial.hpp"
#include "qaff/sring.hpp"
#include "qaff/weyl.hpp"

namespace qaff {

class DeterminantMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Element of the completed symmetric series ring, truncated at y-degree N.
// Stored as a polynomial in e_j[y] (family EY, deg e_j = j) whose coefficients
// are polynomials in a_i, i ∈ Z (family A, indices not reduced).
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(Polynomial p, int cutoff);

  static TruncatedSeries constant(const Polynomial& c, int cutoff) { return TruncatedSeries(c, cutoff); }
  static TruncatedSeries e(int j, int cutoff);
  static TruncatedSeries h(int j, int cutoff);

  int cutoff() const { return n_; }
  const Polynomial& poly() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  // Homogeneous component of y-degree d.
  Polynomial component(int d) const;
  int min_degree() const;

  TruncatedSeries operator-() const { return TruncatedSeries(-p_, n_); }
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Polynomial& c, const TruncatedSeries& s);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.p_ == b.p_; }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  // Maps on coefficients only.
  TruncatedSeries map_coefficients(const std::function<VarId(VarId)>& f) const;
  std::vector<int> a_indices() const;
  std::string to_string() const;

 private:
  int n_ = 8;
  Polynomial p_;
};

int y_degree(const Monomial& m);

TruncatedSeries tau_shift(const TruncatedSeries& s, int m = 1);
TruncatedSeries eta(const TruncatedSeries& s);
TruncatedSeries omega(const TruncatedSeries& s);
// a_i -> a_{i mod n} followed by reduction in S.
TruncatedSeries reduce_mod(const TruncatedSeries& s, const SRing& S);
// Sets every a_i to zero.
TruncatedSeries classical_limit(const TruncatedSeries& s);

// ŝ_λ^{τ^m}.
struct DualSchurName {
  Partition lambda;
  int twist = 0;
  std::string to_string() const;
};

class SymFunc {
 public:
  explicit SymFunc(int cutoff = 8) : n_(cutoff) {}
  SymFunc(const SymFunc&) = delete;
  SymFunc& operator=(const SymFunc&) = delete;

  int cutoff() const { return n_; }
  // ê_j(y‖a), from Σ_{j≤r} ê_j ∏_{i<j}(a_i - a_r) = ∏(1 - a_r y)/(1 - a_0 y).
  TruncatedSeries dual_e(int j) const;
  // ĥ_j = (ê_j)^{ωη}.
  TruncatedSeries dual_h(int j) const;
  TruncatedSeries dual_e(int j, int twist) const { return tau_shift(dual_e(j), twist); }
  TruncatedSeries dual_h(int j, int twist) const { return tau_shift(dual_h(j), twist); }

  // det(ĥ^{τ^{j-1}}_{λ_i-i+j}) over ℓ(λ) rows.
  TruncatedSeries dual_schur_h(const Partition& lambda) const;
  // det(ê^{τ^{1-j}}_{λ^t_i-i+j}) over λ_1 rows.
  TruncatedSeries dual_schur_e(const Partition& lambda) const;
  // Both determinants; throws DeterminantMismatch if they differ.
  TruncatedSeries dual_schur(const Partition& lambda) const;
  TruncatedSeries resolve(const DualSchurName& name) const;
  // det(ê^{τ^{1-j}}_{λ_i-i+j}) over k rows, k >= ℓ(λ).
  TruncatedSeries special_determinant(const Partition& lambda, int k) const;

  // Textbook Schur function det(h_{λ_i-i+j}[y]).
  TruncatedSeries schur(const Partition& lambda) const;

 private:
  int n_;
  mutable std::mutex mu_;
  mutable std::vector<TruncatedSeries> e_hat_;
  mutable std::map<int, TruncatedSeries> h_hat_;
  mutable std::map<Partition, TruncatedSeries> schur_;
};

// Label for s^{(k)}_λ(y‖a) with main hook length <= n-1; throws std::invalid_argument otherwise.
DualSchurName kdouble_small(const Partition& lambda, int n);

}  // namespace qaff
