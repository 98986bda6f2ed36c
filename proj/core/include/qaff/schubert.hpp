#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "qaff/exactalg.hpp"
#include "qaff/weyl.hpp"

namespace qaff {

// C_m: diagonal x_1..x_m, superdiagonal -1, subdiagonal q_1..q_{m-1}.
Matrix<Polynomial> tridiagonal(int m);

// g_{1,n}..g_{n,n} with det(C_n - z) = Σ_j (-z)^{n-j} g_{j,n}.
std::vector<Polynomial> basic_invariants(int n);

// g_{j,n} - e_j(a) for j = 1..n, reduced in S.
std::vector<Polynomial> kim_ideal_generators(const SRing& S);

// ∂_i^a = (a_i - a_{i+1})^{-1}(1 - s_i^a).
Polynomial divided_difference_a(const SRing& S, int i, const Polynomial& p);

// Index vectors (i_1, ..., i_{n-1}) with 0 <= i_j <= j of the standard elementary monomials
// e^{(1)}_{i_1} ... e^{(n-1)}_{i_{n-1}}, e^{(j)}_i = e_i(x_1..x_j).
std::vector<std::vector<int>> standard_elementary_indices(int n);

using ElementaryExpansion = std::map<std::vector<int>, Polynomial>;

// Expansion of p ∈ S[x_1..x_{n-1}] (x_k-degree <= n-k, no q) in standard elementary monomials;
// nullopt when p lies outside their span.
std::optional<ElementaryExpansion> standard_elementary_expansion(const Polynomial& p, int n);

// Σ_I c_I E_I with E^{(j)}_i = g_{i,j} the quantum elementary polynomials.
Polynomial quantize(const ElementaryExpansion& c, int n);

struct SchubertOptions {
  bool quantum = true;
  // Negative control: uses +∂_i^a in place of -∂_i^a.
  bool flip_recursion_sign = false;
};

// Quantum (or classical) double Schubert polynomials over S[x;q], obtained from
// the top class by S_w = -∂_i^a S_{s_i w} along the smallest left ascent.
class SchubertFamily {
 public:
  explicit SchubertFamily(const SRing& S, SchubertOptions opts = {});

  const SRing& ring() const { return S_; }
  const Polynomial& top() const { return top_; }
  Polynomial operator()(const Perm& w) const;
  // The same recursion along the largest left ascent, without memoization.
  Polynomial along_largest_ascent(const Perm& w) const;

 private:
  const SRing& S_;
  SchubertOptions opts_;
  Polynomial top_;
  mutable std::mutex mu_;
  mutable std::map<Perm, Polynomial> memo_;
};

}  // namespace qaff
