#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qaff/peterson.hpp"
#include "qaff/schubert.hpp"

namespace qaff {

struct CentralizerOptions {
  // Negative control: z_ij = z_{i-1,j-1} - (a_{i-1} - a_j) z_{i-1,j}.
  bool flip_recursion_sign = false;
};

// N / ∏_i D_i^{e_i}, the shape of every Ψ-image.
struct DFraction {
  Polynomial num;
  std::vector<int> exps;  // indexed by i = 0..n
};

// The centralizer family in y-coordinates: y_11 = 1, y_{1,1+p} = g_p, rows 2..n
// from z_ij = z_{i-1,j-1} + (a_{i-1} - a_j) z_{i-1,j}.
class Centralizer {
 public:
  explicit Centralizer(const SRing& S, CentralizerOptions opts = {});
  Centralizer(const Centralizer&) = delete;
  Centralizer& operator=(const Centralizer&) = delete;

  int n() const { return S_.n(); }
  const SRing& ring() const { return S_; }
  // Sign of the (a_{i-1} - a_j) term in the recursion.
  int recursion_sign() const { return opts_.flip_recursion_sign ? -1 : 1; }

  // 1-based; zero below the diagonal.
  const Polynomial& entry(int i, int j) const { return z_[i - 1][j - 1]; }
  const Matrix<Polynomial>& matrix() const { return z_; }
  // The same family normalized by z_nn = 1, last column (g_{n-1}, ..., g_1, 1).
  Matrix<Polynomial> lower_chart() const;

  // Determinant of the first `rows` rows and the given 1-based columns.
  Polynomial minor_at(int rows, const std::vector<int>& cols) const;
  // z_{λ,k}: first k rows, columns λ_k + 1, λ_{k-1} + 2, ..., λ_1 + k.
  Polynomial minor(const Partition& lambda, int k) const;
  static std::vector<int> minor_columns(const Partition& lambda, int k);
  static Partition R(int n, int i);
  static Partition R_prime(int n, int i);
  // D_i = z_{R_i, n-i} for 0 <= i <= n.
  Polynomial D(int i) const;
  // D_i' = z_{R_i - 1, n-i} for 1 <= i <= n-1.
  Polynomial D_prime(int i) const;
  // Entries of u^{-1} below the diagonal.
  RationalFunction u_inv(int i, int j) const;

  // Kostant images: x_1 + ... + x_i and q_i.
  RationalFunction psi_partial_sum(int i) const;
  RationalFunction psi_q(int i) const;
  // Ψ on S[x;q], with denominators kept as powers of D_i.
  DFraction psi_fraction(const Polynomial& p) const;
  RationalFunction apply_psi(const Polynomial& p) const;
  // Ψ(p)·∏_{i ∈ extra} D_i as an exact polynomial; throws NotDivisible otherwise.
  Polynomial psi_times(const Polynomial& p, const std::vector<int>& extra) const;
  // Removes every D_i factor that divides the numerator.
  DFraction cancel(DFraction f) const;
  RationalFunction to_rational(const DFraction& f) const;

 private:
  // Substitutes x and q term by term over a common denominator.
  DFraction psi_fraction_direct(const Polynomial& p) const;
  // Expands p in standard quantum elementary monomials, whose images have denominators D_j.
  std::optional<DFraction> psi_fraction_elementary(const Polynomial& p) const;
  const DFraction& elementary_product(const std::vector<int>& I) const;
  // (A_i D_i + D_i')^e, the numerator of Ψ(x_1 + ... + x_i)^e.
  const Polynomial& partial_sum_power(int i, uint32_t e) const;
  const Polynomial& D_power(int i, int e) const;

  const SRing& S_;
  CentralizerOptions opts_;
  Matrix<Polynomial> z_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, std::vector<int>>, Polynomial> minors_;
  mutable std::map<std::pair<int, int>, Polynomial> d_powers_;
  mutable std::map<int, std::vector<Polynomial>> sum_powers_;
  mutable std::map<std::vector<int>, DFraction> elementary_products_;
};

// The map φ̃ from y-coordinate expressions to the Peterson algebra:
// φ̃(z_ij) = j_{τ^i c_{j-i}} t_{-ω_{i-1}}, and g_p = z_{1,1+p}/z_11 with φ̃(z_11) = t_{ω_1}.
class PhiTilde {
 public:
  PhiTilde(const Peterson& P, const Centralizer& C);

  const Peterson& peterson() const { return P_; }
  PetersonElement entry(int i, int j) const;
  // φ̃ of the minor as a determinant over B_e.
  PetersonElement minor(const Partition& lambda, int k) const;
  // Grassmannian part of the same determinant, truncating after each product.
  NilHeckeElement minor_grassmannian(const Partition& lambda, int k) const;
  // Grassmannian part of φ̃(z_11^d · p(g)) for p a polynomial in a and g of g-degree <= d.
  NilHeckeElement homogeneous_image(const Polynomial& p, int d) const;
  // Checks the φ̃-images of the entries (computed by the linear-solve oracle) satisfy
  // the centralizer's recursion in B_e.
  bool check_recursion(std::string* witness) const;

 private:
  const Peterson& P_;
  const Centralizer& C_;
};

}  // namespace qaff
