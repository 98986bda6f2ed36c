#pragma once

#include <vector>

#include "qaff/polynomial.hpp"

namespace qaff {

// S = Q[a_1..a_n]/(a_1+...+a_n), represented by eliminating a_n. Indices of a
// are read modulo n with a_0 = a_n.
class SRing {
 public:
  explicit SRing(int n);

  int n() const { return n_; }
  int residue(int i) const { return ((i - 1) % n_ + n_) % n_ + 1; }
  Polynomial a(int i) const;
  // α_i = a_i - a_{i+1}; α_0 = a_n - a_1.
  Polynomial alpha(int i) const { return a(i) - a(i + 1); }
  Polynomial alpha(int i, int j) const { return a(i) - a(j); }
  Polynomial reduce(const Polynomial& p) const;
  bool is_reduced(const Polynomial& p) const;
  // Image of p under a_j -> a_{perm[j]} for j = 1..n (perm[0] unused); p must be reduced.
  Polynomial permute(const Polynomial& p, const std::vector<int>& perm) const;
  // a_j -> a_{j+k}.
  Polynomial shift(const Polynomial& p, int k) const;
  // Elementary symmetric polynomial e_j(a_1..a_n), reduced.
  Polynomial elementary(int j) const;

 private:
  const Polynomial& eliminated_power(uint32_t e) const;
  int n_;
  mutable std::vector<Polynomial> powers_;
};

}  // namespace qaff
