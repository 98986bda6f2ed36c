#include "qaff/nilhecke.hpp"

namespace qaff {

// Products are formed in A ⊗_S A with every scalar kept in front of the left factor:
// (A_u ⊗ A_v)(g A_x ⊗ A_y) = (A_u g A_x) ⊗ (A_v A_y).
TensorElement NilHecke::tensor_mul(const TensorElement& x, const TensorElement& y) const {
  TensorElement r;
  for (auto& [k1, f] : x.terms())
    for (auto& [k2, g] : y.terms()) {
      ExtAffine vy = k1.second * k2.second;
      if (vy.length() != k1.second.length() + k2.second.length()) continue;
      NilHeckeElement left = left_mul_basis(k1.first, NilHeckeElement::basis(k2.first, g));
      for (auto& [z, c] : left.terms()) r.add(z, vy, f * c);
    }
  return r;
}

// Δ(A_i) = A_i ⊗ 1 + 1 ⊗ A_i + α_i A_i ⊗ A_i applied on the left.
TensorElement NilHecke::coproduct_A_times(int i, const TensorElement& t) const {
  i = ((i % n_) + n_) % n_;
  TensorElement r;
  for (auto& [k, g] : t.terms()) {
    NilHeckeElement left = left_mul_A(i, NilHeckeElement::basis(k.first, g));
    for (auto& [z, c] : left.terms()) r.add(z, k.second, c);
    ExtAffine sy = k.second.mul_s_left(i);
    if (sy.length() > k.second.length()) {
      r.add(k.first, sy, g);
      for (auto& [z, c] : left.terms()) r.add(z, sy, alpha_[i] * c);
    }
  }
  return r;
}

TensorElement NilHecke::coproduct_word(int k, const std::vector<int>& word) const {
  ExtAffine id = ExtAffine::identity(n_);
  TensorElement t;
  t.add(id, id, Polynomial(1));
  for (auto it = word.rbegin(); it != word.rend(); ++it) t = coproduct_A_times(*it, t);
  if (k % n_ == 0) return t;
  TensorElement r;
  for (auto& [key, g] : t.terms()) r.add(key.first.mul_tau_left(k), key.second.mul_tau_left(k), act_tau(k, g));
  return r;
}

TensorElement NilHecke::coproduct(const NilHeckeElement& x) const {
  TensorElement r;
  for (auto& [w, c] : x.terms()) r += c * coproduct_word(w.tau_power(), w.reduced_word());
  return r;
}

}  // namespace qaff
