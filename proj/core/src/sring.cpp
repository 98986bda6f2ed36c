#include "qaff/sring.hpp"

#include <stdexcept>

namespace qaff {

namespace {
constexpr uint32_t kPrecomputedPowers = 32;
}

SRing::SRing(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SRing needs n >= 1");
  Polynomial minus_sum;
  for (int i = 1; i < n; ++i) minus_sum -= Polynomial::var(var_a(i));
  powers_.push_back(Polynomial(1));
  for (uint32_t e = 1; e <= kPrecomputedPowers; ++e) powers_.push_back(powers_.back() * minus_sum);
}

const Polynomial& SRing::eliminated_power(uint32_t e) const {
  if (e >= powers_.size()) throw std::out_of_range("degree too large for SRing reduction");
  return powers_[e];
}

Polynomial SRing::a(int i) const {
  int r = residue(i);
  return r == n_ ? powers_[1] : Polynomial::var(var_a(r));
}

Polynomial SRing::reduce(const Polynomial& p) const {
  if (is_reduced(p)) return p;
  PolyAccumulator acc;
  for (auto& t : p.terms()) {
    Monomial rest;
    uint32_t en = 0;
    for (auto& [k, e] : t.mono.factors()) {
      VarId v = VarId::from_key(k);
      if (v.family == Family::A) {
        int r = residue(v.index);
        if (r == n_)
          en += e;
        else
          rest = rest * Monomial::var(var_a(r), e);
      } else {
        rest = rest * Monomial::var(v, e);
      }
    }
    if (en == 0)
      acc.add_term(rest, t.coef);
    else
      acc.add(eliminated_power(en).mul_monomial(rest, t.coef));
  }
  return acc.finish();
}

bool SRing::is_reduced(const Polynomial& p) const {
  for (auto& t : p.terms())
    for (auto& f : t.mono.factors()) {
      VarId v = VarId::from_key(f.first);
      if (v.family == Family::A && (v.index < 1 || v.index >= n_)) return false;
    }
  return true;
}

Polynomial SRing::permute(const Polynomial& p, const std::vector<int>& perm) const {
  return reduce(p.rename([&](VarId v) {
    if (v.family == Family::A) return var_a(perm[residue(v.index)]);
    return v;
  }));
}

Polynomial SRing::shift(const Polynomial& p, int k) const {
  if (k % n_ == 0) return p;
  return reduce(p.rename([&](VarId v) {
    if (v.family == Family::A) return var_a(residue(v.index + k));
    return v;
  }));
}

Polynomial SRing::elementary(int j) const {
  std::vector<Polynomial> e(n_ + 1);
  e[0] = Polynomial(1);
  for (int i = 1; i <= n_; ++i)
    for (int r = i; r >= 1; --r) e[r] += e[r - 1] * Polynomial::var(var_a(i));
  if (j < 0 || j > n_) return {};
  return reduce(e[j]);
}

}  // namespace qaff
