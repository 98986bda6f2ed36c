#include "qaff/symfunc.hpp"

#include <algorithm>
#include <set>

#include "qaff/matrix.hpp"

namespace qaff {

int y_degree(const Monomial& m) {
  int d = 0;
  for (auto [key, e] : m.factors()) {
    VarId v = VarId::from_key(key);
    if (v.family == Family::EY) d += v.index * int(e);
  }
  return d;
}

TruncatedSeries::TruncatedSeries(Polynomial p, int cutoff) : n_(cutoff) {
  p_ = p.filter([cutoff](const Monomial& m) { return y_degree(m) <= cutoff; });
}

TruncatedSeries TruncatedSeries::e(int j, int cutoff) {
  if (j < 0) return TruncatedSeries(Polynomial(), cutoff);
  if (j == 0) return TruncatedSeries(Polynomial(1), cutoff);
  return TruncatedSeries(Polynomial::var({Family::EY, j}), cutoff);
}

TruncatedSeries TruncatedSeries::h(int j, int cutoff) {
  if (j < 0) return TruncatedSeries(Polynomial(), cutoff);
  std::vector<Polynomial> hs{Polynomial(1)};
  for (int m = 1; m <= j; ++m) {
    Polynomial acc;
    for (int i = 1; i <= m; ++i) {
      Polynomial t = Polynomial::var({Family::EY, i}) * hs[m - i];
      if (i % 2)
        acc += t;
      else
        acc -= t;
    }
    hs.push_back(acc);
  }
  return TruncatedSeries(hs[j], cutoff);
}

Polynomial TruncatedSeries::component(int d) const {
  return p_.filter([d](const Monomial& m) { return y_degree(m) == d; });
}

int TruncatedSeries::min_degree() const {
  int best = -1;
  for (auto& t : p_.terms()) {
    int d = y_degree(t.mono);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r;
  r.n_ = std::min(a.n_, b.n_);
  r.p_ = a.p_ + b.p_;
  if (a.n_ != b.n_) r = TruncatedSeries(r.p_, r.n_);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int cutoff = std::min(a.n_, b.n_);
  PolyAccumulator acc;
  for (auto& s : a.p_.terms()) {
    int ds = y_degree(s.mono);
    if (ds > cutoff) continue;
    for (auto& t : b.p_.terms()) {
      if (ds + y_degree(t.mono) > cutoff) continue;
      acc.add_term(s.mono * t.mono, s.coef * t.coef);
    }
  }
  TruncatedSeries r;
  r.n_ = cutoff;
  r.p_ = acc.finish();
  return r;
}

TruncatedSeries operator*(const Polynomial& c, const TruncatedSeries& s) { return TruncatedSeries(c * s.p_, s.n_); }

TruncatedSeries TruncatedSeries::map_coefficients(const std::function<VarId(VarId)>& f) const {
  return TruncatedSeries(p_.rename([&](VarId v) { return v.family == Family::A ? f(v) : v; }), n_);
}

std::vector<int> TruncatedSeries::a_indices() const {
  std::vector<int> out;
  for (auto v : p_.variables())
    if (v.family == Family::A) out.push_back(v.index);
  std::sort(out.begin(), out.end());
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::string s = p_.to_string();
  return s + " + O(y^" + std::to_string(n_ + 1) + ")";
}

TruncatedSeries tau_shift(const TruncatedSeries& s, int m) {
  if (m == 0) return s;
  return s.map_coefficients([m](VarId v) { return VarId{Family::A, v.index + m}; });
}

TruncatedSeries eta(const TruncatedSeries& s) {
  std::unordered_map<uint32_t, Polynomial> images;
  for (auto v : s.poly().variables())
    if (v.family == Family::A) images.emplace(v.key(), -Polynomial::var(var_a(1 - v.index)));
  return TruncatedSeries(s.poly().substitute(images), s.cutoff());
}

TruncatedSeries omega(const TruncatedSeries& s) {
  std::unordered_map<uint32_t, Polynomial> images;
  for (auto v : s.poly().variables())
    if (v.family == Family::EY) images.emplace(v.key(), TruncatedSeries::h(v.index, s.cutoff()).poly());
  return TruncatedSeries(s.poly().substitute(images), s.cutoff());
}

TruncatedSeries reduce_mod(const TruncatedSeries& s, const SRing& S) {
  std::unordered_map<uint32_t, Polynomial> images;
  for (auto v : s.poly().variables())
    if (v.family == Family::A) images.emplace(v.key(), S.a(v.index));
  return TruncatedSeries(s.poly().substitute(images), s.cutoff());
}

TruncatedSeries classical_limit(const TruncatedSeries& s) {
  return TruncatedSeries(s.poly().filter([](const Monomial& m) {
    for (auto [key, e] : m.factors())
      if (VarId::from_key(key).family == Family::A) return false;
    return true;
  }), s.cutoff());
}

std::string DualSchurName::to_string() const {
  std::string s = "s-hat[";
  for (size_t i = 0; i < lambda.parts.size(); ++i) s += (i ? "," : "") + std::to_string(lambda.parts[i]);
  s += "]";
  if (twist != 0) s += "^tau^" + std::to_string(twist);
  return s;
}

TruncatedSeries SymFunc::dual_e(int j) const {
  if (j < 0) return TruncatedSeries(Polynomial(), n_);
  std::lock_guard<std::mutex> lock(mu_);
  auto a = [](int i) { return Polynomial::var(var_a(i)); };
  while (int(e_hat_.size()) <= j) {
    int r = int(e_hat_.size());
    TruncatedSeries num(Polynomial(), n_), den(Polynomial(), n_);
    {
      Polynomial lhs, rhs;
      for (int k = 0; k <= n_; ++k) {
        lhs += (-a(r)).pow(k) * TruncatedSeries::e(k, n_).poly();
        rhs += a(0).pow(k) * TruncatedSeries::h(k, n_).poly();
      }
      num = TruncatedSeries(lhs, n_) * TruncatedSeries(rhs, n_);
    }
    for (int jj = 0; jj < r; ++jj) {
      Polynomial c(1);
      for (int i = 0; i < jj; ++i) c *= a(i) - a(r);
      num = num - c * e_hat_[jj];
    }
    Polynomial lead(1);
    for (int i = 0; i < r; ++i) lead *= a(i) - a(r);
    e_hat_.emplace_back(num.poly().divide_exact(lead), n_);
  }
  return e_hat_[j];
}

TruncatedSeries SymFunc::dual_h(int j) const {
  if (j < 0) return TruncatedSeries(Polynomial(), n_);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = h_hat_.find(j);
    if (it != h_hat_.end()) return it->second;
  }
  TruncatedSeries r = omega(eta(dual_e(j)));
  std::lock_guard<std::mutex> lock(mu_);
  return h_hat_.emplace(j, r).first->second;
}

namespace {

TruncatedSeries series_det(const Matrix<TruncatedSeries>& m, int cutoff) {
  return det(m, TruncatedSeries(Polynomial(), cutoff), TruncatedSeries(Polynomial(1), cutoff));
}

}  // namespace

TruncatedSeries SymFunc::dual_schur_h(const Partition& lambda) const {
  int l = lambda.length();
  Matrix<TruncatedSeries> m(l, std::vector<TruncatedSeries>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = dual_h(lambda[i - 1] - i + j, j - 1);
  return series_det(m, n_);
}

TruncatedSeries SymFunc::dual_schur_e(const Partition& lambda) const {
  Partition t = lambda.transpose();
  int l = t.length();
  Matrix<TruncatedSeries> m(l, std::vector<TruncatedSeries>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = dual_e(t[i - 1] - i + j, 1 - j);
  return series_det(m, n_);
}

TruncatedSeries SymFunc::dual_schur(const Partition& lambda) const {
  if (lambda.size() > n_) throw std::invalid_argument("partition larger than the truncation degree");
  TruncatedSeries viah = dual_schur_h(lambda);
  TruncatedSeries viae = dual_schur_e(lambda);
  if (viah != viae)
    throw DeterminantMismatch("Jacobi-Trudi determinants differ for " + lambda.to_string() + ": " +
                              viah.to_string() + " vs " + viae.to_string());
  return viah;
}

TruncatedSeries SymFunc::resolve(const DualSchurName& name) const { return tau_shift(dual_schur(name.lambda), name.twist); }

TruncatedSeries SymFunc::special_determinant(const Partition& lambda, int k) const {
  if (lambda.length() > k) throw std::invalid_argument("partition has more than k rows");
  Matrix<TruncatedSeries> m(k, std::vector<TruncatedSeries>(k));
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) m[i - 1][j - 1] = dual_e(lambda[i - 1] - i + j, 1 - j);
  return series_det(m, n_);
}

TruncatedSeries SymFunc::schur(const Partition& lambda) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = schur_.find(lambda);
    if (it != schur_.end()) return it->second;
  }
  int l = lambda.length();
  Matrix<TruncatedSeries> m(l, std::vector<TruncatedSeries>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) m[i - 1][j - 1] = TruncatedSeries::h(lambda[i - 1] - i + j, n_);
  TruncatedSeries r = series_det(m, n_);
  std::lock_guard<std::mutex> lock(mu_);
  return schur_.emplace(lambda, r).first->second;
}

DualSchurName kdouble_small(const Partition& lambda, int n) {
  if (lambda.length() + lambda[0] > n)
    throw std::invalid_argument("main hook of " + lambda.to_string() + " exceeds n-1 = " + std::to_string(n - 1));
  return DualSchurName{lambda, 0};
}

}  // namespace qaff
