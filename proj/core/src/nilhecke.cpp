#include "qaff/nilhecke.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qaff {

// ---- NilHeckeElement ----

NilHeckeElement NilHeckeElement::basis(const ExtAffine& w, const Polynomial& c) {
  NilHeckeElement x(w.n());
  x.add(w, c);
  return x;
}

NilHeckeElement NilHeckeElement::scalar(int n, const Polynomial& c) { return basis(ExtAffine::identity(n), c); }

NilHeckeElement NilHeckeElement::from_map(int n, Map terms) {
  NilHeckeElement x(n);
  for (auto& [w, c] : terms)
    if (!c.is_zero()) x.terms_.emplace(w, std::move(c));
  return x;
}

Polynomial NilHeckeElement::coefficient(const ExtAffine& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Polynomial() : it->second;
}

void NilHeckeElement::add(const ExtAffine& w, const Polynomial& c) {
  if (c.is_zero()) return;
  if (n_ == 0) n_ = w.n();
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int NilHeckeElement::max_length() const {
  int m = -1;
  for (auto& [w, c] : terms_) m = std::max(m, w.length());
  return m;
}

NilHeckeElement NilHeckeElement::operator-() const {
  NilHeckeElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NilHeckeElement& NilHeckeElement::operator+=(const NilHeckeElement& o) {
  for (auto& [w, c] : o.terms_) add(w, c);
  if (n_ == 0) n_ = o.n_;
  return *this;
}

NilHeckeElement& NilHeckeElement::operator-=(const NilHeckeElement& o) {
  for (auto& [w, c] : o.terms_) add(w, -c);
  if (n_ == 0) n_ = o.n_;
  return *this;
}

NilHeckeElement operator*(const Polynomial& c, const NilHeckeElement& x) {
  NilHeckeElement r(x.n_);
  if (c.is_zero()) return r;
  for (auto& [w, d] : x.terms_) r.terms_.emplace(w, c * d);
  return r;
}

NilHeckeElement NilHeckeElement::grassmannian_part() const {
  NilHeckeElement r(n_);
  for (auto& [w, c] : terms_)
    if (w.is_grassmannian()) r.terms_.emplace(w, c);
  return r;
}

std::string basis_label(const ExtAffine& w) {
  std::string s = "A[";
  bool any = false;
  if (w.tau_power() != 0) {
    s += "tau^" + std::to_string(w.tau_power());
    any = true;
  }
  auto word = w.reduced_word();
  if (!word.empty()) {
    if (any) s += "; ";
    for (size_t i = 0; i < word.size(); ++i) s += (i ? " " : "") + std::to_string(word[i]);
    any = true;
  }
  if (!any) s += "id";
  return s + "]";
}

namespace {

std::string scaled(const Polynomial& c, const std::string& label, bool first) {
  std::string s;
  if (c.size() == 1) {
    std::string t = c.to_string();
    bool neg = t[0] == '-';
    if (neg) t = t.substr(1);
    s += neg ? "-" : (first ? "" : "+");
    s += t == "1" ? label : t + "*" + label;
  } else {
    s += (first ? "" : "+");
    s += "(" + c.to_string() + ")*" + label;
  }
  return s;
}

}  // namespace

std::string NilHeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [w, c] : terms_) {
    s += scaled(c, basis_label(w), first);
    first = false;
  }
  return s;
}

// ---- TensorElement ----

void TensorElement::add(const ExtAffine& u, const ExtAffine& v, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({u, v}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorElement operator*(const Polynomial& c, const TensorElement& x) {
  TensorElement r;
  if (c.is_zero()) return r;
  for (auto& [k, d] : x.terms_) r.terms_.emplace(k, c * d);
  return r;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [k, c] : terms_) {
    s += scaled(c, basis_label(k.first) + "(x)" + basis_label(k.second), first);
    first = false;
  }
  return s;
}

TensorElement tensor(const NilHeckeElement& x, const NilHeckeElement& y) {
  TensorElement t;
  for (auto& [u, f] : x.terms())
    for (auto& [v, g] : y.terms()) t.add(u, v, f * g);
  return t;
}

// ---- NilHecke ----

NilHecke::NilHecke(int n) : n_(n), ring_(n) {
  if (n < 2 || n > kMaxRank) throw std::invalid_argument("rank out of range");
  for (int i = 0; i < n; ++i) alpha_.push_back(ring_.alpha(i));
}

Polynomial NilHecke::act_group(const ExtAffine& w, const Polynomial& f) const {
  std::vector<int> perm(n_ + 1);
  bool trivial = true;
  for (int j = 1; j <= n_; ++j) {
    perm[j] = w.residue_image(j);
    trivial = trivial && perm[j] == j;
  }
  return trivial ? f : ring_.permute(f, perm);
}

Polynomial NilHecke::act_s(int i, const Polynomial& f) const {
  i = ((i % n_) + n_) % n_;
  std::vector<int> perm(n_ + 1);
  for (int j = 1; j <= n_; ++j) perm[j] = j;
  int lo = i == 0 ? n_ : i, hi = i == 0 ? 1 : i + 1;
  perm[lo] = hi;
  perm[hi] = lo;
  return ring_.permute(f, perm);
}

Polynomial NilHecke::divided_difference(int i, const Polynomial& f) const {
  i = ((i % n_) + n_) % n_;
  if (f.is_constant()) return {};
  Polynomial d = act_s(i, f) - f;
  return d.divide_exact(alpha_[i]);
}

Polynomial NilHecke::act_basis(const ExtAffine& w, const Polynomial& f) const {
  auto word = w.reduced_word();
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend() && !g.is_zero(); ++it) g = divided_difference(*it, g);
  return act_tau(w.tau_power(), g);
}

Polynomial NilHecke::act(const NilHeckeElement& x, const Polynomial& f) const {
  Polynomial r;
  for (auto& [w, c] : x.terms()) r += c * act_basis(w, f);
  return r;
}

NilHeckeElement NilHecke::left_mul_A(int i, const NilHeckeElement& y) const {
  NilHeckeElement r(n_);
  for (auto& [v, g] : y.terms()) {
    ExtAffine sv = v.mul_s_left(i);
    if (sv.length() > v.length()) r.add(sv, act_s(i, g));
    r.add(v, divided_difference(i, g));
  }
  return r;
}

NilHeckeElement NilHecke::left_mul_tau(int k, const NilHeckeElement& y) const {
  if (k % n_ == 0) return y;
  NilHeckeElement r(n_);
  for (auto& [v, g] : y.terms()) r.add(v.mul_tau_left(k), act_tau(k, g));
  return r;
}

NilHeckeElement NilHecke::left_mul_basis(const ExtAffine& w, const NilHeckeElement& y) const {
  auto word = w.reduced_word();
  NilHeckeElement r = y;
  for (auto it = word.rbegin(); it != word.rend() && !r.is_zero(); ++it) r = left_mul_A(*it, r);
  return left_mul_tau(w.tau_power(), r);
}

NilHeckeElement NilHecke::mul(const NilHeckeElement& x, const NilHeckeElement& y) const {
  NilHeckeElement r(n_);
  for (auto& [w, c] : x.terms()) r += c * left_mul_basis(w, y);
  return r;
}

namespace {

NilHeckeElement collect(int n, std::unordered_map<ExtAffine, PolyAccumulator, ExtAffineHash>& acc) {
  NilHeckeElement::Map m;
  for (auto& [w, a] : acc) {
    Polynomial p = a.finish();
    if (!p.is_zero()) m.emplace(w, std::move(p));
  }
  return NilHeckeElement::from_map(n, std::move(m));
}

}  // namespace

NilHeckeElement NilHecke::mul_centralizing(const NilHeckeElement& b, const NilHeckeElement& y) const {
  std::unordered_map<ExtAffine, PolyAccumulator, ExtAffineHash> acc;
  for (auto& [u, f] : b.terms())
    for (auto& [v, g] : y.terms()) {
      ExtAffine uv = u * v;
      if (uv.length() != u.length() + v.length()) continue;
      acc[uv].add_product(f, g);
    }
  return collect(n_, acc);
}

NilHeckeElement NilHecke::mul_centralizing_grassmannian(const NilHeckeElement& b, const NilHeckeElement& y) const {
  std::unordered_map<ExtAffine, PolyAccumulator, ExtAffineHash> acc;
  for (auto& [v, g] : y.terms()) {
    if (!v.is_grassmannian()) continue;
    for (auto& [u, f] : b.terms()) {
      ExtAffine uv = u * v;
      if (uv.length() != u.length() + v.length() || !uv.is_grassmannian()) continue;
      acc[uv].add_product(f, g);
    }
  }
  return collect(n_, acc);
}

const NilHeckeElement& NilHecke::basis_times_a(const ExtAffine& w, int j) const {
  auto key = std::make_pair(w, j);
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = times_a_.find(key);
    if (it != times_a_.end()) return it->second;
  }
  NilHeckeElement r;
  if (w.tau_power() != 0) {
    r = left_mul_tau(w.tau_power(), basis_times_a(w.body(), j));
  } else if (w.length() == 0) {
    r = NilHeckeElement::basis(w, ring_.a(j));
  } else {
    int i = w.reduced_word().front();
    r = left_mul_A(i, basis_times_a(w.mul_s_left(i), j));
  }
  std::lock_guard<std::mutex> lock(memo_mu_);
  return times_a_.emplace(key, std::move(r)).first->second;
}

NilHeckeElement NilHecke::mul_scalar_right(const NilHeckeElement& x, const Polynomial& f) const {
  NilHeckeElement r(n_);
  if (f.is_constant()) return f * x;
  for (auto& [w, c] : x.terms()) r += c * left_mul_basis(w, NilHeckeElement::scalar(n_, f));
  return r;
}

NilHeckeElement NilHecke::commutator_with_a(int j, const NilHeckeElement& x) const {
  NilHeckeElement r = ring_.a(j) * x;
  for (auto& [w, c] : x.terms()) r -= c * basis_times_a(w, j);
  return r;
}

bool NilHecke::centralizes(const NilHeckeElement& x, std::string* witness) const {
  for (int j = 1; j < n_; ++j) {
    NilHeckeElement c = commutator_with_a(j, x);
    if (!c.is_zero()) {
      if (witness) *witness = "[a_" + std::to_string(j) + ", b] = " + c.to_string();
      return false;
    }
  }
  return true;
}

NilHeckeElement NilHecke::expand_word(int k, const std::vector<int>& word) const {
  NilHeckeElement r = NilHeckeElement::scalar(n_, Polynomial(1));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = ((*it % n_) + n_) % n_;
    r += alpha_[i] * left_mul_A(i, r);
  }
  return left_mul_tau(k, r);
}

NilHeckeElement NilHecke::expand_group(const ExtAffine& w) const {
  return expand_word(w.tau_power(), w.reduced_word());
}

NilHeckeElement NilHecke::twist(const NilHeckeElement& x, int k) const {
  if (k % n_ == 0) return x;
  NilHeckeElement r(n_);
  for (auto& [w, c] : x.terms()) r.add(w.conjugate_tau(k), act_tau(k, c));
  return r;
}

}  // namespace qaff
