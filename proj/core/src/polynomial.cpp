#include "qaff/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qaff {

std::string VarId::name() const {
  static const char* const kNames[] = {"a", "g", "q", "x", "ehat", "e", "alpha"};
  std::string s = kNames[int(family)];
  s += '_';
  if (index < 0)
    s += "{" + std::to_string(index) + "}";
  else
    s += std::to_string(index);
  return s;
}

std::string rational_to_string(const Rational& c) { return c.get_str(); }

// ---- Monomial ----

Monomial Monomial::var(VarId v, uint32_t e) {
  Monomial m;
  if (e > 0) m.f_.emplace_back(v.key(), e);
  return m;
}

uint32_t Monomial::degree() const {
  uint32_t d = 0;
  for (auto& [k, e] : f_) d += e;
  return d;
}

uint32_t Monomial::exponent(uint32_t key) const {
  for (auto& [k, e] : f_)
    if (k == key) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  size_t i = 0, j = 0;
  while (i < f_.size() && j < o.f_.size()) {
    if (f_[i].first == o.f_[j].first) {
      r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i, ++j;
    } else if (f_[i].first < o.f_[j].first) {
      r.f_.push_back(f_[i++]);
    } else {
      r.f_.push_back(o.f_[j++]);
    }
  }
  for (; i < f_.size(); ++i) r.f_.push_back(f_[i]);
  for (; j < o.f_.size(); ++j) r.f_.push_back(o.f_[j]);
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  size_t j = 0;
  for (auto& [k, e] : f_) {
    while (j < o.f_.size() && o.f_[j].first < k) ++j;
    if (j == o.f_.size() || o.f_[j].first != k || o.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& o) const {
  Monomial r;
  size_t i = 0;
  for (auto& [k, e] : o.f_) {
    while (i < f_.size() && f_[i].first < k) ++i;
    uint32_t sub = (i < f_.size() && f_[i].first == k) ? f_[i].second : 0;
    if (e > sub) r.f_.emplace_back(k, e - sub);
  }
  return r;
}

Monomial Monomial::without(uint32_t key) const {
  Monomial r;
  for (auto& f : f_)
    if (f.first != key) r.f_.push_back(f);
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (auto& [k, e] : f_) {
    if (!s.empty()) s += '*';
    s += VarId::from_key(k).name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

size_t Monomial::hash() const {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto& [k, e] : f_) {
    h ^= (size_t(k) * 0x100000001b3ULL + e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int compare(const Monomial& a, const Monomial& b) {
  uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  size_t n = std::min(a.f_.size(), b.f_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.f_[i].first != b.f_[i].first) return a.f_[i].first < b.f_[i].first ? 1 : -1;
    if (a.f_[i].second != b.f_[i].second) return a.f_[i].second < b.f_[i].second ? -1 : 1;
  }
  if (a.f_.size() != b.f_.size()) return a.f_.size() < b.f_.size() ? -1 : 1;
  return 0;
}

// ---- Polynomial ----

namespace {

bool desc(const Term& x, const Term& y) { return compare(x.mono, y.mono) > 0; }

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial(), Rational(c)});
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

Polynomial Polynomial::var(VarId v, uint32_t e) { return monomial(Monomial::var(v, e)); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  p.normalize_sorted();
  return p;
}

void Polynomial::normalize_sorted() {
  std::sort(terms_.begin(), terms_.end(), desc);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

uint32_t Polynomial::total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

uint32_t Polynomial::degree_in(uint32_t key) const {
  uint32_t d = 0;
  for (auto& t : terms_) d = std::max(d, t.mono.exponent(key));
  return d;
}

std::vector<VarId> Polynomial::variables() const {
  std::set<uint32_t> keys;
  for (auto& t : terms_)
    for (auto& f : t.mono.factors()) keys.insert(f.first);
  std::vector<VarId> out;
  for (auto k : keys) out.push_back(VarId::from_key(k));
  return out;
}

bool Polynomial::uses_family(Family f) const {
  for (auto& t : terms_)
    for (auto& fa : t.mono.factors())
      if (VarId::from_key(fa.first).family == f) return true;
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coef = -out.back().coef;
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.mul_monomial(a.terms_[0].mono, a.terms_[0].coef);
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].mono, b.terms_[0].coef);
  PolyAccumulator acc;
  acc.add_product(a, b);
  return acc.finish();
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return compare(t.mono, x) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

std::vector<Polynomial> Polynomial::coefficients_in(uint32_t key) const {
  std::vector<std::vector<Term>> buckets(degree_in(key) + 1);
  for (auto& t : terms_) {
    uint32_t e = t.mono.exponent(key);
    buckets[e].push_back({e ? t.mono.without(key) : t.mono, t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients_in(uint32_t key, const std::vector<Polynomial>& cs) {
  std::vector<Term> terms;
  VarId v = VarId::from_key(key);
  for (size_t d = 0; d < cs.size(); ++d) {
    Monomial m = Monomial::var(v, uint32_t(d));
    for (auto& t : cs[d].terms_) terms.push_back({t.mono * m, t.coef});
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::substitute(const std::unordered_map<uint32_t, Polynomial>& images) const {
  std::map<std::pair<uint32_t, uint32_t>, Polynomial> powers;
  auto power = [&](uint32_t key, uint32_t e) -> const Polynomial& {
    auto it = powers.find({key, e});
    if (it != powers.end()) return it->second;
    const Polynomial& base = images.at(key);
    Polynomial p = e == 1 ? base : base.pow(e);
    return powers.emplace(std::make_pair(key, e), std::move(p)).first->second;
  };
  PolyAccumulator acc;
  for (auto& t : terms_) {
    Monomial rest;
    Polynomial factor(t.coef);
    for (auto& [k, e] : t.mono.factors()) {
      if (images.count(k))
        factor = factor * power(k, e);
      else
        rest.f_.emplace_back(k, e);
    }
    if (rest.is_one())
      acc.add(factor);
    else
      acc.add(factor.mul_monomial(rest, 1));
  }
  return acc.finish();
}

Polynomial Polynomial::rename(const std::function<VarId(VarId)>& f) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (auto& t : terms_) {
    Monomial m;
    for (auto& [k, e] : t.mono.factors()) m = m * Monomial::var(f(VarId::from_key(k)), e);
    terms.push_back({std::move(m), t.coef});
  }
  return from_terms(std::move(terms));
}

Polynomial Polynomial::filter(const std::function<bool(const Monomial&)>& keep) const {
  Polynomial r;
  for (auto& t : terms_)
    if (keep(t.mono)) r.terms_.push_back(t);
  return r;
}

Rational Polynomial::evaluate(const std::unordered_map<uint32_t, Rational>& point) const {
  Rational sum = 0;
  for (auto& t : terms_) {
    Rational v = t.coef;
    for (auto& [k, e] : t.mono.factors()) {
      const Rational& x = point.at(k);
      for (uint32_t i = 0; i < e; ++i) v *= x;
    }
    sum += v;
  }
  return sum;
}

bool Polynomial::try_divide(const Polynomial& q, Polynomial& quotient) const {
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  quotient = Polynomial();
  if (is_zero()) return true;
  const Term& lq = q.leading();
  if (q.size() == 1) {
    Rational inv = 1 / lq.coef;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!lq.mono.divides(t.mono)) return false;
      out.push_back({lq.mono.cofactor_in(t.mono), t.coef * inv});
    }
    quotient.terms_ = std::move(out);
    return true;
  }
  if (!lq.mono.divides(leading().mono)) return false;
  auto cmp = [](const Monomial& x, const Monomial& y) { return compare(x, y) > 0; };
  std::map<Monomial, Rational, decltype(cmp)> rem(cmp);
  for (auto& t : terms_) rem.emplace(t.mono, t.coef);
  Rational inv = 1 / lq.coef;
  std::vector<Term> out;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lq.mono.divides(it->first)) return false;
    Monomial m = lq.mono.cofactor_in(it->first);
    Rational c = it->second * inv;
    rem.erase(it);
    for (size_t i = 1; i < q.terms_.size(); ++i) {
      Monomial mm = q.terms_[i].mono * m;
      auto [pos, inserted] = rem.try_emplace(std::move(mm), 0);
      pos->second -= c * q.terms_[i].coef;
      if (pos->second == 0) rem.erase(pos);
    }
    out.push_back({std::move(m), std::move(c)});
  }
  quotient.terms_ = std::move(out);
  return true;
}

Polynomial Polynomial::divide_exact(const Polynomial& q) const {
  Polynomial r;
  if (!try_divide(q, r)) throw NotDivisible("(" + to_string() + ") is not divisible by (" + q.to_string() + ")");
  return r;
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& q) { return p.divide_exact(q); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading().coef);
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : terms_) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg)
      s += "-";
    else if (!first)
      s += "+";
    first = false;
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += t.mono.to_string();
    }
  }
  return s;
}

size_t Polynomial::hash() const {
  size_t h = terms_.size();
  for (auto& t : terms_) {
    h ^= t.mono.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::string>()(t.coef.get_str()) + (h << 3);
  }
  return h;
}

// ---- gcd ----

namespace {

uint32_t pick_main_variable(const Polynomial& a) {
  // Variable of smallest positive degree keeps the remainder sequence short.
  uint32_t best = 0, best_deg = UINT32_MAX;
  for (auto v : a.variables()) {
    uint32_t d = a.degree_in(v);
    if (d < best_deg) best = v.key(), best_deg = d;
  }
  return best;
}

Polynomial content_in(const Polynomial& p, uint32_t key) {
  auto cs = p.coefficients_in(key);
  Polynomial g;
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

// Scales p to integer coefficients with no common factor and positive leading coefficient.
Polynomial integer_primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1, num = 0;
  for (auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (p.leading().coef < 0) scale = -scale;
  return p * scale;
}

Polynomial primitive_part(const Polynomial& p, uint32_t key) {
  Polynomial c = content_in(p, key);
  return integer_primitive(c.is_constant() ? p : p.divide_exact(c));
}

Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, uint32_t key) {
  uint32_t dg = g.degree_in(key);
  Polynomial lg = g.coefficients_in(key).back();
  VarId v = VarId::from_key(key);
  Polynomial r = f;
  while (!r.is_zero()) {
    uint32_t dr = r.degree_in(key);
    if (dr < dg) break;
    Polynomial lr = r.coefficients_in(key).back();
    r = lg * r - (lr * g).mul_monomial(Monomial::var(v, dr - dg), 1);
  }
  return r;
}

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Image of p in Q[v] after substituting point values for every other variable.
Dense specialize(const Polynomial& p, uint32_t key, const std::unordered_map<uint32_t, Rational>& point) {
  Dense out(p.degree_in(key) + 1);
  for (auto& t : p.terms()) {
    Rational c = t.coef;
    uint32_t d = 0;
    for (auto [k, e] : t.mono.factors()) {
      if (k == key) {
        d = e;
        continue;
      }
      const Rational& x = point.at(k);
      for (uint32_t i = 0; i < e; ++i) c *= x;
    }
    out[d] += c;
  }
  return out;
}

size_t dense_gcd_degree(Dense f, Dense g) {
  trim(f);
  trim(g);
  while (!g.empty()) {
    while (f.size() >= g.size() && !f.empty()) {
      Rational q = f.back() / g.back();
      size_t shift = f.size() - g.size();
      for (size_t i = 0; i < g.size(); ++i) f[i + shift] -= q * g[i];
      f.pop_back();
      trim(f);
    }
    std::swap(f, g);
  }
  return f.empty() ? 0 : f.size() - 1;
}

// True when a specialization proves deg_v gcd(a, b) = 0 for every variable v, so gcd(a, b) = 1.
bool coprime_by_evaluation(const Polynomial& a, const Polynomial& b) {
  std::unordered_map<uint32_t, Rational> point;
  uint64_t state = 0x2545F4914F6CDD1DULL;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return long(state % 1009) - 504;
  };
  auto vars = a.variables();
  for (auto v : b.variables()) vars.push_back(v);
  for (auto v : vars) point[v.key()] = Rational(next());
  for (auto v : a.variables()) {
    uint32_t key = v.key();
    bool decided = false;
    for (int attempt = 0; attempt < 3 && !decided; ++attempt) {
      Dense fa = specialize(a, key, point), fb = specialize(b, key, point);
      if (fa.size() == a.degree_in(key) + 1 && fb.size() == b.degree_in(key) + 1 && fa.back() != 0 && fb.back() != 0) {
        if (dense_gcd_degree(fa, fb) != 0) return false;
        decided = true;
      } else {
        for (auto& [k, x] : point) x = Rational(next());
      }
    }
    if (!decided) return false;
  }
  return true;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  auto va = a.variables(), vb = b.variables();
  for (auto& v : va)
    if (b.degree_in(v) == 0) return gcd(content_in(a, v.key()), b);
  for (auto& v : vb)
    if (a.degree_in(v) == 0) return gcd(a, content_in(b, v.key()));
  if (coprime_by_evaluation(a, b)) return Polynomial(1);
  Polynomial quotient;
  if (a.size() <= b.size() && b.try_divide(a, quotient)) return a.monic();
  if (b.size() <= a.size() && a.try_divide(b, quotient)) return b.monic();

  uint32_t key = pick_main_variable(a);
  Polynomial ca = content_in(a, key), cb = content_in(b, key);
  Polynomial c = gcd(ca, cb);
  Polynomial f = integer_primitive(ca.is_constant() ? a : a.divide_exact(ca));
  Polynomial g = integer_primitive(cb.is_constant() ? b : b.divide_exact(cb));
  if (f.degree_in(key) < g.degree_in(key)) std::swap(f, g);
  Polynomial result;
  while (true) {
    Polynomial r = pseudo_remainder(f, g, key);
    if (r.is_zero()) {
      result = g;
      break;
    }
    if (r.degree_in(key) == 0) {
      result = Polynomial(1);
      break;
    }
    f = std::move(g);
    g = primitive_part(r, key);
  }
  return (c * primitive_part(result, key)).monic();
}

// ---- accumulator ----

void PolyAccumulator::add(const Polynomial& p, const Rational& scale) {
  if (scale == 0) return;
  for (auto& t : p.terms()) {
    if (scale == 1)
      acc_[t.mono] += t.coef;
    else
      acc_[t.mono] += t.coef * scale;
  }
}

void PolyAccumulator::add_term(const Monomial& m, const Rational& c) { acc_[m] += c; }

void PolyAccumulator::add_product(const Polynomial& a, const Polynomial& b) {
  acc_.reserve(acc_.size() + a.size() * b.size());
  Rational tmp;
  for (auto& x : a.terms())
    for (auto& y : b.terms()) {
      mpq_mul(tmp.get_mpq_t(), x.coef.get_mpq_t(), y.coef.get_mpq_t());
      acc_[x.mono * y.mono] += tmp;
    }
}

Polynomial PolyAccumulator::finish() {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_)
    if (c != 0) terms.push_back({m, c});
  acc_.clear();
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace qaff
