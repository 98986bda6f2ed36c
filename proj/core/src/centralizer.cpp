#include "qaff/centralizer.hpp"

#include <stdexcept>

namespace qaff {

Centralizer::Centralizer(const SRing& S, CentralizerOptions opts) : S_(S), opts_(opts) {
  const int n = S.n();
  if (n < 2) throw std::invalid_argument("centralizer family needs n >= 2");
  z_.assign(n, std::vector<Polynomial>(n));
  z_[0][0] = Polynomial(1);
  for (int p = 1; p < n; ++p) z_[0][p] = Polynomial::var(var_g(p));
  for (int i = 2; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      z_[i - 1][j - 1] = z_[i - 2][j - 2] + Rational(recursion_sign()) * S.alpha(i - 1, j) * z_[i - 2][j - 1];

}

Matrix<Polynomial> Centralizer::lower_chart() const {
  const int n = this->n();
  Matrix<Polynomial> l(n, std::vector<Polynomial>(n));
  for (int r = 1; r < n; ++r) l[r - 1][n - 1] = Polynomial::var(var_g(n - r));
  l[n - 1][n - 1] = Polynomial(1);
  for (int j = n; j >= 2; --j)
    for (int i = 2; i <= j; ++i)
      l[i - 2][j - 2] = l[i - 1][j - 1] - Rational(recursion_sign()) * S_.alpha(i - 1, j) * l[i - 2][j - 1];
  return l;
}

Polynomial Centralizer::minor_at(int rows, const std::vector<int>& cols) const {
  if (int(cols.size()) != rows) throw std::invalid_argument("minor must be square");
  auto key = std::make_pair(rows, cols);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = minors_.find(key);
    if (it != minors_.end()) return it->second;
  }
  Matrix<Polynomial> m(rows, std::vector<Polynomial>(rows));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < rows; ++c) {
      if (cols[c] < 1 || cols[c] > n()) throw std::invalid_argument("minor column out of range");
      m[r][c] = z_[r][cols[c] - 1];
    }
  Polynomial d = det(m, Polynomial(), Polynomial(1));
  std::lock_guard<std::mutex> lock(mu_);
  return minors_.emplace(key, std::move(d)).first->second;
}

std::vector<int> Centralizer::minor_columns(const Partition& lambda, int k) {
  std::vector<int> cols;
  for (int q = 1; q <= k; ++q) cols.push_back(lambda[k - q] + q);
  return cols;
}

Polynomial Centralizer::minor(const Partition& lambda, int k) const {
  if (k < 0 || k > n() || !lambda.fits_box(k, n() - k))
    throw std::invalid_argument("partition " + lambda.to_string() + " does not fit the " + std::to_string(k) + " x " +
                                std::to_string(n() - k) + " box");
  return minor_at(k, minor_columns(lambda, k));
}

Partition Centralizer::R(int n, int i) { return rectangle(n, i); }

Partition Centralizer::R_prime(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("R_i' needs 1 <= i <= n-1");
  std::vector<int> p(n - i, i);
  --p.back();
  return Partition(p);
}

Polynomial Centralizer::D(int i) const {
  if (i < 0 || i > n()) throw std::invalid_argument("D_i needs 0 <= i <= n");
  return minor(R(n(), i), n() - i);
}

Polynomial Centralizer::D_prime(int i) const { return minor(R_prime(n(), i), n() - i); }

RationalFunction Centralizer::u_inv(int i, int j) const {
  if (!(1 <= j && j < i && i <= n())) throw std::invalid_argument("u^{-1} entry must lie below the diagonal");
  std::vector<int> cols{j};
  for (int c = i + 1; c <= n(); ++c) cols.push_back(c);
  return RationalFunction(minor_at(n() - i + 1, cols), D(i - 1));
}

RationalFunction Centralizer::psi_partial_sum(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("partial sum index out of range");
  Polynomial s;
  for (int m = 1; m <= i; ++m) s += S_.a(m);
  if (i == n()) return s;
  return RationalFunction(s) + RationalFunction(D_prime(i), D(i));
}

RationalFunction Centralizer::psi_q(int i) const {
  if (i < 1 || i >= n()) throw std::invalid_argument("q index out of range");
  return RationalFunction(D(i - 1) * D(i + 1), D(i).pow(2));
}

const Polynomial& Centralizer::D_power(int i, int e) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = d_powers_.find({i, e});
    if (it != d_powers_.end()) return it->second;
  }
  Polynomial p = e == 0 ? Polynomial(1) : D(i).pow(e);
  std::lock_guard<std::mutex> lock(mu_);
  return d_powers_.emplace(std::make_pair(i, e), std::move(p)).first->second;
}

const Polynomial& Centralizer::partial_sum_power(int i, uint32_t e) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& cache = sum_powers_[i];
  if (cache.empty()) {
    Polynomial A;
    for (int m = 1; m <= i; ++m) A += S_.a(m);
    cache.push_back(Polynomial(1));
    cache.push_back(A * minors_.at({n() - i, minor_columns(R(n(), i), n() - i)}) +
                    minors_.at({n() - i, minor_columns(R_prime(n(), i), n() - i)}));
  }
  while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
  return cache[e];
}

DFraction Centralizer::psi_fraction_direct(const Polynomial& p) const {
  const int n = this->n();
  // Ψ(x_1 + ... + x_i) = A_i + D_i'/D_i with A_i = a_1 + ... + a_i, and Ψ(x_1 + ... + x_n) = 0,
  // so p is first rewritten in the partial sums X_i (stored as x_i).
  std::unordered_map<uint32_t, Polynomial> to_sums;
  for (int i = 1; i <= n; ++i) {
    Polynomial img;
    if (i < n) img += Polynomial::var(var_x(i));
    if (i > 1) img -= Polynomial::var(var_x(i - 1));
    to_sums.emplace(var_x(i).key(), img);
  }
  for (int i = 0; i <= n; ++i) D(i);
  for (int i = 1; i < n; ++i) D_prime(i);

  const Polynomial in_sums = p.substitute(to_sums);
  std::map<Monomial, std::vector<Term>> groups;
  for (auto& t : in_sums.terms()) {
    Monomial xq, a;
    for (auto [k, e] : t.mono.factors()) {
      VarId v = VarId::from_key(k);
      if ((v.family == Family::X && v.index >= 1 && v.index < n) || (v.family == Family::Q && v.index >= 1 && v.index < n))
        xq = xq * Monomial::var(v, e);
      else if (v.family == Family::A)
        a = a * Monomial::var(v, e);
      else
        throw std::invalid_argument("apply_psi expects a polynomial in a, x_1..x_n, q_1..q_{n-1}; found " + v.name());
    }
    groups[xq].push_back({a, t.coef});
  }

  std::vector<DFraction> parts;
  std::vector<int> top(n + 1, 0);
  for (auto& [xq, coeffs] : groups) {
    std::vector<int> ex(n + 1, 0), fq(n + 1, 0);
    for (auto [k, e] : xq.factors()) {
      VarId v = VarId::from_key(k);
      (v.family == Family::X ? ex : fq)[v.index] = int(e);
    }
    DFraction f{S_.reduce(Polynomial::from_terms(coeffs)), std::vector<int>(n + 1, 0)};
    for (int i = 1; i < n; ++i)
      if (ex[i]) f.num *= partial_sum_power(i, ex[i]);
    for (int i = 0; i < n; ++i) {
      int k = ex[i] + 2 * fq[i] - (i > 0 ? fq[i - 1] : 0) - (i + 1 < n ? fq[i + 1] : 0);
      if (k < 0)
        f.num *= D_power(i, -k);
      else
        f.exps[i] = k;
      top[i] = std::max(top[i], f.exps[i]);
    }
    parts.push_back(std::move(f));
  }
  PolyAccumulator acc;
  for (auto& f : parts) {
    Polynomial scale(1);
    for (int i = 0; i <= n; ++i)
      if (top[i] > f.exps[i]) scale *= D_power(i, top[i] - f.exps[i]);
    acc.add_product(f.num, scale);
  }
  return DFraction{acc.finish(), top};
}

const DFraction& Centralizer::elementary_product(const std::vector<int>& I) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = elementary_products_.find(I);
    if (it != elementary_products_.end()) return it->second;
  }
  DFraction f{Polynomial(1), std::vector<int>(n() + 1, 0)};
  if (!I.empty()) {
    std::vector<int> head(I.begin(), I.end() - 1);
    const DFraction& rest = elementary_product(head);
    int j = int(I.size()), k = I.back();
    DFraction e = k == 0 ? DFraction{Polynomial(1), std::vector<int>(n() + 1, 0)}
                         : cancel(psi_fraction_direct(basic_invariants(j)[k - 1]));
    f.num = rest.num * e.num;
    for (int i = 0; i <= n(); ++i) f.exps[i] = rest.exps[i] + e.exps[i];
  }
  std::lock_guard<std::mutex> lock(mu_);
  return elementary_products_.emplace(I, std::move(f)).first->second;
}

std::optional<DFraction> Centralizer::psi_fraction_elementary(const Polynomial& p) const {
  const int n = this->n();
  Polynomial classical = p.filter([](const Monomial& m) {
    for (auto [k, e] : m.factors())
      if (VarId::from_key(k).family == Family::Q) return false;
    return true;
  });
  auto c = standard_elementary_expansion(classical, n);
  if (!c || quantize(*c, n) != p) return std::nullopt;
  std::vector<int> top(n + 1, 0);
  for (auto& [I, coeff] : *c) {
    const DFraction& e = elementary_product(I);
    for (int i = 0; i <= n; ++i) top[i] = std::max(top[i], e.exps[i]);
  }
  PolyAccumulator acc;
  for (auto& [I, coeff] : *c) {
    const DFraction& e = elementary_product(I);
    Polynomial scale = coeff;
    for (int i = 0; i <= n; ++i)
      if (top[i] > e.exps[i]) scale *= D_power(i, top[i] - e.exps[i]);
    acc.add_product(e.num, scale);
  }
  return DFraction{acc.finish(), top};
}

DFraction Centralizer::psi_fraction(const Polynomial& p) const {
  if (auto f = psi_fraction_elementary(p)) return *f;
  return psi_fraction_direct(p);
}

DFraction Centralizer::cancel(DFraction f) const {
  if (f.num.is_zero()) {
    std::fill(f.exps.begin(), f.exps.end(), 0);
    return f;
  }
  for (size_t i = 0; i < f.exps.size(); ++i) {
    Polynomial q;
    while (f.exps[i] > 0 && f.num.try_divide(D_power(int(i), 1), q)) {
      f.num = std::move(q);
      --f.exps[i];
    }
  }
  return f;
}

RationalFunction Centralizer::to_rational(const DFraction& f) const {
  Polynomial den(1);
  for (size_t i = 0; i < f.exps.size(); ++i)
    if (f.exps[i] > 0) den *= D_power(int(i), f.exps[i]);
  return RationalFunction(f.num, den);
}

RationalFunction Centralizer::apply_psi(const Polynomial& p) const { return to_rational(cancel(psi_fraction(p))); }

Polynomial Centralizer::psi_times(const Polynomial& p, const std::vector<int>& extra) const {
  DFraction f = psi_fraction(p);
  for (int i : extra) {
    if (i < 0 || i > n()) throw std::invalid_argument("D index out of range");
    if (f.exps[i] > 0)
      --f.exps[i];
    else
      f.num *= D_power(i, 1);
  }
  Polynomial den(1), q;
  for (size_t i = 0; i < f.exps.size(); ++i)
    if (f.exps[i] > 0) den *= D_power(int(i), f.exps[i]);
  if (!f.num.try_divide(den, q)) throw NotDivisible("Psi image is not a polynomial after clearing the given D_i");
  return q;
}

// ---- φ̃ ----

PhiTilde::PhiTilde(const Peterson& P, const Centralizer& C) : P_(P), C_(C) {
  if (P.n() != C.n()) throw std::invalid_argument("rank mismatch");
}

namespace {

Coweight neg_fundamental(int n, int k) {
  Coweight w = fundamental_coweight(n, k);
  for (auto& x : w) x = -x;
  return w;
}

}  // namespace

PetersonElement PhiTilde::entry(int i, int j) const {
  const int n = P_.n();
  if (!(1 <= i && i <= n && 1 <= j && j <= n)) throw std::invalid_argument("entry out of range");
  if (i > j) return P_.zero();
  PetersonElement base = P_.j_tau_c(i, j - i);
  if (i == 1) return base;
  return P_.mul(P_.translation(neg_fundamental(n, i - 1)), base);
}

PetersonElement PhiTilde::minor(const Partition& lambda, int k) const {
  if (!lambda.fits_box(k, P_.n() - k)) throw std::invalid_argument("partition does not fit the box");
  auto cols = Centralizer::minor_columns(lambda, k);
  Matrix<PetersonElement> m(k, std::vector<PetersonElement>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m[r][c] = entry(r + 1, cols[c]);
  return det(m, P_.zero(), P_.one(), [&](const PetersonElement& a, const PetersonElement& b) { return P_.mul(a, b); });
}

NilHeckeElement PhiTilde::minor_grassmannian(const Partition& lambda, int k) const {
  if (!lambda.fits_box(k, P_.n() - k)) throw std::invalid_argument("partition does not fit the box");
  const NilHecke& H = P_.algebra();
  auto cols = Centralizer::minor_columns(lambda, k);
  Matrix<NilHeckeElement> m(k, std::vector<NilHeckeElement>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m[r][c] = entry(r + 1, cols[c]).element();
  NilHeckeElement zero(P_.n()), one = NilHeckeElement::scalar(P_.n(), Polynomial(1));
  return det(m, zero, one, [&](const NilHeckeElement& a, const NilHeckeElement& b) {
           return H.mul_centralizing_grassmannian(a, b);
         }).grassmannian_part();
}

NilHeckeElement PhiTilde::homogeneous_image(const Polynomial& p, int d) const {
  const int n = P_.n();
  const NilHecke& H = P_.algebra();
  // exps[0] counts t_{ω_1}, exps[q] counts j_{τ c_q}.
  std::vector<PetersonElement> factors{P_.j_tau(1)};
  for (int q = 1; q < n; ++q) factors.push_back(P_.j_tau_c(1, q));
  std::map<std::vector<int>, NilHeckeElement> memo;
  auto image = [&](auto&& self, std::vector<int> e) -> NilHeckeElement {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    size_t f = 0;
    while (f < e.size() && e[f] == 0) ++f;
    NilHeckeElement r;
    if (f == e.size()) {
      r = NilHeckeElement::scalar(n, Polynomial(1));
    } else {
      std::vector<int> rest = e;
      --rest[f];
      r = H.mul_centralizing_grassmannian(factors[f].element(), self(self, rest));
    }
    return memo.emplace(std::move(e), std::move(r)).first->second;
  };
  std::map<std::vector<int>, std::vector<Term>> groups;
  for (auto& t : p.terms()) {
    std::vector<int> e(n, 0);
    Monomial a;
    int deg = 0;
    for (auto [k, x] : t.mono.factors()) {
      VarId v = VarId::from_key(k);
      if (v.family == Family::G) {
        if (v.index < 1 || v.index >= n) throw std::invalid_argument("g index out of range");
        e[v.index] += int(x);
        deg += int(x);
      } else if (v.family == Family::A) {
        a = a * Monomial::var(v, x);
      } else {
        throw std::invalid_argument("homogeneous_image expects a polynomial in a and g; found " + v.name());
      }
    }
    if (deg > d) throw std::invalid_argument("g-degree exceeds the homogenizing degree");
    e[0] = d - deg;
    groups[e].push_back({a, t.coef});
  }
  NilHeckeElement out(n);
  for (auto& [e, coeffs] : groups) out += Polynomial::from_terms(coeffs) * image(image, e);
  return out;
}

bool PhiTilde::check_recursion(std::string* witness) const {
  const int n = P_.n();
  Matrix<PetersonElement> o(n + 1, std::vector<PetersonElement>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      PetersonElement b = P_.j(ExtAffine::tau(n, i) * ExtAffine::cyclic(n, j - i));
      o[i][j] = i == 1 ? b : P_.mul(P_.translation(neg_fundamental(n, i - 1)), b);
    }
  const SRing& S = C_.ring();
  for (int i = 2; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      PetersonElement rhs = o[i - 1][j - 1] + Rational(C_.recursion_sign()) * S.alpha(i - 1, j) * o[i - 1][j];
      if (rhs != o[i][j]) {
        if (witness)
          *witness = "phi(z_" + std::to_string(i) + std::to_string(j) + ") = " + o[i][j].to_string() +
                     " but the recursion gives " + rhs.to_string();
        return false;
      }
    }
  return true;
}

}  // namespace qaff
