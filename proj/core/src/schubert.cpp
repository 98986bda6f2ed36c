#include "qaff/schubert.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qaff {

Matrix<Polynomial> tridiagonal(int m) {
  Matrix<Polynomial> c(m, std::vector<Polynomial>(m));
  for (int i = 0; i < m; ++i) {
    c[i][i] = Polynomial::var(var_x(i + 1));
    if (i + 1 < m) {
      c[i][i + 1] = Polynomial(-1);
      c[i + 1][i] = Polynomial::var(var_q(i + 1));
    }
  }
  return c;
}

std::vector<Polynomial> basic_invariants(int n) {
  if (n < 1) throw std::invalid_argument("basic_invariants needs n >= 1");
  const VarId z{Family::Aux, 0};
  auto c = tridiagonal(n);
  for (int i = 0; i < n; ++i) c[i][i] -= Polynomial::var(z);
  auto coeffs = det(c, Polynomial(), Polynomial(1)).coefficients_in(z.key());
  coeffs.resize(n + 1);
  std::vector<Polynomial> g;
  for (int j = 1; j <= n; ++j) g.push_back((n - j) % 2 ? -coeffs[n - j] : coeffs[n - j]);
  return g;
}

std::vector<Polynomial> kim_ideal_generators(const SRing& S) {
  auto g = basic_invariants(S.n());
  for (int j = 1; j <= S.n(); ++j) g[j - 1] -= S.elementary(j);
  return g;
}

Polynomial divided_difference_a(const SRing& S, int i, const Polynomial& p) {
  if (i < 1 || i >= S.n()) throw std::invalid_argument("divided difference index out of range");
  std::vector<int> perm(S.n() + 1);
  for (int j = 0; j <= S.n(); ++j) perm[j] = j;
  std::swap(perm[i], perm[i + 1]);
  return (p - S.permute(p, perm)).divide_exact(S.alpha(i));
}

std::vector<std::vector<int>> standard_elementary_indices(int n) {
  std::vector<std::vector<int>> out{{}};
  for (int j = 1; j < n; ++j) {
    std::vector<std::vector<int>> next;
    for (auto& v : out)
      for (int i = 0; i <= j; ++i) {
        next.push_back(v);
        next.back().push_back(i);
      }
    out = std::move(next);
  }
  return out;
}

namespace {

struct StaircaseBasis {
  std::vector<std::vector<int>> indices;
  std::map<Monomial, int> monomial_index;
  std::vector<std::vector<Rational>> inverse;  // inverse[I][m]
};

// Elementary symmetric polynomial e_i(x_1..x_j).
Polynomial elementary_x(int i, int j) {
  std::vector<Polynomial> e(i + 1);
  e[0] = Polynomial(1);
  for (int k = 1; k <= j; ++k)
    for (int r = std::min(i, k); r >= 1; --r) e[r] += Polynomial::var(var_x(k)) * e[r - 1];
  return e[i];
}

const StaircaseBasis& staircase_basis(int n) {
  static std::mutex mu;
  static std::map<int, StaircaseBasis> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  StaircaseBasis b;
  b.indices = standard_elementary_indices(n);
  const size_t N = b.indices.size();
  std::vector<Polynomial> images;
  for (auto& I : b.indices) {
    Polynomial e(1);
    for (int j = 1; j < n; ++j) e *= elementary_x(I[j - 1], j);
    images.push_back(e);
    for (auto& t : e.terms()) b.monomial_index.emplace(t.mono, 0);
  }
  if (b.monomial_index.size() != N) throw std::logic_error("staircase basis is not square");
  int k = 0;
  for (auto& [m, idx] : b.monomial_index) idx = k++;
  // Columns are basis elements; invert by Gauss-Jordan.
  std::vector<std::vector<Rational>> a(N, std::vector<Rational>(2 * N));
  for (size_t c = 0; c < N; ++c)
    for (auto& t : images[c].terms()) a[b.monomial_index.at(t.mono)][c] = t.coef;
  for (size_t r = 0; r < N; ++r) a[r][N + r] = 1;
  for (size_t c = 0; c < N; ++c) {
    size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (size_t r = 0; r < N; ++r)
      if (r != c && a[r][c] != 0) {
        Rational f = a[r][c];
        for (size_t cc = c; cc < 2 * N; ++cc) a[r][cc] -= f * a[c][cc];
      }
  }
  b.inverse.assign(N, std::vector<Rational>(N));
  for (size_t I = 0; I < N; ++I)
    for (size_t m = 0; m < N; ++m) b.inverse[I][m] = a[I][N + m];
  return cache.emplace(n, std::move(b)).first->second;
}

}  // namespace

std::optional<ElementaryExpansion> standard_elementary_expansion(const Polynomial& p, int n) {
  const StaircaseBasis& b = staircase_basis(n);
  std::vector<std::vector<Term>> by_monomial(b.indices.size());
  for (auto& t : p.terms()) {
    Monomial x, a;
    for (auto [k, e] : t.mono.factors()) {
      VarId v = VarId::from_key(k);
      if (v.family == Family::X)
        x = x * Monomial::var(v, e);
      else if (v.family == Family::A)
        a = a * Monomial::var(v, e);
      else
        return std::nullopt;
    }
    auto it = b.monomial_index.find(x);
    if (it == b.monomial_index.end()) return std::nullopt;
    by_monomial[it->second].push_back({a, t.coef});
  }
  std::vector<Polynomial> v;
  for (auto& terms : by_monomial) v.push_back(Polynomial::from_terms(std::move(terms)));
  ElementaryExpansion out;
  for (size_t I = 0; I < b.indices.size(); ++I) {
    Polynomial c;
    for (size_t m = 0; m < v.size(); ++m)
      if (b.inverse[I][m] != 0 && !v[m].is_zero()) c += b.inverse[I][m] * v[m];
    if (!c.is_zero()) out.emplace(b.indices[I], std::move(c));
  }
  return out;
}

Polynomial quantize(const ElementaryExpansion& c, int n) {
  std::vector<std::vector<Polynomial>> E(n);
  for (int j = 1; j < n; ++j) {
    E[j].push_back(Polynomial(1));
    for (auto& g : basic_invariants(j)) E[j].push_back(g);
  }
  Polynomial out;
  for (auto& [I, coeff] : c) {
    Polynomial m = coeff;
    for (int j = 1; j < n; ++j) m *= E[j][I[j - 1]];
    out += m;
  }
  return out;
}

SchubertFamily::SchubertFamily(const SRing& S, SchubertOptions opts) : S_(S), opts_(opts) {
  const int n = S.n();
  top_ = Polynomial(1);
  if (opts.quantum) {
    for (int i = 1; i < n; ++i) {
      auto c = tridiagonal(i);
      for (int r = 0; r < i; ++r) c[r][r] -= S.a(n - i);
      top_ *= det(c, Polynomial(), Polynomial(1));
    }
  } else {
    for (int i = 1; i < n; ++i)
      for (int j = 1; i + j <= n; ++j) top_ *= Polynomial::var(var_x(i)) - S.a(j);
  }
}

namespace {

int left_ascent(const Perm& w, bool largest) {
  int found = 0;
  for (int i = 1; i < int(w.size()); ++i)
    if (!perm_has_left_descent(w, i)) {
      found = i;
      if (!largest) break;
    }
  return found;
}

}  // namespace

Polynomial SchubertFamily::operator()(const Perm& w) const {
  if (int(w.size()) != S_.n()) throw std::invalid_argument("permutation has wrong size");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  Polynomial r;
  int i = left_ascent(w, false);
  if (i == 0) {
    r = top_;
  } else {
    r = divided_difference_a(S_, i, (*this)(perm_compose(perm_s(S_.n(), i), w)));
    if (!opts_.flip_recursion_sign) r = -r;
  }
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(w, std::move(r)).first->second;
}

Polynomial SchubertFamily::along_largest_ascent(const Perm& w) const {
  int i = left_ascent(w, true);
  if (i == 0) return top_;
  Polynomial r = divided_difference_a(S_, i, along_largest_ascent(perm_compose(perm_s(S_.n(), i), w)));
  return opts_.flip_recursion_sign ? r : -r;
}

}  // namespace qaff
