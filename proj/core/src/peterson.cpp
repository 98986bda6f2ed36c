#include "qaff/peterson.hpp"

#include <algorithm>
#include <tuple>

namespace qaff {

PetersonElement PetersonElement::certify(const NilHecke& H, NilHeckeElement x) {
  std::string witness;
  if (!H.centralizes(x, &witness)) throw NotCentral(witness);
  return trusted(std::move(x));
}

int PositivityReport::violations(bool extended) const {
  int v = 0;
  for (auto& e : entries)
    if (e.extended == extended && !e.positive) ++v;
  return v;
}

Peterson::Peterson(const NilHecke& H, PetersonOptions opts) : H_(H), opts_(opts) {
  int n = H.n();
  for (int i = 1; i < n; ++i) {
    Polynomial img;
    for (int j = i; j < n; ++j) img += Polynomial::var({Family::Aux, j});
    for (int j = 1; j < n; ++j) img -= Rational(j, n) * Polynomial::var({Family::Aux, j});
    to_alpha_.emplace(var_a(i).key(), img);
  }
}

PetersonElement Peterson::one() const { return PetersonElement::trusted(NilHeckeElement::scalar(n(), Polynomial(1))); }

PetersonElement Peterson::zero() const { return PetersonElement::trusted(NilHeckeElement(n())); }

PetersonElement Peterson::translation(const Coweight& lambda) const {
  return PetersonElement::trusted(H_.expand_group(ExtAffine::translation(lambda)));
}

PetersonElement Peterson::mul(const PetersonElement& a, const PetersonElement& b) const {
  return PetersonElement::trusted(H_.mul_centralizing(a.element(), b.element()));
}

PetersonElement Peterson::pow(const PetersonElement& a, int e) const {
  PetersonElement r = one();
  for (int i = 0; i < e; ++i) r = mul(a, r);
  return r;
}

NilHeckeElement Peterson::mul_grassmannian(const std::vector<PetersonElement>& factors) const {
  if (factors.empty()) return one().element();
  NilHeckeElement acc = factors.back().element().grassmannian_part();
  for (size_t i = factors.size() - 1; i-- > 0;) acc = H_.mul_centralizing_grassmannian(factors[i].element(), acc);
  return acc;
}

bool Peterson::equal(const LocalizedPetersonElement& x, const LocalizedPetersonElement& y) const {
  PetersonElement lhs = x.numerator, rhs = y.numerator;
  for (auto& d : y.denominators) lhs = mul(d, lhs);
  for (auto& d : x.denominators) rhs = mul(d, rhs);
  return lhs == rhs;
}

PetersonElement Peterson::j_translation(const Coweight& lambda) const {
  if (int(lambda.size()) != n()) throw std::invalid_argument("coweight has wrong length");
  if (!is_antidominant(lambda)) throw std::invalid_argument("coweight is not antidominant");
  Coweight mu = lambda;
  NilHeckeElement x(n());
  do x.add(ExtAffine::translation(mu), Polynomial(1));
  while (std::next_permutation(mu.begin(), mu.end()));
  return PetersonElement::certify(H_, std::move(x));
}

PetersonElement Peterson::j_tau(int k) const {
  return PetersonElement::trusted(H_.expand_group(ExtAffine::translation(fundamental_coweight(n(), k))));
}

PetersonElement Peterson::j_tau_c(int K, int P) const {
  const int nn = n();
  if (K < 0 || P < 0 || K + P > nn || P > nn - 1) throw std::invalid_argument("j_tau_c index out of range");
  if (P == 0) return j_tau(K);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tau_c_.find({K, P});
    if (it != tau_c_.end()) return it->second;
  }
  // t_{-ε_K} j_{τ^{K+1} c_{P-1}} = j_{τ^K c_{P-1}} + (a_K - a_{K+P}) j_{τ^K c_P}, with ε_0 = ε_n.
  PetersonElement upper = j_tau_c(K + 1, P - 1);
  PetersonElement lower = j_tau_c(K, P - 1);
  Coweight eps(nn, 0);
  eps[(K == 0 ? nn : K) - 1] = -1;
  PetersonElement shifted = mul(translation(eps), upper);
  NilHeckeElement num = opts_.flip_recursion_sign ? (shifted + lower).element() : (shifted - lower).element();
  Polynomial den = H_.ring().alpha(K, K + P);
  NilHeckeElement::Map out;
  for (auto& [x, c] : num.terms()) out.emplace(x, c.divide_exact(den));
  PetersonElement result = PetersonElement::certify(H_, NilHeckeElement::from_map(nn, std::move(out)));
  std::lock_guard<std::mutex> lock(mu_);
  return tau_c_.emplace(std::make_pair(K, P), std::move(result)).first->second;
}

PetersonElement Peterson::j_twist(const PetersonElement& b, int k) const {
  return PetersonElement::trusted(H_.twist(b.element(), k));
}

PetersonElement Peterson::j_partition(const Partition& lambda, int k) const {
  if (lambda.length() > k || (!lambda.parts.empty() && lambda.parts[0] > n() - k))
    throw std::invalid_argument("partition " + lambda.to_string() + " does not fit the box");
  Matrix<PetersonElement> m(k, std::vector<PetersonElement>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int r = lambda[i] - i + j;
      if (r < 0)
        m[i][j] = zero();
      else if (r == 0)
        m[i][j] = one();
      else
        m[i][j] = j_twist(j_tau_c(0, r), -j);
    }
  return det(m, zero(), one(), [&](const PetersonElement& a, const PetersonElement& b) { return mul(a, b); });
}

// ---- linear-solve oracle ----

namespace {

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == nvars - 1) {
      e[var] = left;
      Monomial m;
      for (int i = 0; i < nvars; ++i)
        if (e[i]) m = m * Monomial::var(var_a(i + 1), uint32_t(e[i]));
      out.push_back(m);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[var] = x;
      self(self, var + 1, left - x);
    }
  };
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, d);
  return out;
}

using SparseRow = std::vector<std::pair<int, Rational>>;

void axpy(SparseRow& r, const Rational& f, const SparseRow& p) {
  // r -= f * p
  SparseRow out;
  out.reserve(r.size() + p.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(std::move(r[i++]));
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -f * p[j].second);
      ++j;
    } else {
      Rational v = r[i].second - f * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i, ++j;
    }
  }
  r = std::move(out);
}

}  // namespace

PetersonElement Peterson::j_solve(const ExtAffine& w, int cutoff) const {
  const int nn = n();
  if (!w.is_grassmannian()) throw std::invalid_argument("j_solve needs a Grassmannian element");
  const int lw = w.length();
  if (cutoff < lw) throw std::invalid_argument("cutoff below length");

  // Unknown columns, ordered by decreasing length.
  std::vector<ExtAffine> support;
  for (auto& x : elements_up_to(nn, w.tau_power(), cutoff))
    if (x.length() >= lw && !x.is_grassmannian()) support.push_back(x);
  std::stable_sort(support.begin(), support.end(),
                   [](const ExtAffine& a, const ExtAffine& b) { return a.length() > b.length(); });
  struct Column {
    size_t x;
    Monomial m;
  };
  std::vector<Column> cols;
  std::vector<std::vector<Monomial>> monos_by_degree(cutoff - lw + 1);
  for (int d = 0; d <= cutoff - lw; ++d) monos_by_degree[d] = monomials_of_degree(nn - 1, d);
  std::vector<int> first_col(support.size());
  for (size_t xi = 0; xi < support.size(); ++xi) {
    first_col[xi] = int(cols.size());
    for (auto& m : monos_by_degree[support[xi].length() - lw]) cols.push_back({xi, m});
  }

  // Rows: coefficient of μ A_y in [a_j, b].
  std::map<std::tuple<int, ExtAffine, Monomial>, int> row_index;
  std::vector<std::map<int, Rational>> rows;
  std::vector<Rational> rhs;
  auto row_of = [&](int j, const ExtAffine& y, const Monomial& mu) {
    auto key = std::make_tuple(j, y, mu);
    auto it = row_index.find(key);
    if (it != row_index.end()) return it->second;
    int r = int(rows.size());
    row_index.emplace(key, r);
    rows.emplace_back();
    rhs.emplace_back(0);
    return r;
  };
  for (int j = 1; j < nn; ++j) {
    NilHeckeElement cw = H_.commutator_with_a(j, NilHeckeElement::basis(w));
    for (auto& [y, p] : cw.terms())
      for (auto& t : p.terms()) rhs[row_of(j, y, t.mono)] -= t.coef;
    for (size_t xi = 0; xi < support.size(); ++xi) {
      NilHeckeElement cx = H_.commutator_with_a(j, NilHeckeElement::basis(support[xi]));
      const auto& ms = monos_by_degree[support[xi].length() - lw];
      for (size_t mi = 0; mi < ms.size(); ++mi) {
        int col = first_col[xi] + int(mi);
        for (auto& [y, p] : cx.terms())
          for (auto& t : p.terms()) {
            auto& cell = rows[row_of(j, y, t.mono * ms[mi])][col];
            cell += t.coef;
          }
      }
    }
  }

  // Incremental echelon form; pivots keyed by leading column.
  std::map<int, std::pair<SparseRow, Rational>> pivots;
  for (size_t r = 0; r < rows.size(); ++r) {
    SparseRow row;
    for (auto& [c, v] : rows[r])
      if (v != 0) row.emplace_back(c, v);
    Rational b = rhs[r];
    while (!row.empty()) {
      int lead = row.front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        Rational inv = 1 / row.front().second;
        for (auto& e : row) e.second *= inv;
        b *= inv;
        pivots.emplace(lead, std::make_pair(std::move(row), std::move(b)));
        break;
      }
      Rational f = row.front().second;
      axpy(row, f, it->second.first);
      b -= f * it->second.second;
    }
    if (row.empty() && b != 0)
      throw CutoffTooSmall("no centralizer element supported within length " + std::to_string(cutoff) + " for " +
                           w.to_string());
  }
  if (pivots.size() != cols.size()) throw std::logic_error("j_solve system is underdetermined");
  std::vector<Rational> value(cols.size());
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Rational v = it->second.second;
    for (size_t e = 1; e < it->second.first.size(); ++e) v -= it->second.first[e].second * value[it->second.first[e].first];
    value[it->first] = v;
  }

  NilHeckeElement b = NilHeckeElement::basis(w);
  std::vector<std::vector<Term>> coeffs(support.size());
  for (size_t c = 0; c < cols.size(); ++c)
    if (value[c] != 0) coeffs[cols[c].x].push_back({cols[c].m, value[c]});
  for (size_t xi = 0; xi < support.size(); ++xi)
    if (!coeffs[xi].empty()) b.add(support[xi], Polynomial::from_terms(std::move(coeffs[xi])));
  return PetersonElement::certify(H_, std::move(b));
}

PetersonElement Peterson::j(const ExtAffine& w) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = solved_.find(w);
    if (it != solved_.end()) return it->second;
  }
  PetersonElement result;
  for (int cutoff = w.length();; ++cutoff) {
    try {
      result = j_solve(w, cutoff);
      break;
    } catch (const CutoffTooSmall&) {
      if (cutoff >= w.length() + 2 * n()) throw;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  return solved_.emplace(w, std::move(result)).first->second;
}

PetersonElement Peterson::j_construct(const ExtAffine& w, std::string* route) const {
  if (!w.is_grassmannian()) throw std::invalid_argument(w.word_string() + " is not Grassmannian");
  const int nn = n();
  auto note = [&](const std::string& r) {
    if (route) *route = route->empty() ? r : r + " " + *route;
  };
  for (int k = 0; k < nn; ++k)
    for (int p = 0; p <= nn - 1 && k + p <= nn; ++p)
      if (w == ExtAffine::tau(nn, k) * ExtAffine::cyclic(nn, p)) {
        note("tau_c(" + std::to_string(k) + "," + std::to_string(p) + ")");
        return j_tau_c(k, p);
      }
  auto [k, u] = factor_sigma(w);
  if (k != 0) {
    PetersonElement b = j_construct(u, route);
    note("twist(" + std::to_string(k) + ")");
    return mul(j_tau(k), j_twist(b, k));
  }
  Partition lambda = grassmannian_to_partition(u);
  if (lambda.length() + lambda[0] <= nn) {
    note("partition" + lambda.to_string());
    return j_partition(lambda, lambda.length());
  }
  for (int i = 1; i < nn; ++i) {
    Coweight omega = fundamental_coweight(nn, i);
    ExtAffine y = w * ExtAffine::translation(omega);
    if (!y.is_grassmannian() || y.length() >= w.length()) continue;
    Coweight mu = omega;
    for (auto& c : mu) c = -c;
    PetersonElement b = j_construct(y, route);
    note("translation(-w" + std::to_string(i) + ")");
    return mul(j_translation(mu), b);
  }
  throw std::runtime_error("no constructive route for " + w.word_string());
}

std::map<ExtAffine, Polynomial> Peterson::gr_coefficients(const NilHeckeElement& x) const {
  std::map<ExtAffine, Polynomial> out;
  for (auto& [w, c] : x.terms())
    if (w.is_grassmannian()) out.emplace(w, c);
  return out;
}

PetersonElement Peterson::gr(const NilHeckeElement& x) const {
  PetersonElement r = zero();
  for (auto& [w, c] : gr_coefficients(x)) r = r + c * j(w);
  return r;
}

std::map<ExtAffine, Polynomial> Peterson::structure_constants(const ExtAffine& u, const ExtAffine& v) const {
  return gr_coefficients(mul(j(u), j(v)).element());
}

Polynomial Peterson::to_simple_roots(const Polynomial& p) const { return p.substitute(to_alpha_); }

bool Peterson::graham_positive(const Polynomial& p) const {
  const Polynomial q = to_simple_roots(p);
  for (auto& t : q.terms())
    if (t.coef < 0 || t.coef.get_den() != 1) return false;
  return true;
}

PositivityReport Peterson::positivity_scan(int maxlen) const {
  PositivityReport rep;
  rep.n = n();
  rep.maxlen = maxlen;
  for (auto& w : grassmannian_elements(n(), maxlen)) {
    PositivityEntry e;
    e.w = w;
    e.extended = w.tau_power() != 0;
    PetersonElement b = j(w);
    for (auto& [x, c] : b.element().terms()) {
      Polynomial signed_c = (x.length() - w.length()) % 2 ? -c : c;
      if (!graham_positive(signed_c)) {
        e.positive = false;
        e.witness = "coefficient of " + basis_label(x) + " in j[" + w.to_string() + "] is " + c.to_string() +
                    " = " + to_simple_roots(c).to_string();
        break;
      }
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace qaff
