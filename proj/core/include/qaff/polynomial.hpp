#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qaff {

using Rational = mpq_class;

// Variable families, in canonical order.
enum class Family : uint8_t { A = 0, G = 1, Q = 2, X = 3, EHat = 4, EY = 5, Aux = 6 };

struct VarId {
  Family family = Family::A;
  int index = 0;

  uint32_t key() const {
    return (uint32_t(family) << 24) | uint32_t(index + (1 << 23));
  }
  static VarId from_key(uint32_t k) {
    return VarId{Family(k >> 24), int(k & 0xFFFFFF) - (1 << 23)};
  }
  std::string name() const;
  friend bool operator==(const VarId&, const VarId&) = default;
};

inline VarId var_a(int i) { return {Family::A, i}; }
inline VarId var_g(int i) { return {Family::G, i}; }
inline VarId var_q(int i) { return {Family::Q, i}; }
inline VarId var_x(int i) { return {Family::X, i}; }

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse monomial: sorted (variable key, exponent) pairs with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<uint32_t, uint32_t>;
  using Storage = boost::container::small_vector<Factor, 4>;

  Monomial() = default;
  static Monomial var(VarId v, uint32_t e = 1);

  const Storage& factors() const { return f_; }
  bool is_one() const { return f_.empty(); }
  uint32_t degree() const;
  uint32_t exponent(uint32_t key) const;
  uint32_t exponent(VarId v) const { return exponent(v.key()); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  // Requires divides(o): returns o / *this.
  Monomial cofactor_in(const Monomial& o) const;
  Monomial without(uint32_t key) const;

  std::string to_string() const;
  size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
  // Graded lexicographic order with earlier variables more significant.
  friend int compare(const Monomial& a, const Monomial& b);
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

 private:
  friend class Polynomial;
  Storage f_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coef;
};

// Multivariate polynomial over Q. Terms are kept sorted by decreasing monomial order.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT
  Polynomial(const Rational& c);  // NOLINT
  static Polynomial var(VarId v, uint32_t e = 1);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  uint32_t total_degree() const;
  uint32_t degree_in(uint32_t key) const;
  uint32_t degree_in(VarId v) const { return degree_in(v.key()); }
  std::vector<VarId> variables() const;
  bool uses_family(Family f) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Coefficient of m (zero if absent).
  Rational coefficient(const Monomial& m) const;
  // Coefficients in powers of one variable: result[d] is the coefficient of v^d.
  std::vector<Polynomial> coefficients_in(uint32_t key) const;
  static Polynomial from_coefficients_in(uint32_t key, const std::vector<Polynomial>& cs);

  // Simultaneous substitution of variables by polynomials; unmapped variables stay.
  Polynomial substitute(const std::unordered_map<uint32_t, Polynomial>& images) const;
  // Renames variables through f (must be injective on the variables present).
  Polynomial rename(const std::function<VarId(VarId)>& f) const;
  Polynomial filter(const std::function<bool(const Monomial&)>& keep) const;
  Rational evaluate(const std::unordered_map<uint32_t, Rational>& point) const;

  // Exact quotient; throws NotDivisible if q does not divide *this.
  Polynomial divide_exact(const Polynomial& q) const;
  // Returns true and sets quotient if q divides *this.
  bool try_divide(const Polynomial& q, Polynomial& quotient) const;

  // Scaled so that the leading coefficient is 1.
  Polynomial monic() const;
  std::string to_string() const;
  size_t hash() const;

 private:
  void normalize_sorted();
  std::vector<Term> terms_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial divide_exact(const Polynomial& p, const Polynomial& q);

std::string rational_to_string(const Rational& c);

// Sums many scaled polynomials without repeated merging.
class PolyAccumulator {
 public:
  void add(const Polynomial& p, const Rational& scale = 1);
  void add_term(const Monomial& m, const Rational& c);
  void add_product(const Polynomial& a, const Polynomial& b);
  Polynomial finish();
  bool empty() const { return acc_.empty(); }

 private:
  std::unordered_map<Monomial, Rational, MonomialHash> acc_;
};

}  // namespace qaff
