#pragma once

#include <concepts>
#include <ostream>
#include <random>

#include "qaff/exactalg.hpp"

namespace qaff {

// Lets doctest print library values on failure.
template <class T>
  requires requires(const T& t) {
    { t.to_string() } -> std::convertible_to<std::string>;
  }
std::ostream& operator<<(std::ostream& os, const T& t) {
  return os << t.to_string();
}

}  // namespace qaff

namespace qaff::test {

inline Polynomial P(const char* text) { return parse_polynomial(text); }

// Small random polynomial in the given variables with integer coefficients in [-3, 3].
inline Polynomial random_poly(std::mt19937& rng, const std::vector<VarId>& vars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> coef(-3, 3), exp(0, maxdeg), pick(0, int(vars.size()) - 1);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Polynomial m(coef(rng));
    int d = exp(rng);
    for (int k = 0; k < d; ++k) m *= Polynomial::var(vars[pick(rng)]);
    p += m;
  }
  return p;
}

inline std::unordered_map<uint32_t, Rational> random_point(std::mt19937& rng, const std::vector<VarId>& vars) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  std::unordered_map<uint32_t, Rational> pt;
  for (auto v : vars) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    pt[v.key()] = r;
  }
  return pt;
}

}  // namespace qaff::test
