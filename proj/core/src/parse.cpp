#include "qaff/parse.hpp"

#include <cctype>
#include <string>

namespace qaff {

namespace {

template <class V>
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  V run() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long integer() {
    skip();
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && s_[start] == '-')) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  V expr() {
    V v = term();
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }
  V term() {
    V v = unary();
    while (true) {
      if (eat('*'))
        v = v * unary();
      else if (eat('/'))
        v = divide(v, unary());
      else
        return v;
    }
  }
  V unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  V power() {
    V base = atom();
    if (eat('^')) {
      bool braces = eat('{');
      long e = integer();
      if (braces && !eat('}')) fail("expected '}'");
      if (e < 0) return inverse_power(base, -e);
      V r = V(Polynomial(1));
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }
  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return V(Polynomial(Rational(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      Family f;
      if (name == "a" || name == "t")
        f = Family::A;
      else if (name == "g")
        f = Family::G;
      else if (name == "q")
        f = Family::Q;
      else if (name == "x")
        f = Family::X;
      else if (name == "ehat")
        f = Family::EHat;
      else if (name == "e")
        f = Family::EY;
      else if (name == "alpha")
        f = Family::Aux;
      else
        fail("unknown variable family '" + name + "'");
      if (pos_ >= s_.size() || s_[pos_] != '_') fail("expected '_' after variable name");
      ++pos_;
      long idx;
      if (pos_ < s_.size() && s_[pos_] == '{') {
        ++pos_;
        idx = integer();
        if (!eat('}')) fail("expected '}'");
      } else {
        idx = integer();
      }
      return V(Polynomial::var(VarId{f, int(idx)}));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static V divide(const V& a, const V& b);
  static V inverse_power(const V& base, long e);

  std::string_view s_;
  size_t pos_ = 0;
};

template <>
Polynomial Parser<Polynomial>::divide(const Polynomial& a, const Polynomial& b) {
  return a.divide_exact(b);
}
template <>
Polynomial Parser<Polynomial>::inverse_power(const Polynomial&, long) {
  throw ParseError("negative power in polynomial expression");
}
template <>
RationalFunction Parser<RationalFunction>::divide(const RationalFunction& a, const RationalFunction& b) {
  return a / b;
}
template <>
RationalFunction Parser<RationalFunction>::inverse_power(const RationalFunction& base, long e) {
  return base.pow(-int(e));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser<Polynomial>(text).run(); }

RationalFunction parse_rational_function(std::string_view text) { return Parser<RationalFunction>(text).run(); }

}  // namespace qaff
