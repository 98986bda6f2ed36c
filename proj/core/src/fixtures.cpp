#include <regex>
#include <utility>

#include "checks.hpp"

namespace qaff::verify {

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;  // (coefficient, word)

class Fixtures {
 public:
  explicit Fixtures(Workspace& ws) : ws_(ws), n_(ws.n()) {}

  std::vector<FixtureResult> results;

  // "A13" abbreviates (a_1 - a_3); alpha_i is the simple root a_i - a_{i+1}.
  Polynomial poly(const std::string& text) const {
    static const std::regex pair(R"(A(\d)(\d))");
    Polynomial p = parse_polynomial(std::regex_replace(text, pair, "(a_$1-a_$2)"));
    std::unordered_map<uint32_t, Polynomial> roots;
    for (auto v : p.variables())
      if (v.family == Family::Aux) roots.emplace(v.key(), ws_.S.alpha(v.index));
    return ws_.S.reduce(p.substitute(roots));
  }
  RationalFunction frac(const std::string& num, const std::string& den) const {
    return RationalFunction(poly(num), poly(den));
  }
  ExtAffine w(const std::string& word) const { return parse_ext_affine(n_, word); }
  PetersonElement j(const std::string& word) const { return ws_.P.j(w(word)); }
  NilHeckeElement expansion(const Terms& terms) const {
    NilHeckeElement x(n_);
    for (auto& [c, word] : terms) x.add(w(word), poly(c));
    return x;
  }
  PetersonElement combination(const Terms& terms) const {
    PetersonElement x = ws_.P.zero();
    for (auto& [c, word] : terms) x = x + poly(c) * j(word);
    return x;
  }
  // Converts an expansion written in A' = -A: the coefficient of A_x in j_v picks up (-1)^{ℓ(x)-ℓ(v)}.
  NilHeckeElement from_primed(const std::string& v, const Terms& terms) const {
    NilHeckeElement x(n_);
    int lv = w(v).length();
    for (auto& [c, word] : terms) {
      Polynomial p = poly(c);
      x.add(w(word), (w(word).length() - lv) % 2 ? -p : p);
    }
    return x;
  }
  NilHeckeElement gr(const PetersonElement& a, const PetersonElement& b) const {
    return ws_.P.mul(a, b).element().grassmannian_part();
  }

  template <class T>
  void expect(const std::string& name, const T& got, const T& want) {
    FixtureResult r{name, got == want, ""};
    if (!r.pass) r.witness = name + ": got " + got.to_string() + ", expected " + want.to_string();
    results.push_back(std::move(r));
  }
  void expect_true(const std::string& name, bool ok, const std::string& detail) {
    results.push_back({name, ok, ok ? "" : name + ": " + detail});
  }
  void guard(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      results.push_back({name, false, name + ": " + e.what()});
    }
  }

  void j_list(const std::vector<std::pair<std::string, Terms>>& list) {
    for (auto& [v, terms] : list)
      guard("j[" + v + "]", [&] { expect("j[" + v + "]", j(v).element(), expansion(terms)); });
  }
  void psi_image(const std::string& name, const std::string& x, const RationalFunction& want) {
    guard(name, [&] { expect(name, ws_.C.apply_psi(poly(x)), want); });
  }

  void rank2();
  void rank3();
  void rank4();

 private:
  Workspace& ws_;
  int n_;
};

void Fixtures::rank2() {
  j_list({{"id", {{"1", "id"}}},
          {"tau", {{"1", "tau"}, {"-alpha_1", "tau s1"}}},
          {"s0", {{"1", "s0"}, {"1", "s1"}, {"-alpha_1", "s0 s1"}}},
          {"tau s0", {{"1", "tau s0"}, {"1", "tau s1"}}},
          {"s1 s0", {{"1", "s1 s0"}, {"1", "s0 s1"}}},
          {"tau s1 s0", {{"1", "tau s1 s0"}, {"1", "tau s0 s1"}, {"-alpha_1", "tau s1 s0 s1"}}},
          {"s0 s1 s0", {{"1", "s0 s1 s0"}, {"1", "s1 s0 s1"}, {"-alpha_1", "s0 s1 s0 s1"}}},
          {"tau s0 s1 s0", {{"1", "tau s0 s1 s0"}, {"1", "tau s1 s0 s1"}}},
          {"s1 s0 s1 s0", {{"1", "s1 s0 s1 s0"}, {"1", "s0 s1 s0 s1"}}}});

  struct Product {
    std::string a, b;
    Terms rhs;
  };
  std::vector<Product> products{{"tau", "tau", {{"1", "id"}, {"-alpha_1", "s0"}}},
                                {"tau", "s0", {{"1", "tau s0"}, {"-alpha_1", "tau s1 s0"}}},
                                {"tau", "tau s0", {{"1", "s0"}}},
                                {"tau", "s1 s0", {{"1", "tau s1 s0"}}},
                                {"tau", "tau s1 s0", {{"1", "s1 s0"}, {"-alpha_1", "s0 s1 s0"}}},
                                {"tau s0", "s0", {{"1", "tau s1 s0"}}},
                                {"tau s0", "tau s0", {{"1", "s1 s0"}}},
                                {"tau s0", "s1 s0", {{"1", "tau s0 s1 s0"}}},
                                {"s0", "s1 s0", {{"1", "s0 s1 s0"}}},
                                // printed with the A' sign as j_0^2 = j_10 + alpha_1 j_010
                                {"s0", "s0", {{"1", "s1 s0"}, {"-alpha_1", "s0 s1 s0"}}}};
  for (auto& p : products) {
    std::string name = "j[" + p.a + "]*j[" + p.b + "]";
    guard(name, [&] { expect(name, ws_.P.mul(j(p.a), j(p.b)), combination(p.rhs)); });
  }

  guard("coproduct j[tau]", [&] {
    auto x = j("tau").element();
    expect("coproduct j[tau]", ws_.H.coproduct(x), tensor(x, x));
  });
  guard("coproduct j[s0]", [&] {
    auto x = j("s0").element();
    auto one = NilHeckeElement::scalar(2, 1);
    expect("coproduct j[s0]", ws_.H.coproduct(x), tensor(one, x) + tensor(x, one) - poly("alpha_1") * tensor(x, x));
  });
  guard("coproduct j[tau s0]", [&] {
    auto x = j("tau s0").element();
    auto t = j("tau").element();
    expect("coproduct j[tau s0]", ws_.H.coproduct(x), tensor(x, t) + tensor(t, x) + poly("alpha_1") * tensor(x, x));
  });
  expect_true("tau = s1 t_{-w1}", w("tau") == ExtAffine::s(2, 1) * ExtAffine::translation({-1, 0}),
              "s1 t_{-w1} = " + (ExtAffine::s(2, 1) * ExtAffine::translation({-1, 0})).word_string());
  expect_true("t_{-alpha1} = s1 s0", ExtAffine::translation({-1, 1}) == w("s1 s0"),
              "t_{-alpha1} = " + ExtAffine::translation({-1, 1}).word_string());

  const auto& C = ws_.C;
  expect("matrix(1,1)", C.entry(1, 1), poly("1"));
  expect("matrix(1,2)", C.entry(1, 2), poly("g_1"));
  expect("matrix(2,1)", C.entry(2, 1), poly("0"));
  expect("matrix(2,2)", C.entry(2, 2), poly("1 + A12*g_1"));
  expect("D_1", C.D(1), poly("g_1"));
  expect("D_0", C.D(0), poly("1 + alpha_1*g_1"));
  expect("u^-1(2,1)", C.u_inv(2, 1), frac("1", "g_1"));
  expect("q_1", C.psi_q(1), frac("1 + alpha_1*g_1", "g_1^2"));
  expect("x_1", C.psi_partial_sum(1), frac("a_1*g_1 + 1", "g_1"));
  expect("x_1+x_2", C.psi_partial_sum(2), frac("a_1 + a_2", "1"));
  psi_image("x_1-t_1", "x_1 - a_1", frac("1", "g_1"));
  guard("1/q_1", [&] { expect("1/q_1", RationalFunction(1) / C.psi_q(1), frac("g_1^2", "1 + alpha_1*g_1")); });
  guard("(x_1-t_1+alpha_1)/q_1", [&] {
    expect("(x_1-t_1+alpha_1)/q_1", C.apply_psi(poly("x_1 - a_1 + alpha_1")) / C.psi_q(1), frac("g_1", "1"));
  });
  // printed with the A' sign as -g_1/(1+alpha_1 g_1)
  guard("(x_1-t_1)/q_1", [&] {
    expect("(x_1-t_1)/q_1", C.apply_psi(poly("x_1 - a_1")) / C.psi_q(1), frac("g_1", "1 + alpha_1*g_1"));
  });

  const auto& phi = ws_.phi;
  guard("phi(z) relations", [&] {
    auto z11 = phi.entry(1, 1), z12 = phi.entry(1, 2), z22 = phi.entry(2, 2);
    auto j0 = j("s0"), j10 = j("s1 s0");
    auto& P = ws_.P;
    expect("D_1/D_0 -> j_0", z12.element().grassmannian_part(), gr(j0, z22));
    expect("1/D_1 -> j_0/j_10", gr(j0, z12), gr(j10, z11));
    expect("1/D_0 -> j_0^2/j_10", gr(P.mul(j0, j0), z22), gr(j10, z11));
    expect("1/q_1 -> j_10", gr(z12, z12), gr(P.mul(j10, z11), z22));
    // printed with the A' sign as g_1 = -j_0/(1+alpha_1 j_0)
    expect("g_1 = j_0/(1-alpha_1 j_0)", gr(z12, P.one() - poly("alpha_1") * j0), gr(j0, z11));
  });

  for (int i = 1; i <= 3; ++i) {
    std::string a = "s0", b = "s1", ab = "";
    for (int r = 1; r < i; ++r) {
      a += " s1 s0";
      b += " s0 s1";
    }
    for (int r = 0; r < i; ++r) ab += (r ? " " : "") + std::string("s0 s1");
    std::string ba;
    for (int r = 0; r < i; ++r) ba += (r ? " " : "") + std::string("s1 s0");
    // printed with the A' sign (+alpha_1)
    guard("j[" + a + "]", [&] { expect("j[" + a + "]", j(a).element(), from_primed(a, {{"1", a}, {"1", b}, {"alpha_1", ab}})); });
    guard("j[" + ba + "]", [&] { expect("j[" + ba + "]", j(ba).element(), expansion({{"1", ba}, {"1", ab}})); });
  }
}

void Fixtures::rank3() {
  j_list({{"tau", {{"1", "tau"}, {"-alpha_1", "tau s1"}, {"-(alpha_1+alpha_2)", "tau s2"}, {"alpha_1*(alpha_1+alpha_2)", "tau s2 s1"}}},
          {"tau s0",
           {{"1", "tau s0"}, {"1", "tau s1"}, {"1", "tau s2"}, {"-alpha_2", "tau s0 s2"}, {"-(alpha_1+alpha_2)", "tau s2 s1"}}},
          {"tau s1 s0", {{"1", "tau s1 s0"}, {"1", "tau s2 s1"}, {"1", "tau s0 s2"}}}});

  const auto& C = ws_.C;
  const char* A[3][3] = {{"1", "g_1", "g_2"},
                         {"0", "1 + A12*g_1", "g_1 + A13*g_2"},
                         {"0", "0", "1 + A13*g_1 + A13*A23*g_2"}};
  const char* Alow[3][3] = {{"1 - A13*g_1 + A13*A12*g_2", "g_1 - A13*g_2", "g_2"}, {"0", "1 - alpha_2*g_1", "g_1"}, {"0", "0", "1"}};
  auto low = C.lower_chart();
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) {
      std::string ij = std::to_string(i) + "," + std::to_string(k);
      expect("matrix(" + ij + ")", C.entry(i, k), poly(A[i - 1][k - 1]));
      expect("lower chart(" + ij + ")", low[i - 1][k - 1], poly(Alow[i - 1][k - 1]));
    }
  expect("D_2", C.D(2), poly("g_2"));
  expect("D_1", C.D(1), poly("g_1^2 - g_2 + A23*g_2*g_1"));
  expect("D_0", C.D(0), poly("(1 + A12*g_1)*(1 + A13*g_1 + A13*A23*g_2)"));
  const std::string D1 = "(g_1^2 - g_2 + A23*g_2*g_1)", D0 = "(1 + A12*g_1)*(1 + A13*g_1 + A13*A23*g_2)";
  expect("u^-1(2,1)", C.u_inv(2, 1), frac("g_1 + A13*g_2", D1));
  expect("u^-1(3,1)", C.u_inv(3, 1), frac("1", "g_2"));
  expect("u^-1(3,2)", C.u_inv(3, 2), frac("g_1", "g_2"));
  expect("q_1", C.psi_q(1), frac("g_2*" + D0, D1 + "^2"));
  expect("q_2", C.psi_q(2), frac(D1, "g_2^2"));
  expect("x_1", C.psi_partial_sum(1), frac("a_1*" + D1 + " + g_1 + A13*g_2", D1));
  expect("x_1+x_2", C.psi_partial_sum(2), frac("(a_1+a_2)*g_2 + g_1", "g_2"));
  expect("x_1+x_2+x_3", C.psi_partial_sum(3), frac("a_1+a_2+a_3", "1"));

  // printed with the A' sign
  guard("j[s0]", [&] {
    expect("j[s0]", j("s0").element(),
           from_primed("s0", {{"1", "s0"},
                              {"1", "s1"},
                              {"1", "s2"},
                              {"alpha_1+alpha_2", "s0 s1"},
                              {"alpha_1+alpha_2", "s0 s2"},
                              {"alpha_1", "s2 s1"},
                              {"alpha_2", "s1 s2"},
                              {"alpha_1*(alpha_1+alpha_2)", "s0 s2 s1"},
                              {"alpha_2*(alpha_1+alpha_2)", "s0 s1 s2"},
                              {"alpha_1*alpha_2", "s1 s2 s1"},
                              {"alpha_1*alpha_2*(alpha_1+alpha_2)", "s0 s1 s2 s1"}}));
  });
  guard("j[s1 s0]", [&] {
    expect("j[s1 s0]", j("s1 s0").element(),
           from_primed("s1 s0", {{"1", "s1 s0"},
                                 {"1", "s2 s1"},
                                 {"1", "s0 s2"},
                                 {"alpha_1+alpha_2", "s0 s1 s0"},
                                 {"alpha_1+alpha_2", "s0 s2 s1"},
                                 {"alpha_2", "s1 s2 s1"},
                                 {"alpha_2", "s1 s0 s2"},
                                 {"alpha_2*(alpha_1+alpha_2)", "s0 s1 s2 s1"},
                                 {"alpha_2*(alpha_1+alpha_2)", "s0 s1 s0 s2"}}));
  });
  // printed with the A' sign: every j_v carries (-1)^{ℓ(v)}
  guard("j[s0]^tau", [&] {
    expect("j[s0]^tau", ws_.P.j_twist(j("s0"), 1),
           combination({{"1", "s0"}, {"alpha_1", "s1 s0"}, {"alpha_1+alpha_2", "s2 s0"}, {"alpha_1*(alpha_1+alpha_2)", "s1 s2 s0"}}));
  });
  guard("j[s1 s0]^tau", [&] {
    expect("j[s1 s0]^tau", ws_.P.j_twist(j("s1 s0"), 1),
           combination({{"1", "s1 s0"}, {"alpha_1+alpha_2", "s2 s1 s0"}, {"alpha_1*(alpha_1+alpha_2)", "s1 s2 s1 s0"}}));
  });

  struct Sch {
    std::string w, poly, num, den;
  };
  const std::string a33 = "(1 + A13*g_1 + A13*A23*g_2)";
  std::vector<Sch> sch{{"id", "1", "g_2*" + D1, D0},
                       {"s1", "x_1 - a_1", "g_2*(g_1 + (alpha_1+alpha_2)*g_2)", D0},
                       {"s2", "x_1 + x_2 - a_1 - a_2", "g_1*" + D1, D0},
                       {"s1 s2", "(x_1-a_1)*(x_2-a_1) + q_1", D1, D0},
                       // printed as (x_1-t_1)(x_2-t_2) - q_1
                       {"s2 s1", "(x_1-a_1)*(x_1-a_2) - q_1", "g_2", a33},
                       {"s1 s2 s1", "(x_1-a_1)*(x_1-a_2)*(x_2-a_1) + q_1*(x_1-a_2)", "g_1 + alpha_2*g_2", a33}};
  for (auto& s : sch) {
    Perm p = parse_perm(3, s.w);
    guard("S[" + s.w + "]", [&] { expect("S[" + s.w + "]", ws_.schubert(p), poly(s.poly)); });
    guard("S[" + s.w + "]/(q_1 q_2)", [&] {
      expect("S[" + s.w + "]/(q_1 q_2)", C.apply_psi(ws_.schubert(p)) / (C.psi_q(1) * C.psi_q(2)), frac(s.num, s.den));
    });
  }
  expect("a_33", C.entry(3, 3), poly(a33));
}

void Fixtures::rank4() {
  const auto& C = ws_.C;
  const std::string D3 = "g_3", D2 = "(g_2^2 - g_3*g_1 + A34*g_3*g_2)";
  // printed with -(alpha_14 - alpha_23) g_22
  const std::string D1 =
      "(g_1^3 - 2*g_2*g_1 + g_3 - (A14+A23)*g_2^2 + (alpha_1-alpha_3)*g_3*g_1 + (A23+A24)*g_2*g_1^2"
      " + A23*A24*g_2^2*g_1 + A24*A34*g_3*g_1^2 - alpha_3*(A14+A23)*g_3*g_2 + A23*A24*A34*g_3*g_2*g_1)";
  const std::string D0 = "(1+alpha_1*g_1)*(1+A13*g_1+A13*A23*g_2)*(1+A14*g_1+A14*A24*g_2+A14*A24*A34*g_3)";
  expect("D_3", C.D(3), poly(D3));
  expect("D_2", C.D(2), poly(D2));
  expect("D_1", C.D(1), poly(D1));
  expect("D_0", C.D(0), poly(D0));
  expect("q_1", C.psi_q(1), frac(D2 + "*" + D0, D1 + "^2"));
  expect("q_2", C.psi_q(2), frac(D3 + "*" + D1, D2 + "^2"));
  expect("q_3", C.psi_q(3), frac(D2, D3 + "^2"));
  const std::string u21 =
      "(g_1^2 - g_2 + (A14+A23)*g_2*g_1 - A14*g_3 + A13*A14*g_2^2 - A14*(alpha_1-alpha_3)*g_3*g_1 + A13*A14*A34*g_3*g_2)";
  expect("u^-1(2,1)", C.u_inv(2, 1), frac(u21, D1));
  expect("u^-1(3,1)", C.u_inv(3, 1), frac("g_2 + A14*g_3", D2));
  expect("u^-1(3,2)", C.u_inv(3, 2), frac("g_2*g_1 - g_3 + A24*g_3*g_1", D2));
  expect("u^-1(4,1)", C.u_inv(4, 1), frac("1", D3));
  expect("u^-1(4,2)", C.u_inv(4, 2), frac("g_1", D3));
  expect("u^-1(4,3)", C.u_inv(4, 3), frac("g_2", D3));
  expect("x_1", C.psi_partial_sum(1), frac("a_1", "1") + frac(u21, D1));
  expect("x_1+x_2", C.psi_partial_sum(2), frac("a_1+a_2", "1") + frac("g_2*g_1 - g_3 + A24*g_3*g_1", D2));
  expect("x_1+x_2+x_3", C.psi_partial_sum(3), frac("a_1+a_2+a_3", "1") + frac("g_2", D3));
}

}  // namespace

std::vector<FixtureResult> run_fixtures(Workspace& ws) {
  Fixtures f(ws);
  if (ws.n() == 2) f.guard("rank 2", [&] { f.rank2(); });
  if (ws.n() == 3) f.guard("rank 3", [&] { f.rank3(); });
  if (ws.n() == 4) f.guard("rank 4", [&] { f.rank4(); });
  return f.results;
}

namespace detail {

Outcome check_fixtures(Workspace& ws) {
  Outcome o;
  for (auto& r : run_fixtures(ws)) {
    ++o.cases;
    if (!r.pass) o.fail(r.witness);
  }
  return o;
}

}  // namespace detail

}  // namespace qaff::verify
