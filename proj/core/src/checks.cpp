#include <functional>
#include <set>

#include "checks.hpp"

namespace qaff::verify::detail {

namespace {

Coweight negated(Coweight c) {
  for (auto& x : c) x = -x;
  return c;
}

std::vector<std::vector<int>> reduced_words(const ExtAffine& u) {
  if (u.length() == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < u.n(); ++i) {
    if (!u.has_left_descent(i)) continue;
    for (auto& rest : reduced_words(u.mul_s_left(i))) {
      std::vector<int> w{i};
      w.insert(w.end(), rest.begin(), rest.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::string word_text(const std::vector<int>& word) {
  std::string s;
  for (int i : word) s += (s.empty() ? "s" : " s") + std::to_string(i);
  return s.empty() ? "id" : s;
}

}  // namespace

Outcome check_kostant_ideal(Workspace& ws) {
  Outcome o;
  auto gens = kim_ideal_generators(ws.S);
  for (size_t j = 0; j < gens.size(); ++j) {
    ++o.cases;
    RationalFunction img = ws.C.apply_psi(gens[j]);
    if (!img.is_zero())
      o.fail("j=" + std::to_string(j + 1) + ": Psi(g_j - e_j(a)) = " + img.to_string() + ", expected 0");
  }
  return o;
}

Outcome check_mapdet(Workspace& ws) {
  Outcome o;
  const int n = ws.n();
  for (int k = 0; k <= n; ++k) {
    for (auto& lam : partitions_in_box(k, n - k)) {
      ++o.cases;
      ExtAffine target = ExtAffine::tau(n, k) * partition_to_grassmannian(lam, n);
      std::string tag = "z_{" + lam.to_string() + "," + std::to_string(k) + "}";
      try {
        NilHeckeElement gr = ws.phi.minor_grassmannian(lam, k);
        if (gr != NilHeckeElement::basis(target)) {
          o.fail(tag + ": Grassmannian part of phi(minor) = " + gr.to_string() + ", expected A[" +
                 target.word_string() + "]");
          continue;
        }
        if (n <= 3) {
          PetersonElement full = ws.phi.minor(lam, k);
          PetersonElement oracle = ws.P.j(target);
          if (full != oracle)
            o.fail(tag + ": phi(minor) = " + full.to_string() + ", linear-solve j = " + oracle.to_string());
        }
      } catch (const std::exception& e) {
        o.fail(tag + ": " + e.what());
      }
    }
  }
  ++o.cases;
  std::string wit;
  if (!ws.phi.check_recursion(&wit)) o.fail("entry recursion: " + wit);
  o.summary = n <= 3 ? "full B_e comparison against linear solve" : "Grassmannian parts";
  return o;
}

Outcome check_dtoj(Workspace& ws) {
  Outcome o;
  const int n = ws.n();
  for (int i = 0; i < n; ++i) {
    Coweight lam = negated(fundamental_coweight(n, i));
    ExtAffine t = ExtAffine::translation(lam);
    ++o.cases;
    try {
      NilHeckeElement gr = ws.phi.minor_grassmannian(Centralizer::R(n, i), n - i);
      if (gr != NilHeckeElement::basis(t))
        o.fail("D_" + std::to_string(i) + ": Grassmannian part " + gr.to_string() + ", expected A[" + t.word_string() + "]");
      else if (n <= 3) {
        PetersonElement full = ws.phi.minor(Centralizer::R(n, i), n - i);
        PetersonElement jt = ws.P.j_translation(lam);
        if (full != jt) o.fail("D_" + std::to_string(i) + ": phi = " + full.to_string() + ", j_t = " + jt.to_string());
      }
    } catch (const std::exception& e) {
      o.fail("D_" + std::to_string(i) + ": " + e.what());
    }
    if (i == 0) continue;
    ++o.cases;
    ExtAffine st = ExtAffine::s(n, i) * t;
    try {
      NilHeckeElement gr = ws.phi.minor_grassmannian(Centralizer::R_prime(n, i), n - i);
      if (gr != NilHeckeElement::basis(st))
        o.fail("D'_" + std::to_string(i) + ": Grassmannian part " + gr.to_string() + ", expected A[" + st.word_string() + "]");
      else if (n <= 3) {
        PetersonElement full = ws.phi.minor(Centralizer::R_prime(n, i), n - i);
        PetersonElement oracle = ws.P.j(st);
        if (full != oracle) o.fail("D'_" + std::to_string(i) + ": phi = " + full.to_string() + ", j = " + oracle.to_string());
      }
    } catch (const std::exception& e) {
      o.fail("D'_" + std::to_string(i) + ": " + e.what());
    }
  }
  return o;
}

Outcome check_main_theorem(Workspace& ws) {
  Outcome o;
  const int n = ws.n();
  int fitted = 0;
  for (auto& w : all_perms(n)) {
    ++o.cases;
    std::string tag = "w=" + perm_to_string(w);
    try {
      LambdaW lw = derive_lambda_w(w, n);
      Polynomial pw = ws.C.psi_times(ws.schubert(w), lw.descents);
      if (lw.fits) {
        ++fitted;
        Polynomial expected = ws.S.reduce(ws.C.minor(lw.mu, lw.k) * ws.C.D(0).pow((lw.degree - lw.k) / n));
        if (pw != expected) {
          o.fail(tag + ": Psi(S_w)*prod D_i = " + pw.to_string() + ", expected minor z_{" + lw.mu.to_string() + "," +
                 std::to_string(lw.k) + "}*D_0^" + std::to_string((lw.degree - lw.k) / n) + " = " + expected.to_string());
          continue;
        }
        PetersonElement viatwist =
            ws.P.mul(ws.P.j_tau(lw.k), ws.P.j_twist(ws.P.j_partition(lw.mu, lw.k), lw.k));
        if (viatwist.element().grassmannian_part() != NilHeckeElement::basis(lw.wt)) {
          o.fail(tag + ": j_tau^k * j_mu^tau^k has Grassmannian part " +
                 viatwist.element().grassmannian_part().to_string() + ", expected A[" + lw.wt.word_string() + "]");
          continue;
        }
      }
      NilHeckeElement img = ws.phi.homogeneous_image(pw, lw.degree);
      if (img != NilHeckeElement::basis(lw.wt))
        o.fail(tag + ": phi(Psi(S_w)*prod D_i) has Grassmannian part " + img.to_string() + ", expected A[" +
               lw.wt.word_string() + "]");
    } catch (const std::exception& e) {
      o.fail(tag + ": " + e.what());
    }
  }
  o.summary = std::to_string(fitted) + " compared with centralizer minors, all compared in B_e";
  return o;
}

Outcome check_jbasis(Workspace& ws, int maxlen) {
  Outcome o;
  const int n = ws.n();
  for (auto& w : grassmannian_elements(n, maxlen)) {
    ++o.cases;
    std::string route;
    try {
      PetersonElement c = ws.P.j_construct(w, &route);
      PetersonElement::certify(ws.H, c.element());
      PetersonElement oracle = ws.P.j(w);
      if (c != oracle)
        o.fail(w.word_string() + " via " + route + ": constructed " + c.to_string() + ", linear solve " + oracle.to_string());
    } catch (const std::exception& e) {
      o.fail(w.word_string() + (route.empty() ? "" : " via " + route) + ": " + e.what());
    }
  }
  for (int k = 1; k < n; ++k) {
    for (auto& lam : partitions_in_box(k, n - k)) {
      ExtAffine w = ExtAffine::tau(n, k) * partition_to_grassmannian(lam, n);
      if (w.length() > maxlen) continue;
      ++o.cases;
      try {
        PetersonElement c = ws.P.mul(ws.P.j_tau(k), ws.P.j_twist(ws.P.j_partition(lam, k), k));
        PetersonElement::certify(ws.H, c.element());
        if (c != ws.P.j(w)) o.fail("tau^" + std::to_string(k) + " w_" + lam.to_string() + ": twisted determinant differs");
      } catch (const std::exception& e) {
        o.fail("tau^" + std::to_string(k) + " w_" + lam.to_string() + ": " + e.what());
      }
    }
  }
  return o;
}

Outcome check_positivity(Workspace& ws, int maxlen) {
  Outcome o;
  PositivityReport rep = ws.P.positivity_scan(maxlen);
  int ext = 0, ext_bad = 0;
  for (auto& e : rep.entries) {
    ++o.cases;
    if (e.extended) {
      ++ext;
      if (!e.positive) ++ext_bad;
    }
    if (!e.positive) o.fail((e.extended ? "extended " : "") + e.w.word_string() + ": " + e.witness);
  }
  o.summary = "extended classes (conjectural): " + std::to_string(ext) + " scanned, " + std::to_string(ext_bad) +
              " violations";
  return o;
}

Outcome check_hopf(Workspace& ws, int maxlen) {
  Outcome o;
  const int n = ws.n();
  Coweight mu(n, -1);
  for (;;) {
    ++o.cases;
    NilHeckeElement t = ws.H.expand_group(ExtAffine::translation(mu));
    if (ws.H.coproduct(t) != tensor(t, t)) {
      std::string s;
      for (int x : mu) s += (s.empty() ? "" : ",") + std::to_string(x);
      o.fail("Delta(t_[" + s + "]) is not group-like");
    }
    int i = 0;
    while (i < n && mu[i] == 1) mu[i++] = -1;
    if (i == n) break;
    ++mu[i];
  }
  if (n == 2) {
    ++o.cases;
    PetersonElement j0 = ws.P.j(ExtAffine::s(2, 0));
    NilHeckeElement one = NilHeckeElement::scalar(2, 1);
    TensorElement expected = tensor(one, j0.element()) + tensor(j0.element(), one) -
                             ws.S.alpha(1) * tensor(j0.element(), j0.element());
    TensorElement got = ws.H.coproduct(j0.element());
    if (got != expected) o.fail("Delta(j_0) = " + got.to_string() + ", expected " + expected.to_string());
  }
  for (int k = 0; k < n; ++k) {
    for (auto& w : elements_up_to(n, 0, maxlen)) {
      auto words = reduced_words(w);
      ++o.cases;
      TensorElement base = ws.H.coproduct_word(k, words[0]);
      for (size_t i = 1; i < words.size(); ++i) {
        if (ws.H.coproduct_word(k, words[i]) != base) {
          o.fail("tau^" + std::to_string(k) + ": coproduct along " + word_text(words[i]) + " differs from " +
                 word_text(words[0]));
          break;
        }
      }
    }
  }
  return o;
}

Outcome check_jacobi_trudi(int cutoff, int max_size) {
  Outcome o;
  SymFunc& F = symfunc(cutoff);
  const VarId t{Family::Aux, 0};
  Polynomial lhs, rhs_e, rhs_h;
  for (int j = 0; j <= cutoff; ++j) {
    ++o.cases;
    TruncatedSeries e = F.dual_e(j);
    for (int i : e.a_indices())
      if (i < 0 || i > j) o.fail("e-hat_" + std::to_string(j) + " involves a_" + std::to_string(i));
    if (classical_limit(e) != TruncatedSeries::e(j, cutoff)) o.fail("e-hat_" + std::to_string(j) + " at a=0 is not e_j");
    if (omega(omega(e)) != e || eta(eta(e)) != e) o.fail("omega or eta is not an involution on e-hat_" + std::to_string(j));
    Polynomial prod(1);
    for (int i = 0; i < j; ++i) prod *= Polynomial::var(t) + Polynomial::var(var_a(i));
    lhs += prod * e.poly();
    rhs_e += Polynomial::var(t).pow(j) * TruncatedSeries::e(j, cutoff).poly();
    rhs_h += Polynomial::var(var_a(0)).pow(j) * TruncatedSeries::h(j, cutoff).poly();
  }
  ++o.cases;
  if (TruncatedSeries(lhs, cutoff) != TruncatedSeries(rhs_e, cutoff) * TruncatedSeries(rhs_h, cutoff))
    o.fail("generating function of e-hat does not match prod (1+t y)/(1-a_0 y)");
  for (int s = 0; s <= max_size; ++s) {
    for (auto& lam : partitions_of(s)) {
      ++o.cases;
      std::string tag = "lambda=" + lam.to_string();
      try {
        TruncatedSeries sh = F.dual_schur(lam);
        TruncatedSeries st = F.dual_schur(lam.transpose());
        if (omega(eta(sh)) != st) o.fail(tag + ": s-hat^(omega eta) differs from s-hat of the transpose");
        TruncatedSeries classical = F.schur(lam);
        if (classical_limit(sh) != classical) o.fail(tag + ": a=0 limit is not the Schur function");
        Partition tr = lam.transpose();
        Matrix<TruncatedSeries> m(tr.length(), std::vector<TruncatedSeries>(tr.length()));
        for (int i = 0; i < tr.length(); ++i)
          for (int j = 0; j < tr.length(); ++j) m[i][j] = TruncatedSeries::e(tr[i] - i + j, cutoff);
        TruncatedSeries dual = det(m, TruncatedSeries(Polynomial(), cutoff), TruncatedSeries(Polynomial(1), cutoff));
        if (dual != classical) o.fail(tag + ": h- and e-Jacobi-Trudi Schur functions differ");
        for (int k = std::max(1, lam.length()); k <= lam.length() + 1; ++k)
          if (F.special_determinant(lam, k) != st)
            o.fail(tag + ": det(e-hat^(tau^(1-j))) with " + std::to_string(k) + " rows differs from s-hat of the transpose");
      } catch (const std::exception& e) {
        o.fail(tag + ": " + e.what());
      }
    }
  }
  return o;
}

}  // namespace qaff::verify::detail
