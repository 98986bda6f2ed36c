#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qaff/verify.hpp"

using namespace qaff;

namespace {

std::vector<int> parse_int_csv(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-to-affine Schubert calculus toolkit"};
  app.require_subcommand(1);
  int status = 0;

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "Run the verification registry");
  verify->require_subcommand(1);
  auto* run = verify->add_subcommand("run", "Run checks and report");
  int max_n = 3;
  std::vector<int> ranks;
  std::vector<std::string> checks, mutate;
  std::string json_out, config_path;
  int threads = 0;
  run->add_option("--n", max_n, "Run ranks 2..N")->check(CLI::Range(2, 4));
  run->add_option("--rank", ranks, "Exact ranks (overrides --n)")->check(CLI::Range(2, 4));
  run->add_option("--check", checks, "Check id (repeatable)");
  run->add_option("--json", json_out, "Write the JSON report here");
  run->add_option("--config", config_path, "JSON config file");
  run->add_option("--mutate", mutate, "Negative control: commeqs, goal or schubert")
      ->check(CLI::IsMember({"commeqs", "goal", "schubert"}));
  run->add_option("--threads", threads, "Worker threads");
  run->callback([&] {
    verify::Config cfg = config_path.empty() ? verify::Config{} : verify::Config::from_json_text(slurp(config_path));
    if (config_path.empty() || run->count("--n")) {
      cfg.ranks.clear();
      for (int n = 2; n <= max_n; ++n) cfg.ranks.push_back(n);
    }
    if (!ranks.empty()) cfg.ranks = ranks;
    if (!checks.empty()) cfg.checks = checks;
    for (auto& c : cfg.checks)
      if (std::find(verify::registry().begin(), verify::registry().end(), c) == verify::registry().end())
        throw CLI::ValidationError("--check", "unknown check '" + c + "'");
    for (auto& m : mutate) {
      if (m == "commeqs") cfg.mutations.commeqs = true;
      if (m == "goal") cfg.mutations.goal = true;
      if (m == "schubert") cfg.mutations.schubert = true;
    }
    if (threads > 0) cfg.threads = threads;
    auto reports = verify::run_all(cfg);
    std::cout << verify::reports_to_table(reports);
    if (!json_out.empty()) std::ofstream(json_out) << verify::reports_to_json(reports) << "\n";
    for (auto& r : reports)
      if (!r.pass) status = 1;
  });
  auto* list = verify->add_subcommand("list", "List check ids");
  list->callback([&] {
    for (auto& id : verify::registry()) std::cout << id << "\n";
  });
  auto* fixtures = verify->add_subcommand("fixtures", "List every data fixture with its status");
  int fix_n = 3;
  fixtures->add_option("--n", fix_n, "Rank")->required()->check(CLI::Range(2, 4));
  fixtures->callback([&] {
    auto ws = verify::workspace(fix_n, {});
    for (auto& r : verify::run_fixtures(*ws)) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "\n";
      if (!r.pass) {
        std::cout << "    " << r.witness << "\n";
        status = 1;
      }
    }
  });

  // ---- compute ----
  auto* compute = app.add_subcommand("compute", "Compute individual objects");
  compute->require_subcommand(1);
  int n = 3;
  auto rank_opt = [&](CLI::App* c) { c->add_option("--n", n, "Rank")->required()->check(CLI::Range(2, kMaxRank)); };

  auto* schub = compute->add_subcommand("schubert", "Quantum double Schubert polynomial and its Kostant image");
  std::string wtext;
  bool classical = false;
  rank_opt(schub);
  schub->add_option("--w", wtext, "Permutation, e.g. \"s2 s1\" or [3,1,2]")->required();
  schub->add_flag("--classical", classical, "Classical double Schubert polynomial (q = 0)");
  schub->callback([&] {
    SRing S(n);
    Perm w = parse_perm(n, wtext);
    SchubertFamily F(S, SchubertOptions{!classical, false});
    Polynomial p = F(w);
    std::cout << "S_w = " << p.to_string() << "\n";
    if (!classical) {
      Centralizer C(S);
      auto lw = verify::derive_lambda_w(w, n);
      std::cout << "Psi(S_w) = " << C.apply_psi(p).to_string() << "\n";
      std::cout << "Psi(S_w) * prod D_i = " << C.psi_times(p, lw.descents).to_string() << "\n";
      std::cout << "w t_lambda = " << lw.wt.word_string() << " (k = " << lw.k << ", mu = " << lw.mu.to_string()
                << (lw.fits ? "" : ", outside the box") << ")\n";
    }
  });

  auto* lam = compute->add_subcommand("lambda", "Derive lambda(w), mu(w), k(w) and the denominators");
  rank_opt(lam);
  lam->add_option("--w", wtext, "Permutation")->required();
  lam->callback([&] {
    auto lw = verify::derive_lambda_w(parse_perm(n, wtext), n);
    std::cout << "lambda = [";
    for (size_t i = 0; i < lw.lambda.size(); ++i) std::cout << (i ? "," : "") << lw.lambda[i];
    std::cout << "]\nw t_lambda = " << lw.wt.word_string() << "\nk = " << lw.k << "\nmu = " << lw.mu.to_string()
              << "\ndenominators =";
    for (int i : lw.descents) std::cout << " D_" << i;
    std::cout << "\nfits box = " << (lw.fits ? "yes" : "no") << "\n";
  });

  auto* jclass = compute->add_subcommand("jclass", "j-basis element of the Peterson subalgebra");
  std::string word, method = "solve";
  rank_opt(jclass);
  jclass->add_option("--word", word, "Element, e.g. \"tau c2\" or \"s1 s0\"")->required();
  jclass->add_option("--method", method, "solve or construct")->check(CLI::IsMember({"solve", "construct"}));
  jclass->callback([&] {
    NilHecke H(n);
    Peterson P(H);
    ExtAffine w = parse_ext_affine(n, word);
    std::string route;
    PetersonElement j = method == "solve" ? P.j(w) : P.j_construct(w, &route);
    std::cout << "j[" << w.word_string() << "] = " << j.to_string() << "\n";
    if (!route.empty()) std::cout << "route: " << route << "\n";
  });

  auto* minor = compute->add_subcommand("minor", "Centralizer minor z_{lambda,k} and its image in the Peterson algebra");
  std::string lambda_text;
  int k = 1;
  rank_opt(minor);
  minor->add_option("--lambda", lambda_text, "Partition, comma separated");
  minor->add_option("--k", k, "Number of rows")->required();
  minor->callback([&] {
    SRing S(n);
    NilHecke H(n);
    Peterson P(H);
    Centralizer C(S);
    PhiTilde phi(P, C);
    Partition l(parse_int_csv(lambda_text));
    std::cout << "z = " << C.minor(l, k).to_string() << "\n";
    std::cout << "phi(z) Grassmannian part = " << phi.minor_grassmannian(l, k).to_string() << "\n";
  });

  auto* matrix = compute->add_subcommand("matrix", "Centralizer matrix in y-coordinates");
  bool lower = false;
  rank_opt(matrix);
  matrix->add_flag("--lower", lower, "Use the chart normalized by z_nn = 1");
  matrix->callback([&] {
    SRing S(n);
    Centralizer C(S);
    auto m = lower ? C.lower_chart() : C.matrix();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) std::cout << "z(" << i + 1 << "," << j + 1 << ") = " << m[i][j].to_string() << "\n";
    for (int i = 0; i <= n; ++i) std::cout << "D_" << i << " = " << C.D(i).to_string() << "\n";
  });

  auto* psi = compute->add_subcommand("psi", "Kostant substitution of a polynomial in x, q, a");
  std::string poly_text;
  rank_opt(psi);
  psi->add_option("--poly", poly_text, "Polynomial, e.g. \"x_1 - a_1\"")->required();
  psi->callback([&] {
    SRing S(n);
    Centralizer C(S);
    std::cout << C.apply_psi(S.reduce(parse_polynomial(poly_text))).to_string() << "\n";
  });

  auto* dual = compute->add_subcommand("dualschur", "Dual Schur function to bounded y-degree");
  int cutoff = 4;
  dual->add_option("--lambda", lambda_text, "Partition, comma separated")->required();
  dual->add_option("--cutoff", cutoff, "Truncation degree");
  dual->callback([&] {
    SymFunc F(cutoff);
    Partition l(parse_int_csv(lambda_text));
    std::cout << DualSchurName{l, 0}.to_string() << " = " << F.dual_schur(l).to_string() << "\n";
  });

  // ---- scan ----
  auto* scan = app.add_subcommand("scan", "Experiments");
  scan->require_subcommand(1);
  auto* pos = scan->add_subcommand("positivity", "Graham positivity of j-basis coefficients");
  int maxlen = 6;
  rank_opt(pos);
  pos->add_option("--maxlen", maxlen, "Largest length");
  pos->add_option("--json", json_out, "Write the JSON report here");
  pos->callback([&] {
    NilHecke H(n);
    Peterson P(H);
    auto rep = P.positivity_scan(maxlen);
    for (auto& e : rep.entries)
      std::cout << (e.positive ? "ok   " : "FAIL ") << (e.extended ? "ext " : "    ") << e.w.word_string()
                << (e.positive ? "" : "  " + e.witness) << "\n";
    std::cout << rep.entries.size() << " classes, " << rep.violations(false) << " violations, "
              << rep.violations(true) << " violations among extended classes\n";
    if (!json_out.empty()) {
      std::vector<verify::Report> reports;
      for (auto& e : rep.entries)
        reports.push_back({"positivity:" + e.w.word_string(), n, e.positive, e.extended ? "extended" : "", e.witness, 0});
      std::ofstream(json_out) << verify::reports_to_json(reports) << "\n";
    }
    if (rep.violations(false) + rep.violations(true) > 0) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
