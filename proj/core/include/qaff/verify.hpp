#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qaff/centralizer.hpp"
#include "qaff/peterson.hpp"
#include "qaff/schubert.hpp"
#include "qaff/symfunc.hpp"

namespace qaff::verify {

// Single-sign corruptions used as negative controls.
struct Mutations {
  bool commeqs = false;   // centralizer matrix recursion
  bool goal = false;      // j_{τ^k c_p} recursion
  bool schubert = false;  // divided-difference recursion for quantum Schubert polynomials
  bool any() const { return commeqs || goal || schubert; }
  std::string to_string() const;
};

struct Config {
  std::vector<std::string> checks;  // empty means the whole registry
  std::vector<int> ranks{2, 3, 4};
  // Largest rank per check; checks without an entry run at every rank.
  std::map<std::string, int> max_rank{{"positivity", 3}, {"hopf", 3}, {"jbasis", 3}};
  int jbasis_maxlen = 6;
  int positivity_maxlen = 6;
  int hopf_maxlen = 6;
  int symfunc_cutoff = 8;
  int symfunc_max_size = 6;
  int threads = 1;
  Mutations mutations;

  // Reads the JSON form; unknown keys are rejected.
  static Config from_json_text(const std::string& text);
  std::string to_json_text() const;
};

struct Report {
  std::string check;
  int n = 0;  // 0 for rank-independent checks
  bool pass = false;
  std::string summary;
  std::string witness;  // set on failure
  double millis = 0;

  std::string case_name() const;
};

const std::vector<std::string>& registry();
bool is_rank_independent(const std::string& id);

struct LambdaW {
  std::vector<int> descents;
  Coweight lambda;       // -Σ_{i ∈ Des(w)} ω_i
  ExtAffine wt;          // w t_λ, Grassmannian
  int k = 0;             // w t_λ = τ^k u
  ExtAffine u;
  Partition mu;          // u = w_μ
  int degree = 0;        // Σ_{i ∈ Des(w)} (n - i)
  bool fits = false;     // μ fits the k × (n-k) box
};

LambdaW derive_lambda_w(const Perm& w, int n);

// All per-rank objects, built with the given mutations.
class Workspace {
 public:
  Workspace(int n, const Mutations& m);
  int n() const { return S.n(); }

  SRing S;
  NilHecke H;
  Peterson P;
  Centralizer C;
  PhiTilde phi;
  SchubertFamily schubert;
};

// Shared workspaces keyed by (n, mutations).
std::shared_ptr<Workspace> workspace(int n, const Mutations& m);
SymFunc& symfunc(int cutoff);

Report run_check(const std::string& id, int n, const Config& cfg);
std::vector<Report> run_all(const Config& cfg);

std::string reports_to_json(const std::vector<Report>& reports);
std::string reports_to_table(const std::vector<Report>& reports);

// Individual fixture lines, for listing and for the fixtures check.
struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string witness;
};
std::vector<FixtureResult> run_fixtures(Workspace& ws);

}  // namespace qaff::verify
