#include "qaff/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <json.hpp>
#include <mutex>
#include <sstream>
#include <thread>

#include "checks.hpp"

namespace qaff::verify {

using nlohmann::json;

std::string Mutations::to_string() const {
  std::vector<std::string> on;
  if (commeqs) on.push_back("commeqs");
  if (goal) on.push_back("goal");
  if (schubert) on.push_back("schubert");
  if (on.empty()) return "none";
  std::string s;
  for (size_t i = 0; i < on.size(); ++i) s += (i ? "," : "") + on[i];
  return s;
}

Config Config::from_json_text(const std::string& text) {
  Config c;
  json j = json::parse(text);
  for (auto& [key, value] : j.items()) {
    if (key == "checks")
      c.checks = value.get<std::vector<std::string>>();
    else if (key == "ranks")
      c.ranks = value.get<std::vector<int>>();
    else if (key == "max_rank")
      for (auto& [id, r] : value.items()) c.max_rank[id] = r.get<int>();
    else if (key == "jbasis_maxlen")
      c.jbasis_maxlen = value.get<int>();
    else if (key == "positivity_maxlen")
      c.positivity_maxlen = value.get<int>();
    else if (key == "hopf_maxlen")
      c.hopf_maxlen = value.get<int>();
    else if (key == "symfunc_cutoff")
      c.symfunc_cutoff = value.get<int>();
    else if (key == "symfunc_max_size")
      c.symfunc_max_size = value.get<int>();
    else if (key == "threads")
      c.threads = value.get<int>();
    else if (key == "mutations") {
      for (auto& m : value.get<std::vector<std::string>>()) {
        if (m == "commeqs")
          c.mutations.commeqs = true;
        else if (m == "goal")
          c.mutations.goal = true;
        else if (m == "schubert")
          c.mutations.schubert = true;
        else
          throw std::invalid_argument("unknown mutation '" + m + "'");
      }
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  for (auto& id : c.checks)
    if (std::find(registry().begin(), registry().end(), id) == registry().end())
      throw std::invalid_argument("unknown check '" + id + "'");
  return c;
}

std::string Config::to_json_text() const {
  json j;
  j["checks"] = checks;
  j["ranks"] = ranks;
  j["max_rank"] = max_rank;
  j["jbasis_maxlen"] = jbasis_maxlen;
  j["positivity_maxlen"] = positivity_maxlen;
  j["hopf_maxlen"] = hopf_maxlen;
  j["symfunc_cutoff"] = symfunc_cutoff;
  j["symfunc_max_size"] = symfunc_max_size;
  j["threads"] = threads;
  std::vector<std::string> m;
  if (mutations.commeqs) m.push_back("commeqs");
  if (mutations.goal) m.push_back("goal");
  if (mutations.schubert) m.push_back("schubert");
  j["mutations"] = m;
  return j.dump(2);
}

std::string Report::case_name() const { return n ? check + "/n=" + std::to_string(n) : check; }

const std::vector<std::string>& registry() {
  static const std::vector<std::string> ids{"kostant-ideal", "fixtures", "mapdet",     "dtoj",   "main-theorem",
                                            "jbasis",        "jacobi-trudi", "positivity", "hopf"};
  return ids;
}

bool is_rank_independent(const std::string& id) { return id == "jacobi-trudi"; }

LambdaW derive_lambda_w(const Perm& w, int n) {
  if (int(w.size()) != n) throw std::invalid_argument("permutation has wrong size");
  LambdaW r;
  r.descents = perm_right_descents(w);
  r.lambda.assign(n, 0);
  for (int i : r.descents) {
    Coweight o = fundamental_coweight(n, i);
    for (int k = 0; k < n; ++k) r.lambda[k] -= o[k];
    r.degree += n - i;
  }
  r.wt = ExtAffine::from_window(w) * ExtAffine::translation(r.lambda);
  if (!r.wt.is_grassmannian()) throw std::logic_error("w t_lambda is not Grassmannian for " + perm_to_string(w));
  auto [k, u] = factor_sigma(r.wt);
  r.k = k;
  r.u = u;
  r.mu = grassmannian_to_partition(u);
  r.fits = r.mu.fits_box(k, n - k);
  return r;
}

Workspace::Workspace(int n, const Mutations& m)
    : S(n),
      H(n),
      P(H, PetersonOptions{m.goal}),
      C(S, CentralizerOptions{m.commeqs}),
      phi(P, C),
      schubert(S, SchubertOptions{true, m.schubert}) {}

std::shared_ptr<Workspace> workspace(int n, const Mutations& m) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::shared_ptr<Workspace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, m.to_string()}];
  if (!slot) slot = std::make_shared<Workspace>(n, m);
  return slot;
}

SymFunc& symfunc(int cutoff) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymFunc>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[cutoff];
  if (!slot) slot = std::make_unique<SymFunc>(cutoff);
  return *slot;
}

Report run_check(const std::string& id, int n, const Config& cfg) {
  Report r;
  r.check = id;
  r.n = n;
  auto start = std::chrono::steady_clock::now();
  detail::Outcome o;
  try {
    if (id == "jacobi-trudi") {
      o = detail::check_jacobi_trudi(cfg.symfunc_cutoff, cfg.symfunc_max_size);
    } else {
      auto ws = workspace(n, cfg.mutations);
      if (id == "kostant-ideal")
        o = detail::check_kostant_ideal(*ws);
      else if (id == "fixtures")
        o = detail::check_fixtures(*ws);
      else if (id == "mapdet")
        o = detail::check_mapdet(*ws);
      else if (id == "dtoj")
        o = detail::check_dtoj(*ws);
      else if (id == "main-theorem")
        o = detail::check_main_theorem(*ws);
      else if (id == "jbasis")
        o = detail::check_jbasis(*ws, cfg.jbasis_maxlen);
      else if (id == "positivity")
        o = detail::check_positivity(*ws, cfg.positivity_maxlen);
      else if (id == "hopf")
        o = detail::check_hopf(*ws, cfg.hopf_maxlen);
      else
        throw std::invalid_argument("unknown check '" + id + "'");
    }
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.pass = o.pass();
  if (o.cases == 0 && o.witness.empty()) o.witness = "no cases ran";
  r.summary = std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) + " cases";
  if (!o.summary.empty()) r.summary += "; " + o.summary;
  if (!r.pass) r.witness = o.witness;
  return r;
}

std::vector<Report> run_all(const Config& cfg) {
  std::vector<std::pair<std::string, int>> cases;
  const auto& ids = cfg.checks.empty() ? registry() : cfg.checks;
  for (auto& id : ids) {
    if (is_rank_independent(id)) {
      cases.emplace_back(id, 0);
      continue;
    }
    auto lim = cfg.max_rank.find(id);
    for (int n : cfg.ranks)
      if (lim == cfg.max_rank.end() || n <= lim->second) cases.emplace_back(id, n);
  }
  std::vector<Report> out(cases.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < cases.size();) out[i] = run_check(cases[i].first, cases[i].second, cfg);
  };
  int threads = std::max(1, std::min<int>(cfg.threads, int(cases.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string reports_to_json(const std::vector<Report>& reports) {
  json arr = json::array();
  for (auto& r : reports) {
    json j;
    j["case"] = r.case_name();
    j["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) j["witness"] = r.witness;
    j["millis"] = std::llround(r.millis);
    j["summary"] = r.summary;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string reports_to_table(const std::vector<Report>& reports) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-22s %-6s %10s  %s\n", "case", "status", "millis", "summary");
  os << line;
  for (auto& r : reports) {
    std::snprintf(line, sizeof line, "%-22s %-6s %10lld  ", r.case_name().c_str(), r.pass ? "PASS" : "FAIL",
                  static_cast<long long>(std::llround(r.millis)));
    os << line << r.summary << "\n";
    if (!r.pass) os << "    witness: " << r.witness << "\n";
  }
  return os.str();
}

}  // namespace qaff::verify
