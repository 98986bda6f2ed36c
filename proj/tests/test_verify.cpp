#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "qaff/verify.hpp"

using namespace qaff;
using namespace qaff::verify;

TEST_SUITE("verify") {

TEST_CASE("lambda(w) for the identity") {
  auto lw = derive_lambda_w(perm_identity(3), 3);
  CHECK(lw.descents.empty());
  CHECK(lw.k == 0);
  CHECK(lw.mu == Partition());
  CHECK(lw.degree == 0);
  CHECK(lw.fits);
}

TEST_CASE("lambda(w) for simple reflections") {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i) {
      auto lw = derive_lambda_w(perm_s(n, i), n);
      CHECK(lw.descents == std::vector<int>{i});
      Coweight expect(n, 0);
      for (int j = 0; j < i; ++j) expect[j] = -1;
      CHECK(lw.lambda == expect);
      CHECK(lw.wt == ExtAffine::s(n, i) * ExtAffine::translation(expect));
      CHECK(lw.wt.is_grassmannian());
      CHECK(lw.degree == n - i);
      CHECK(ExtAffine::tau(n, lw.k) * lw.u == lw.wt);
    }
}

TEST_CASE("lambda(w) for s2 s1 at n = 3") {
  auto lw = derive_lambda_w(parse_perm(3, "s2 s1"), 3);
  CHECK(lw.descents == std::vector<int>{1});
  CHECK(lw.degree == 2);
  CHECK(ExtAffine::tau(3, lw.k) * partition_to_grassmannian(lw.mu, 3) == lw.wt);
  CHECK_THROWS(derive_lambda_w(perm_identity(3), 4));
}

TEST_CASE("longest element does not fit the box at n = 3") {
  auto lw = derive_lambda_w(perm_longest(3), 3);
  CHECK(lw.descents == std::vector<int>{1, 2});
  CHECK_FALSE(lw.fits);
}

TEST_CASE("config round trip") {
  Config c;
  c.checks = {"mapdet", "hopf"};
  c.ranks = {2};
  c.max_rank["mapdet"] = 3;
  c.hopf_maxlen = 4;
  c.mutations.goal = true;
  Config d = Config::from_json_text(c.to_json_text());
  CHECK(d.checks == c.checks);
  CHECK(d.ranks == c.ranks);
  CHECK(d.max_rank == c.max_rank);
  CHECK(d.hopf_maxlen == 4);
  CHECK(d.mutations.goal);
  CHECK_FALSE(d.mutations.commeqs);
  CHECK_THROWS_AS(Config::from_json_text(R"({"rank": [2]})"), std::invalid_argument);
  CHECK_THROWS_AS(Config::from_json_text(R"({"checks": ["nope"]})"), std::invalid_argument);
  CHECK_THROWS_AS(Config::from_json_text(R"({"mutations": ["sign"]})"), std::invalid_argument);
}

TEST_CASE("registry") {
  auto& ids = registry();
  CHECK(ids.size() == 9);
  CHECK(std::find(ids.begin(), ids.end(), "main-theorem") != ids.end());
  CHECK(is_rank_independent("jacobi-trudi"));
  CHECK_FALSE(is_rank_independent("mapdet"));
}

TEST_CASE("single check runs and reports") {
  Config cfg;
  Report r = run_check("dtoj", 2, cfg);
  CHECK(r.pass);
  CHECK(r.case_name() == "dtoj/n=2");
  CHECK(r.witness.empty());

  Report bad = run_check("no-such-check", 2, cfg);
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.find("unknown check") != std::string::npos);

  auto json = nlohmann::json::parse(reports_to_json({r, bad}));
  REQUIRE(json.size() == 2);
  CHECK(json[0]["case"] == "dtoj/n=2");
  CHECK(json[0]["status"] == "pass");
  CHECK_FALSE(json[0].contains("witness"));
  CHECK(json[1]["status"] == "fail");
  CHECK(json[1].contains("witness"));
  CHECK(json[1].contains("millis"));
  CHECK(reports_to_table({r}).find("dtoj/n=2") != std::string::npos);
}

TEST_CASE("run_all honors ranks, limits and threads") {
  Config cfg;
  cfg.checks = {"kostant-ideal", "hopf", "jacobi-trudi"};
  cfg.ranks = {2, 3};
  cfg.max_rank["hopf"] = 2;
  cfg.symfunc_max_size = 3;
  cfg.hopf_maxlen = 3;
  cfg.threads = 2;
  auto reports = run_all(cfg);
  std::vector<std::string> names;
  for (auto& r : reports) {
    names.push_back(r.case_name());
    CHECK(r.pass);
  }
  CHECK(names == std::vector<std::string>{"kostant-ideal/n=2", "kostant-ideal/n=3", "hopf/n=2", "jacobi-trudi"});
}

TEST_CASE("mutations produce failures with witnesses") {
  Config cfg;
  cfg.ranks = {2};
  cfg.checks = {"mapdet", "main-theorem", "jbasis"};
  for (int m = 0; m < 3; ++m) {
    cfg.mutations = Mutations{m == 0, m == 1, m == 2};
    CAPTURE(cfg.mutations.to_string());
    int failures = 0;
    for (auto& r : run_all(cfg))
      if (!r.pass) {
        ++failures;
        CHECK_FALSE(r.witness.empty());
      }
    CHECK(failures > 0);
  }
}

TEST_CASE("fixture listing") {
  auto ws = workspace(2, {});
  auto fixtures = run_fixtures(*ws);
  CHECK(fixtures.size() > 20);
  for (auto& f : fixtures) {
    CAPTURE(f.name);
    CHECK(f.pass);
  }
}

}
