#include <doctest.h>

#include <algorithm>

#include <json.hpp>

#include "hpcalc/errors.hpp"
#include "hpcalc/harness.hpp"

using namespace hpcalc;

TEST_CASE("config text parsing") {
  const Config c = parse_config("# header\n  trials = 12 \n\neps=0.25 # trailing\nname = a b\n");
  CHECK(c.size() == 3);
  CHECK(c.at("trials") == "12");
  CHECK(c.at("eps") == "0.25");
  CHECK(c.at("name") == "a b");
  CHECK(config_int(c, "trials", 0) == 12);
  CHECK(config_double(c, "eps", 0.0) == 0.25);
  CHECK(config_double(c, "missing", 3.5) == 3.5);
  CHECK_THROWS_AS(config_int(c, "eps", 0), Error);
  CHECK_THROWS_AS(config_double(c, "name", 0.0), Error);
  CHECK_THROWS_AS(parse_config("just words\n"), Error);
  CHECK_THROWS_AS(parse_config(" = 3\n"), Error);
  CHECK(parse_config("a = 1\na = 2\n").at("a") == "2");

  CHECK(config_seed(c, 7) == 7);
  CHECK(config_seed(parse_config("seed = 42"), 7) == 42);
  CHECK_THROWS_AS(config_seed(parse_config("seed = x"), 7), Error);
  CHECK_THROWS_AS(load_config("/nonexistent/hpcalc.cfg"), Error);
}

TEST_CASE("config merging lets overrides win") {
  const Config merged = merge_config(parse_config("a = 1\nb = 2"), parse_config("b = 3\nc = 4"));
  CHECK(merged.at("a") == "1");
  CHECK(merged.at("b") == "3");
  CHECK(merged.at("c") == "4");
}

TEST_CASE("report bookkeeping and serialization") {
  Report r;
  r.kind = "verify";
  r.name = "demo";
  r.seed = 5;
  r.check_le("small", 0.5, 1.0);
  CHECK(r.all_pass());
  r.check_in("ranged", 0.7, 0.4, 0.6);
  CHECK_FALSE(r.all_pass());
  CHECK(r.assertions.size() == 3);
  r.csv_header = {"x", "y"};
  r.csv_rows = {{1.0, 0.1}, {2.0, 0.2}};
  CHECK(r.csv() == "x,y\n1,0.10000000000000001\n2,0.20000000000000001\n");

  const auto j = nlohmann::json::parse(r.json());
  CHECK(j.at("seed") == 5);
  CHECK(j.at("pass") == false);
  CHECK(j.at("assertions").size() == 3);
  for (const auto& a : j.at("assertions")) {
    CHECK(a.contains("name"));
    CHECK(a.contains("value"));
    CHECK(a.contains("bound"));
    CHECK(a.contains("pass"));
  }
}

TEST_CASE("routine tables") {
  for (const char* name : {"key-estimate", "compatibility", "homomorphism", "von-neumann", "besov-embedding",
                           "weak-resolvent", "approx-unit", "gamma"})
    CHECK(std::count(verify_names().begin(), verify_names().end(), name) == 1);
  CHECK(experiment_names() == std::vector<std::string>{"counterexample"});
  CHECK_THROWS_AS(run_verify("no-such-check", {}), Error);
  CHECK_THROWS_AS(run_experiment("no-such-experiment", {}), Error);
}

TEST_CASE("small verify runs pass and reproduce") {
  const Config cfg = parse_config("trials = 3\ndim = 4\ncerts = 3\nseed = 11\n");
  const Report a = run_verify("key-estimate", cfg);
  CHECK(a.all_pass());
  CHECK(a.seed == 11);
  CHECK(a.csv_rows.size() == 3);
  CHECK(a.json() == run_verify("key-estimate", cfg).json());

  const Report c = run_verify("compatibility", parse_config("trials = 2\nseed = 3"));
  CHECK(c.all_pass());
  const Report explicit_eps = run_verify("compatibility", parse_config("trials = 2\neps = 0.1\nseed = 3"));
  REQUIRE(explicit_eps.assertions.size() == c.assertions.size());
  for (std::size_t i = 0; i < c.assertions.size(); ++i) CHECK(explicit_eps.assertions[i].value == c.assertions[i].value);
  CHECK_THROWS_AS(run_verify("compatibility", parse_config("eps = -1")), Error);
}

TEST_CASE("small counterexample experiment") {
  const Report r = run_experiment("counterexample", parse_config("nmax = 8\nbins = 65536\n"));
  CHECK(r.csv_header.front() == "N");
  CHECK(r.csv_rows.size() == 5);
  CHECK(r.summary.count("slope_Tg") == 1);
}
