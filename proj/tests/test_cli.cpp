// Copyright 2026 The qdouble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "json.hpp"
#include "runner.hpp"
#include "support.hpp"

using namespace qdouble;
using namespace qdouble::cli;
using nlohmann::ordered_json;

namespace {
SuiteConfig config(const std::string& suite) {
  SuiteConfig c;
  c.suite = suite;
  return c;
}
}  // namespace

TEST_CASE("every suite name is accepted") {
  CHECK(suite_names().size() == 11);
  CHECK(suite_names().front() == "braiding");
}

TEST_CASE("capelli N=2 k=2 passes with its anchor") {
  auto c = config("capelli");
  c.n = 2;
  c.k = 2;
  const auto rep = run_suite(c);
  CHECK(rep.all_pass());
  CHECK(exit_code(rep) == 0);
  for (const auto& ch : rep.checks) CHECK(ch.anchor == "Eq. (4.1)");
}

TEST_CASE("spectrum N=2 lambda=1,1 serializes the character") {
  auto c = config("spectrum");
  c.n = 2;
  c.lambda = "1,1";
  const auto j = ordered_json::parse(to_json(run_suite(c), c));
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["details"]["chi"] == "(q^2+1)/(q^5)");
}

TEST_CASE("braiding N=5 sampled smoke test") {
  auto c = config("braiding");
  c.n = 5;
  c.mode = Mode::Sampled;
  CHECK(run_suite(c).all_pass());
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(run_suite(config("nope")), ConfigError);
  auto c = config("capelli");
  c.n = 3;
  CHECK_THROWS_AS(run_suite(c), ConfigError);
  c.mode = Mode::Sampled;
  CHECK_NOTHROW(run_suite(c));
  auto s = config("spectrum");
  s.n = 2;
  s.lambda = "1,1,1";
  CHECK_THROWS_AS(run_suite(s), ConfigError);
  s.lambda = "x";
  CHECK_THROWS_AS(run_suite(s), ConfigError);
  auto b = config("braiding");
  b.samples = 0;
  CHECK_THROWS_AS(run_suite(b), ConfigError);
}

TEST_CASE("exit codes") {
  VerificationReport rep;
  CHECK(exit_code(rep) == 0);
  auto finding = make_check("c", "a", false);
  finding.conjecture = true;
  rep.add(finding);
  CHECK(exit_code(rep) == 2);
  rep.add(make_check("h", "a", false));
  CHECK(exit_code(rep) == 1);
}

TEST_CASE("conjecture suite marks every check") {
  auto c = config("conjecture");
  c.n = 2;
  c.lambda = "2";
  const auto rep = run_suite(c);
  CHECK_FALSE(rep.checks.empty());
  for (const auto& ch : rep.checks) CHECK(ch.conjecture);
}

TEST_CASE("report schema") {
  auto c = config("orbits");
  const auto text = to_json(run_suite(c), c);
  const auto j = ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema", "suite", "config", "conventions", "summary", "checks"});
  CHECK(j["schema"] == 1);
  CHECK(j["conventions"].contains("R"));
  CHECK(j["conventions"].contains("C"));
  CHECK(j["conventions"].contains("word_order"));
  for (const auto& ch : j["checks"]) {
    CHECK_FALSE(ch["anchor"].get<std::string>().empty());
    CHECK_FALSE(ch.contains("seconds"));
  }
  c.timing = true;
  CHECK(ordered_json::parse(to_json(run_suite(c), c))["checks"][0].contains("seconds"));
}

TEST_CASE("job count does not change the report") {
  auto c = config("spectrum");
  c.k = 2;
  const auto one = to_json(run_suite(c), c);
  c.jobs = 4;
  CHECK(to_json(run_suite(c), c) == one);
}
