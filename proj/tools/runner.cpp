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


#include "runner.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "json.hpp"
#include "qdouble/adjoint_orbits.hpp"
#include "qdouble/braiding.hpp"
#include "qdouble/capelli.hpp"
#include "qdouble/doubles.hpp"
#include "qdouble/heckerep.hpp"
#include "qdouble/invariants.hpp"
#include "qdouble/u2h_calculus.hpp"

namespace qdouble::cli {

namespace {

using Task = std::function<VerificationReport()>;

// Runs tasks on up to `jobs` threads; results keep task order.
VerificationReport run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<VerificationReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  VerificationReport merged;
  for (const auto& r : out) merged.append(r);
  return merged;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

int value_or(const std::optional<int>& v, int fallback) { return v ? *v : fallback; }

bool sampled(const SuiteConfig& c) { return c.mode == Mode::Sampled; }

Partition lambda_of(const SuiteConfig& c) {
  try {
    return parse_partition(c.lambda);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad --lambda: ") + e.what());
  }
}

VerificationReport braiding_suite(const SuiteConfig& c) {
  if (sampled(c)) {
    const int n = value_or(c.n, 5);
    require(n >= 1 && n <= 6, "braiding: SAMPLED needs 1 <= N <= 6");
    return verify_braiding_sampled(n, c.samples, c.seed);
  }
  const int n = value_or(c.n, 4);
  require(n >= 1 && n <= 4, "braiding: EXACT needs 1 <= N <= 4");
  return verify_braiding(n, c.seed);
}

VerificationReport heckerep_suite(const SuiteConfig& c) {
  const int n = value_or(c.n, 3), k = value_or(c.k, 3);
  require(n >= 1 && n <= 3 && k >= 1 && k <= 4, "heckerep: needs 1 <= N <= 3, 1 <= k <= 4");
  return verify_heckerep(n, k);
}

VerificationReport doubles_suite(const SuiteConfig& c) {
  const int n = value_or(c.n, 2);
  require(n >= 1 && n <= 2, "doubles: needs 1 <= N <= 2");
  return verify_doubles(n);
}

VerificationReport spectrum_suite(const SuiteConfig& c) {
  std::vector<Task> tasks;
  if (!c.lambda.empty()) {
    const auto lambda = lambda_of(c);
    const int n = value_or(c.n, 2);
    require(n >= 1 && n <= 3 && lambda.weight() <= 3, "spectrum: needs N <= 3 and |lambda| <= 3");
    require(lambda.length() <= n, "spectrum: lambda has more than N parts");
    tasks.push_back([=] { return verify_spectrum(SpectrumElement::Trl, lambda, n); });
    return run_tasks(tasks, c.jobs);
  }
  const int k = value_or(c.k, 3);
  require(k >= 1 && k <= 3, "spectrum: needs 1 <= k <= 3");
  std::vector<int> ns;
  if (c.n) {
    require(*c.n >= 1 && *c.n <= 3, "spectrum: needs 1 <= N <= 3");
    ns.push_back(*c.n);
  } else {
    ns = {1, 2, 3};
  }
  for (int n : ns)
    for (int kk = 1; kk <= k; ++kk) tasks.push_back([=] { return verify_trl_spectrum(n, kk); });
  // Word-level cross-check at N = 2, where it is cheap.
  const int wn = c.n ? *c.n : 2;
  if (wn <= 2)
    for (int kk = 1; kk <= k; ++kk)
      for (const auto& lambda : partitions_of(kk, wn))
        tasks.push_back([=] { return verify_spectrum(SpectrumElement::Trl, lambda, wn); });
  return run_tasks(tasks, c.jobs);
}

VerificationReport conjecture_suite(const SuiteConfig& c) {
  std::vector<Task> tasks;
  const int pw = value_or(c.degree, 2);
  require(pw >= 1 && pw <= 3, "conjecture: power sum degree must be 1..3");
  if (!c.lambda.empty()) {
    const auto lambda = lambda_of(c);
    const int n = value_or(c.n, 2);
    require(n >= 2 && n <= 3 && lambda.weight() <= 3 && lambda.length() <= n,
            "conjecture: needs 2 <= N <= 3, |lambda| <= 3, at most N parts");
    tasks.push_back([=] { return verify_spectrum(SpectrumElement::E2, lambda, n); });
    tasks.push_back([=] { return verify_spectrum(SpectrumElement::Pk, lambda, n, pw); });
  } else {
    const int max_n = value_or(c.n, 4), max_k = value_or(c.k, 4);
    require(max_n >= 1 && max_n <= 6 && max_k >= 1 && max_k <= 6, "conjecture: needs N <= 6, k <= 6");
    tasks.push_back([=] { return verify_e1_compatibility(max_n, max_k); });
    for (int k = 2; k <= 3; ++k)
      for (const auto& lambda : partitions_of(k, 2))
        tasks.push_back([=] { return verify_spectrum(SpectrumElement::E2, lambda, 2); });
    for (int k = 1; k <= 3; ++k)
      for (const auto& lambda : partitions_of(k, 2))
        tasks.push_back([=] { return verify_spectrum(SpectrumElement::Pk, lambda, 2, pw); });
  }
  auto rep = run_tasks(tasks, c.jobs);
  for (auto& ch : rep.checks) ch.conjecture = true;
  return rep;
}

VerificationReport cayley_hamilton_suite(const SuiteConfig& c) {
  if (c.n) {
    require(*c.n >= 1 && *c.n <= (sampled(c) ? 4 : 3), "cayley-hamilton: EXACT needs N <= 3, SAMPLED N <= 4");
    return verify_cayley_hamilton(*c.n, c.mode, c.samples, c.seed);
  }
  std::vector<Task> tasks;
  if (!sampled(c)) {
    tasks.push_back([] { return verify_cayley_hamilton(1, Mode::Exact); });
    tasks.push_back([] { return verify_cayley_hamilton(2, Mode::Exact); });
  }
  tasks.push_back([=] { return verify_cayley_hamilton(3, Mode::Sampled, c.samples, c.seed); });
  return run_tasks(tasks, c.jobs);
}

VerificationReport capelli_suite(const SuiteConfig& c) {
  const int limit = sampled(c) ? 3 : 2;
  const int n = value_or(c.n, 2);
  require(n >= 1 && n <= limit, "capelli: EXACT needs N <= 2, SAMPLED N <= 3");
  std::vector<int> ks;
  if (c.k) {
    require(*c.k >= 1 && *c.k <= limit, "capelli: EXACT needs k <= 2, SAMPLED k <= 3");
    ks.push_back(*c.k);
  } else {
    for (int k = 1; k <= std::min(n, 2); ++k) ks.push_back(k);
  }
  std::vector<Task> tasks;
  for (int k : ks) tasks.push_back([=] { return verify_capelli(n, k, c.mode, c.samples, c.seed); });
  return run_tasks(tasks, c.jobs);
}

VerificationReport det_capelli_suite(const SuiteConfig& c) {
  const int n = value_or(c.n, 2);
  require(n >= 1 && n <= (sampled(c) ? 3 : 2), "det-capelli: EXACT needs N <= 2, SAMPLED N <= 3");
  return verify_det_capelli(n, c.mode, c.samples, c.seed);
}

VerificationReport adjoint_suite(const SuiteConfig& c) {
  const int limit = sampled(c) ? 3 : 2;
  const int n = value_or(c.n, 2);
  require(n >= 1 && n <= limit, "adjoint: EXACT needs N <= 2, SAMPLED N <= 3");
  std::vector<int> ks;
  if (c.k) {
    require(*c.k >= 1 && *c.k <= limit, "adjoint: EXACT needs k <= 2, SAMPLED k <= 3");
    ks.push_back(*c.k);
  } else {
    for (int k = 1; k <= limit; ++k) ks.push_back(k);
  }
  std::vector<Task> tasks;
  for (int k : ks) tasks.push_back([=] { return verify_adjoint_invariance(k, n, c.mode, c.samples, c.seed); });
  return run_tasks(tasks, c.jobs);
}

VerificationReport orbits_suite(const SuiteConfig& c) {
  const int n = value_or(c.n, 2), d = value_or(c.degree, 2);
  require(n >= 1 && n <= 2 && d >= 1 && d <= 3, "orbits: needs N <= 2, degree <= 3");
  return verify_orbits(n, d);
}

VerificationReport u2h_suite(const SuiteConfig& c) {
  const int n = value_or(c.n, 2);
  require(n >= 1 && n <= 2, "u2h: the h-shifted double checks need N <= 2");
  std::vector<Task> tasks;
  tasks.push_back([=] { return u2h::verify_u2h(c.seed, 20); });
  tasks.push_back([=] { return verify_h_shifted(n); });
  return run_tasks(tasks, c.jobs);
}

using SuiteFn = VerificationReport (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"braiding", braiding_suite},
      {"heckerep", heckerep_suite},
      {"doubles", doubles_suite},
      {"spectrum", spectrum_suite},
      {"conjecture", conjecture_suite},
      {"cayley-hamilton", cayley_hamilton_suite},
      {"capelli", capelli_suite},
      {"det-capelli", det_capelli_suite},
      {"adjoint", adjoint_suite},
      {"orbits", orbits_suite},
      {"u2h", u2h_suite},
  };
  return r;
}

std::vector<std::pair<std::string, std::string>> echo(const SuiteConfig& c) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("default"); };
  return {{"suite", c.suite},
          {"n", opt(c.n)},
          {"k", opt(c.k)},
          {"lambda", c.lambda.empty() ? "default" : c.lambda},
          {"degree", opt(c.degree)},
          {"mode", mode_name(c.mode)},
          {"samples", std::to_string(c.samples)},
          {"seed", std::to_string(c.seed)}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

VerificationReport run_suite(const SuiteConfig& config) {
  require(config.samples >= 1 && config.samples <= 16, "--samples must be 1..16");
  require(config.jobs >= 1, "--jobs must be positive");
  if (config.suite == "all") return run_all(config);
  for (const auto& [name, fn] : registry())
    if (name == config.suite) {
      auto rep = fn(config);
      rep.suite = name;
      rep.config = echo(config);
      return rep;
    }
  throw ConfigError("unknown suite '" + config.suite + "'");
}

VerificationReport run_all(const SuiteConfig& config) {
  VerificationReport all;
  all.suite = "all";
  SuiteConfig base = config;
  base.n.reset();
  base.k.reset();
  base.degree.reset();
  base.lambda.clear();
  for (const auto& [name, fn] : registry()) {
    SuiteConfig c = base;
    c.suite = name;
    all.append(fn(c));
  }
  all.config = echo(config);
  all.config[0].second = "all";
  return all;
}

std::string to_json(const VerificationReport& report, const SuiteConfig& config) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = 1;
  j["suite"] = report.suite;
  ordered_json cfg = ordered_json::object();
  for (const auto& [k, v] : report.config) cfg[k] = v;
  j["config"] = cfg;
  j["conventions"] = {
      {"R", kHeckeConvention},
      {"C", "diag(q^(1-2i)), i = 1..N"},
      {"word_order", "graded lexicographic by letter code; leading word is the largest; in doubles B letters stand left of A letters"},
  };
  std::size_t passed = 0, failed = 0, findings = 0;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    if (c.pass)
      ++passed;
    else if (c.conjecture)
      ++findings;
    else
      ++failed;
    ordered_json e;
    e["id"] = c.id;
    e["anchor"] = c.anchor;
    e["pass"] = c.pass;
    e["conjecture"] = c.conjecture;
    e["witness"] = c.witness;
    ordered_json d = ordered_json::object();
    for (const auto& [k, v] : c.details) d[k] = v;
    e["details"] = d;
    if (config.timing) e["seconds"] = c.seconds;
    checks.push_back(std::move(e));
  }
  j["summary"] = {{"checks", report.checks.size()},
                  {"passed", passed},
                  {"failed", failed},
                  {"conjecture_findings", findings},
                  {"exit_code", exit_code(report)}};
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

int exit_code(const VerificationReport& report) {
  bool finding = false;
  for (const auto& c : report.checks) {
    if (c.pass) continue;
    if (!c.conjecture) return 1;
    finding = true;
  }
  return finding ? 2 : 0;
}

}  // namespace qdouble::cli
