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


#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
  using namespace qdouble::cli;
  SuiteConfig cfg;
  std::string mode = "exact";
  std::string out;
  int n = 0, k = 0, degree = 0;

  CLI::App app{"Exact verification suites for quantum doubles of reflection equation algebras"};
  std::string names = "all";
  for (const auto& s : suite_names()) names += ", " + s;
  app.add_option("--suite", cfg.suite, "Suite to run: " + names)->required();
  auto* on = app.add_option("--n", n, "Rank N of the braiding")->check(CLI::PositiveNumber);
  auto* ok = app.add_option("--k", k, "Degree k (tensor arity or power)")->check(CLI::PositiveNumber);
  app.add_option("--lambda", cfg.lambda, "Partition as comma-separated parts, e.g. 2,1");
  auto* od = app.add_option("--degree", degree, "Degree bound (orbits) or power-sum degree (conjecture)")
                 ->check(CLI::PositiveNumber);
  app.add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled", "EXACT", "SAMPLED"}));
  app.add_option("--samples", cfg.samples, "Sample points in sampled mode");
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--out", out, "Write the JSON report here instead of stdout");
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--timing", cfg.timing, "Include wall times (reports are then not byte-stable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  if (on->count()) cfg.n = n;
  if (ok->count()) cfg.k = k;
  if (od->count()) cfg.degree = degree;
  cfg.mode = (mode == "sampled" || mode == "SAMPLED") ? qdouble::Mode::Sampled : qdouble::Mode::Exact;

  qdouble::VerificationReport report;
  try {
    report = run_suite(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n" << app.help();
    return 3;
  }
  const std::string json = to_json(report, cfg);
  if (out.empty()) {
    std::cout << json;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 3;
    }
    f << json;
  }
  const int rc = exit_code(report);
  if (const auto* fail = report.first_failure())
    std::cerr << (rc == 2 ? "conjecture finding: " : "FAILED: ") << fail->id << " [" << fail->anchor << "] "
              << fail->witness << "\n";
  return rc;
}
