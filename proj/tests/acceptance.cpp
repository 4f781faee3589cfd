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


// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "qdouble/braiding.hpp"
#include "qdouble/invariants.hpp"
#include "runner.hpp"

using namespace qdouble;
using namespace qdouble::cli;

namespace {

struct Outcome {
  bool pass;
  std::string note;
};

SuiteConfig config(const std::string& suite) {
  SuiteConfig c;
  c.suite = suite;
  return c;
}

std::string failure_note(const VerificationReport& rep) {
  if (const auto* f = rep.first_failure()) return "first failure: " + f->id + " [" + f->anchor + "] " + f->witness;
  return std::to_string(rep.checks.size()) + " checks";
}

bool has_check(const VerificationReport& rep, const std::string& id) {
  for (const auto& c : rep.checks)
    if (c.id == id) return c.pass;
  return false;
}

std::string detail(const VerificationReport& rep, const std::string& id, const std::string& key) {
  for (const auto& c : rep.checks)
    if (c.id == id)
      for (const auto& [k, v] : c.details)
        if (k == key) return v;
  return {};
}

Outcome suite_outcome(const VerificationReport& rep) { return {rep.all_pass(), failure_note(rep)}; }

Outcome braiding() {
  auto c = config("braiding");
  c.n = 4;
  const auto rep = run_suite(c);
  bool ok = rep.all_pass();
  for (int n = 1; n <= 4; ++n) {
    const auto s = std::to_string(n);
    ok = ok && has_check(rep, "Hecke condition N=" + s) && has_check(rep, "braid relation N=" + s) &&
         has_check(rep, "R^-1 = R - nu I N=" + s);
  }
  return {ok, failure_note(rep)};
}

Outcome heckerep() {
  auto c = config("heckerep");
  c.n = 3;
  c.k = 3;
  return suite_outcome(run_suite(c));
}

Outcome spectrum() {
  const auto rep = run_suite(config("spectrum"));
  const auto q = Scalar::param('q');
  bool ok = rep.all_pass();
  ok = ok && detail(rep, "trl N=2 lambda=(1)", "chi") == (q.inverse() + q.pow(-5)).str();
  ok = ok && detail(rep, "trl N=2 lambda=(2)", "chi") == (q.inverse() + q.pow(-7)).str();
  ok = ok && detail(rep, "trl N=2 lambda=(1,1)", "chi") == (q.pow(-3) + q.pow(-5)).str();
  std::size_t operator_checks = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3; ++k)
      for (const auto& lambda : partitions_of(k, n))
        operator_checks += has_check(rep, "trl N=" + std::to_string(n) + " lambda=" + lambda.str()) ? 1 : 0;
  ok = ok && operator_checks == 14;
  return {ok, failure_note(rep) + ", operator checks " + std::to_string(operator_checks)};
}

Outcome conjecture() {
  const auto rep = run_suite(config("conjecture"));
  bool ok = exit_code(rep) == 0;
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 4; ++n) ok = ok && has_check(rep, "e1 N=" + std::to_string(n) + " k=" + std::to_string(k));
  for (int k = 2; k <= 3; ++k)
    for (const auto& lambda : partitions_of(k, 2)) ok = ok && has_check(rep, "E2 N=2 lambda=" + lambda.str());
  return {ok, failure_note(rep) + ", exit code " + std::to_string(exit_code(rep))};
}

Outcome cayley_hamilton() {
  const auto exact = verify_cayley_hamilton(2, Mode::Exact);
  const auto sampled = verify_cayley_hamilton(3, Mode::Sampled, 3, 1);
  return {exact.all_pass() && sampled.all_pass() && sampled.checks.size() == 3,
          "N=2 exact " + failure_note(exact) + "; N=3 sampled " + failure_note(sampled)};
}

Outcome capelli() {
  auto c = config("capelli");
  c.n = 2;
  const auto rep = run_suite(c);
  auto d = config("det-capelli");
  d.n = 2;
  const auto det = run_suite(d);
  bool ok = rep.all_pass() && det.all_pass() && has_check(det, "det-capelli N=2");
  for (int k = 1; k <= 2; ++k) {
    const auto s = " N=2 k=" + std::to_string(k);
    ok = ok && has_check(rep, "capelli word-level" + s) && has_check(rep, "capelli operator-route" + s);
  }
  return {ok, failure_note(rep) + "; det " + failure_note(det)};
}

Outcome adjoint() {
  auto c = config("adjoint");
  c.n = 2;
  const auto rep = run_suite(c);
  const auto orbits = run_suite(config("orbits"));
  bool ok = rep.all_pass() && has_check(orbits, "orbit action descends N=2");
  for (int k = 1; k <= 2; ++k) {
    const auto s = " N=2 k=" + std::to_string(k);
    ok = ok && has_check(rep, "adjoint commutation" + s) && has_check(rep, "adjoint annihilation" + s);
  }
  return {ok, failure_note(rep)};
}

Outcome u2h() { return suite_outcome(run_suite(config("u2h"))); }

Outcome cross_convention() {
  bool ok = true;
  for (int n = 1; n <= 4; ++n) {
    const auto r = standard_hecke(n);
    RTraceForm<Scalar> c;
    for (int i = 1; i <= n; ++i) c.weights.push_back(power(r.q(), 1 - 2 * i));
    ok = ok && trace_property_violation(r, c).empty();
  }
  const auto e1 = verify_e1_compatibility(4, 4);
  return {ok && e1.all_pass(), "trace property N=1..4, e1 " + failure_note(e1)};
}

Outcome determinism() {
  const auto c = config("all");
  const auto a = to_json(run_suite(c), c);
  const auto b = to_json(run_suite(c), c);
  return {a == b, std::to_string(a.size()) + " bytes"};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "braiding: braid, Hecke, inverse, N=1..4", 5, braiding},
      {2, "Hecke representations, N<=3, k<=3", 60, heckerep},
      {3, "Tr_R L spectrum, k<=3, N<=3, closed forms", 120, spectrum},
      {4, "conjecture: e1 for k<=4, e2 for lambda |- 2,3 at N=2", 600, conjecture},
      {5, "Cayley-Hamilton, N=2 exact, N=3 sampled", 300, cayley_hamilton},
      {6, "Capelli N=2 k=1,2 both routes, determinant form", 600, capelli},
      {7, "adjoint invariance k<=2 N=2, orbit action descends", 300, adjoint},
      {8, "u(2)_h calculus", 120, u2h},
      {9, "cross-convention guard: trace property and e1", 5, cross_convention},
      {10, "determinism of run_all", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o{false, {}};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = c.budget_seconds <= 0 || secs < c.budget_seconds;
    const bool pass = o.pass && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %2d: %s  %s (%.2fs%s; %s)\n", c.id, pass ? "PASS" : "FAIL", c.name, secs,
                in_budget ? "" : ", over budget", o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
