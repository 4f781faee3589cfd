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


#include "qdouble/capelli.hpp"

namespace qdouble {

namespace {

std::string tag_nk(int n, int k) { return "N=" + std::to_string(n) + " k=" + std::to_string(k); }

}  // namespace

VerificationReport verify_capelli(int n, int k, Mode mode, int samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "capelli";
  const auto sym = standard_hecke(n);
  auto run = [&](auto const& r, const std::string& suffix, bool op) {
    rep.add(timed_check([&] {
      const auto v = capelli_violation(r, k, op);
      auto rec = make_check(std::string(op ? "capelli operator-route " : "capelli word-level ") + tag_nk(n, k) + suffix,
                            "Eq. (4.1)", v.empty(), v);
      rec.details.emplace_back("route", op ? "operator on B monomials of degree <= 2" : "bi-normal forms");
      return rec;
    }));
  };
  if (mode == Mode::Exact) {
    run(sym, "", false);
    run(sym, "", true);
  } else {
    for (const auto& p : sample_points(samples, seed, 2 * n + 2)) {
      const auto r = evaluate(sym, p);
      run(r, " q=" + to_string(p), false);
    }
  }
  run(flip_at<Rational>(n), " q=1", false);
  return rep;
}

VerificationReport verify_det_capelli(int n, Mode mode, int samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "det-capelli";
  const auto sym = standard_hecke(n);
  auto run = [&](auto const& r, const std::string& suffix) {
    rep.add(timed_check([&] {
      const auto v = det_capelli_violation(r);
      return make_check("det-capelli N=" + std::to_string(n) + suffix, "Eq. (4.3)", v.empty(), v);
    }));
  };
  if (mode == Mode::Exact) {
    run(sym, "");
  } else {
    for (const auto& p : sample_points(samples, seed, 2 * n + 2)) run(evaluate(sym, p), " q=" + to_string(p));
  }
  run(flip_at<Rational>(n), " q=1");
  return rep;
}

}  // namespace qdouble
