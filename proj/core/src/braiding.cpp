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

#include "qdouble/braiding.hpp"

#include <optional>

#include "qdouble/sampling.hpp"

namespace qdouble {

Braiding<Scalar> standard_hecke(int n, char param) { return standard_hecke_at(n, Scalar::param(param)); }

Braiding<Scalar> flip(int n) { return flip_at<Scalar>(n); }

Braiding<Rational> evaluate(const Braiding<Scalar>& r, const Rational& at) {
  return Braiding<Rational>(r.n(), r.q().evaluate(at), evaluate(r.matrix(), at),
                            r.convention() + " at q=" + at.get_str());
}

VerificationReport verify_braiding(int max_n, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "braiding";
  for (int n = 1; n <= max_n; ++n) {
    const std::string tag = " N=" + std::to_string(n);
    // The constructor already throws on failure; the records restate each
    // identity so the report carries them individually.
    std::optional<Braiding<Scalar>> r;
    rep.add(timed_check([&] {
      try {
        r.emplace(standard_hecke(n));
      } catch (const std::exception& e) {
        return make_check("construct standard Hecke" + tag, "Eq. (1.1)", false, e.what());
      }
      return make_check("construct standard Hecke" + tag, "Eq. (1.1)", true);
    }));
    if (!r) continue;
    const auto id2 = TensorOperator<Scalar>::identity(n, 2);
    const auto& R = r->matrix();
    rep.add(timed_check([&] {
      const bool ok = R * R == id2 + r->nu() * R;
      return make_check("Hecke condition" + tag, "Eq. (1.1)", ok, ok ? "" : "R^2 != I + nu R");
    }));
    rep.add(timed_check([&] {
      const auto r1 = r->lift(3, 1), r2 = r->lift(3, 2);
      const bool ok = r1 * r2 * r1 == r2 * r1 * r2;
      return make_check("braid relation" + tag, "Eq. (1.1)", ok, ok ? "" : "R1 R2 R1 != R2 R1 R2");
    }));
    rep.add(timed_check([&] {
      const auto inv = R - r->nu() * id2;
      const bool ok = R * inv == id2 && inv * R == id2 && inv == r->inverse_matrix();
      return make_check("R^-1 = R - nu I" + tag, "Eq. (1.1)", ok, ok ? "" : "inverse mismatch");
    }));
    rep.add(timed_check([&] {
      RTraceForm<Scalar> c;
      for (int i = 1; i <= n; ++i) c.weights.push_back(power(r->q(), 1 - 2 * i));
      const auto v = trace_property_violation(*r, c);
      auto rec = make_check("trace property" + tag, "Eq. (3.3)", v.empty(), v);
      rec.details.emplace_back("C", "diag(q^(1-2i))");
      return rec;
    }));
    rep.add(timed_check([&] {
      const auto c = rtrace_form(*r);
      const Scalar expect = power(r->q(), -n) * qint_at(n, r->q());
      const Scalar got = c.trace_of_identity();
      return make_check("Tr_R I = q^-N N_q" + tag, "Eq. (3.5)", got == expect, got == expect ? "" : to_string(got));
    }));
    if (n <= 3) {
      rep.add(timed_check([&] {
        // rtrace over slot 3 commutes with operators living on slots 1, 2.
        const auto c = rtrace_form(*r);
        const auto y = r->lift(3, 1);
        const auto x = r->lift(3, 2) * r->lift(3, 2);
        const bool ok = rtrace(y * x, 3, c) == r->lift(2, 1) * rtrace(x, 3, c) &&
                        rtrace(x * y, 3, c) == rtrace(x, 3, c) * r->lift(2, 1);
        return make_check("rtrace slot locality" + tag, "Eq. (3.3)", ok, ok ? "" : "Y rtrace(X) mismatch");
      }));
    }
  }
  rep.add(timed_check([&] {
    const auto p = flip(max_n);
    const bool ok = p.matrix() * p.matrix() == TensorOperator<Scalar>::identity(max_n, 2);
    return make_check("flip is involutive N=" + std::to_string(max_n), "Eq. (1.1)", ok, ok ? "" : "P^2 != I");
  }));
  rep.append(verify_braiding_sampled(max_n + 1, 1, seed));
  return rep;
}

VerificationReport verify_braiding_sampled(int n, int samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "braiding";
  for (const auto& q : sample_points(samples, seed, 2 * n + 2)) {
    rep.add(timed_check([&] {
      const std::string id = "sampled Hecke smoke N=" + std::to_string(n) + " q=" + to_string(q);
      try {
        // Construction checks the Hecke condition, the inverse and the braid relation.
        const auto r = standard_hecke_at<Rational>(n, q);
        const auto v = trace_property_violation(r, rtrace_form(r));
        auto rec = make_check(id, "Eq. (1.1)", v.empty(), v);
        rec.details.emplace_back("sample", to_string(q));
        return rec;
      } catch (const std::exception& e) {
        return make_check(id, "Eq. (1.1)", false, e.what());
      }
    }));
  }
  return rep;
}

}  // namespace qdouble
