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


#pragma once

#include <string>
#include <vector>

#include "qdouble/doubles.hpp"
#include "qdouble/invariants.hpp"
#include "qdouble/re_algebra.hpp"
#include "qdouble/report.hpp"
#include "qdouble/sampling.hpp"

namespace qdouble {

/// M(R) modulo Tr_R M^k - alpha_k, k = 1..N. The constants make the
/// presentation filtered.
template <Field F>
struct OrbitQuotient {
  Presentation<F> base;
  std::vector<F> alpha;
  std::vector<NCElement<F>> level_relations;
  Presentation<F> presentation;
};

template <Field F>
OrbitQuotient<F> orbit_quotient(const std::vector<F>& alpha, const Braiding<F>& r) {
  if (static_cast<int>(alpha.size()) != r.n())
    throw std::invalid_argument("orbit_quotient: need exactly N level constants");
  OrbitQuotient<F> o{re_presentation(r, Tag::M), alpha, {}, {}};
  const auto c = rtrace_form(r);
  for (int k = 1; k <= r.n(); ++k)
    o.level_relations.push_back(power_sum(k, Tag::M, r, c) - NCElement<F>(alpha[static_cast<std::size_t>(k - 1)]));
  o.presentation = o.base.with_relations("orbit", o.level_relations);
  return o;
}

/// mu_i != q^2 mu_j over all ordered pairs, i = j included.
template <Field F>
bool genericity(const std::vector<F>& mu, const F& q) {
  const F q2 = q * q;
  for (const auto& a : mu)
    for (const auto& b : mu)
      if (a == q2 * b) return false;
  return true;
}

/// First failing witness of the centrality of Tr_R M^k in M(R), or empty.
template <Field F>
std::string power_sum_centrality_violation(int k, const Braiding<F>& r) {
  const auto pres = re_presentation(r, Tag::M);
  const auto p = power_sum(k, Tag::M, r, rtrace_form(r));
  for (Letter m : pres.generators()) {
    const NCElement<F> x(m);
    const auto nf = pres.normal_form(p * x - x * p, k + 1);
    if (!nf.is_zero()) return clip(m.str() + ": " + nf.str());
  }
  return {};
}

/// Commutation and annihilation witnesses for Lhat against Tr_R M^k in the
/// modified adjoint double.
template <Field F>
std::pair<std::string, std::string> adjoint_invariance_violation(int k, const Braiding<F>& r) {
  const auto qd = make_double(DoubleKind::AdjMod, r);
  const auto p = power_sum(k, Tag::M, r, rtrace_form(r));
  std::pair<std::string, std::string> out;
  for (Letter l : qd.algebra_a().generators()) {
    const NCElement<F> x(l);
    if (out.first.empty()) {
      const auto res = qd.canonical(x * p - p * x);
      if (!res.is_zero()) out.first = clip(l.str() + ": " + res.str());
    }
    if (out.second.empty()) {
      const auto res = qd.act(x, p);
      if (!res.is_zero()) out.second = clip(l.str() + ": " + res.str());
    }
  }
  return out;
}

VerificationReport verify_adjoint_invariance(int k, int n, Mode mode = Mode::Exact, int samples = 3,
                                             std::uint64_t seed = 1);

/// Orbit suite: quotient sizes, centrality, descent of the action and the
/// genericity predicate.
VerificationReport verify_orbits(int n, int degree = 2);

}  // namespace qdouble
