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


#include "qdouble/adjoint_orbits.hpp"
#include "support.hpp"

using namespace qdouble;

namespace {
Scalar q() { return Scalar::param('q'); }
using E = NCElement<Scalar>;
}  // namespace

TEST_CASE("adjoint invariance of power sums") {
  const auto r1 = standard_hecke(1);
  const auto v1 = adjoint_invariance_violation(1, r1);
  CHECK(v1.first.empty());
  CHECK(v1.second.empty());
  const auto r = standard_hecke(2);
  for (int k = 1; k <= 2; ++k) {
    const auto v = adjoint_invariance_violation(k, r);
    CHECK(v.first.empty());
    CHECK(v.second.empty());
    CHECK(power_sum_centrality_violation(k, r).empty());
  }
}

TEST_CASE("adjoint-modified action kills power sums") {
  const auto r = standard_hecke(2);
  const auto qd = make_double(DoubleKind::AdjMod, r);
  const auto p2 = power_sum(2, Tag::M, r, rtrace_form(r));
  for (Letter a : qd.algebra_a().generators()) CHECK(qd.act(E(a), p2).is_zero());
}

TEST_CASE("N=1 orbit fixes the generator") {
  const auto o = orbit_quotient<Scalar>({Scalar(5)}, standard_hecke(1));
  const E m(Letter(Tag::M, 0, 0));
  CHECK(o.presentation.normal_form(m, 1) == E(Scalar(5) * q()));
  CHECK(o.presentation.normal_word_count(2) == 1);
  CHECK_THROWS_AS(orbit_quotient<Scalar>({Scalar(1), Scalar(2)}, standard_hecke(1)), std::invalid_argument);
}

TEST_CASE("classical orbit count at N=2") {
  const auto p = flip_at<Rational>(2);
  const auto o = orbit_quotient<Rational>({Rational(2), Rational(3)}, p);
  // Words of degree <= 2 in four commuting variables: 1 + 4 + 10.
  std::size_t base = 0;
  for (int d = 0; d <= 2; ++d) base += o.base.normal_word_count(d);
  CHECK(base == 15);
  CHECK(o.presentation.normal_word_count(2) == 9);
}

TEST_CASE("genericity") {
  CHECK_FALSE(genericity<Scalar>({Scalar(1), q() * q()}, q()));
  CHECK(genericity<Scalar>({q().pow(-4), Scalar(1)}, q()));
  CHECK(genericity<Scalar>({Scalar(7), Scalar(7)}, q()));
  CHECK_FALSE(genericity<Rational>({Rational(2), Rational(2)}, Rational(1)));
}

TEST_CASE("suites") {
  CHECK(verify_adjoint_invariance(1, 2).all_pass());
  CHECK(verify_orbits(1).all_pass());
}
