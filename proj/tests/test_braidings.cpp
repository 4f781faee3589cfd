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


#include "support.hpp"
#include "qdouble/braiding.hpp"

using namespace qdouble;

namespace {
Scalar q() { return Scalar::param('q'); }
Scalar nu() { return q() - q().inverse(); }
}  // namespace

TEST_CASE("N=1 braiding is the scalar q") {
  const auto r = standard_hecke(1);
  CHECK(r.matrix().at(0, 0) == q());
  CHECK(q() * q() == Scalar(1) + nu() * q());
}

TEST_CASE("N=2 entries") {
  const auto r = standard_hecke(2);
  const std::size_t e12 = flat_index({0, 1}, 2), e21 = flat_index({1, 0}, 2);
  CHECK(r.matrix().at(e12, e21) == Scalar(1));
  CHECK(r.matrix().at(e21, e21) == nu());
  CHECK(r.matrix().at(e21, e12) == Scalar(1));
  CHECK(r.matrix().at(e12, e12) == Scalar(0));
  CHECK(r.inverse_matrix() == r.matrix() - nu() * TensorOperator<Scalar>::identity(2, 2));
}

TEST_CASE("q = 1 gives the flip") {
  for (int n = 1; n <= 3; ++n) CHECK(evaluate(standard_hecke(n), Rational(1)).matrix() == flip_at<Rational>(n).matrix());
}

TEST_CASE("flip is involutive and braided") {
  const auto p = flip(3);
  CHECK(p.matrix() * p.matrix() == TensorOperator<Scalar>::identity(3, 2));
  CHECK(p.lift(3, 1) * p.lift(3, 2) * p.lift(3, 1) == p.lift(3, 2) * p.lift(3, 1) * p.lift(3, 2));
  const auto p2 = flip(2).lift(3, 2);
  for (std::size_t c = 0; c < 8; ++c) {
    auto idx = multi_index(c, 2, 3);
    std::swap(idx[1], idx[2]);
    CHECK(p2.at(flat_index(idx, 2), c) == Scalar(1));
  }
}

TEST_CASE("lift and braid relation up to N=3") {
  for (int n = 1; n <= 3; ++n) {
    const auto r = standard_hecke(n);
    CHECK(r.lift(2, 1) == r.matrix());
    CHECK(r.lift(3, 1) * r.lift(3, 2) * r.lift(3, 1) == r.lift(3, 2) * r.lift(3, 1) * r.lift(3, 2));
  }
  CHECK_THROWS_AS(standard_hecke(2).lift(3, 3), std::out_of_range);
}

TEST_CASE("a non-Hecke matrix is rejected") {
  auto m = TensorOperator<Scalar>::identity(2, 2);
  CHECK_THROWS_AS(Braiding<Scalar>(2, q(), m, "identity"), InvariantViolation);
}

TEST_CASE("R-trace weights") {
  const auto c = rtrace_form(standard_hecke(2));
  REQUIRE(c.weights.size() == 2);
  CHECK(c.weights[0] == q().inverse());
  CHECK(c.weights[1] == q().pow(-3));
  CHECK(c.trace_of_identity() == qint(2) * q().pow(-2));
  const auto c1 = rtrace_form(flip(3));
  for (const auto& w : c1.weights) CHECK(w == Scalar(1));
}

TEST_CASE("trace property for matrix units and both copies") {
  for (int n = 1; n <= 3; ++n) {
    const auto r = standard_hecke(n);
    RTraceForm<Scalar> c;
    for (int i = 1; i <= n; ++i) c.weights.push_back(q().pow(1 - 2 * i));
    CHECK(trace_property_violation(r, c).empty());
  }
}

TEST_CASE("a wrong weight matrix violates the trace property") {
  RTraceForm<Scalar> c{{Scalar(1), Scalar(1)}};
  CHECK_FALSE(trace_property_violation(standard_hecke(2), c).empty());
}

TEST_CASE("partial trace of the identity and of R") {
  const auto r = standard_hecke(2);
  const auto c = rtrace_form(r);
  const auto id2 = TensorOperator<Scalar>::identity(2, 2);
  CHECK(rtrace(id2, 2, c) == c.trace_of_identity() * TensorOperator<Scalar>::identity(2, 1));
  const auto full = rtrace(rtrace(r.matrix(), 2, c), 1, c).at(0, 0);
  Scalar direct(0);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto idx = multi_index(i, 2, 2);
    direct += c.weights[static_cast<std::size_t>(idx[0])] * c.weights[static_cast<std::size_t>(idx[1])] * r.matrix().at(i, i);
  }
  CHECK(full == direct);
  // Tr_{R(2)} R = I for this normalization.
  CHECK(rtrace(r.matrix(), 2, c) == TensorOperator<Scalar>::identity(2, 1));
}

TEST_CASE("over and under copies coincide with slot placement at q=1") {
  const auto p = flip_at<Rational>(2);
  TensorOperator<Rational> x(2, 1);
  x.set(0, 1, Rational(1));
  CHECK(over_copy(x, 2, 2, p) == x.embed(2, 2));
  CHECK(under_copy(x, 2, 2, p) == x.embed(2, 2));
  CHECK(over_copy(x, 1, 2, p) == x.embed(2, 1));
}

TEST_CASE("sampled braiding suite") {
  CHECK(verify_braiding_sampled(5, 1, 1).all_pass());
}
