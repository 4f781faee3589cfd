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
#include "qdouble/sampling.hpp"
#include "qdouble/scalar.hpp"

using namespace qdouble;

namespace {
Scalar q() { return Scalar::param('q'); }
}  // namespace

TEST_CASE("qint matches its Laurent expansion") {
  CHECK(qint(1) == Scalar(1));
  CHECK(qint(2) == q() + q().inverse());
  CHECK(qint(3) == q() * q() + Scalar(1) + q().pow(-2));
  CHECK(qint(2).str() == "(q^2+1)/(q)");
  CHECK(qint(3).str() == "(q^4+q^2+1)/(q^2)");
}

TEST_CASE("quotient formula and finite sum agree") {
  const Scalar nu = q() - q().inverse();
  for (int k = 1; k <= 6; ++k) CHECK(qint(k) == (q().pow(k) - q().pow(-k)) / nu);
}

TEST_CASE("evaluation") {
  CHECK(evaluate(q() + q().inverse(), Rational(1)) == 2);
  CHECK(evaluate(q() - q().inverse(), Rational(1)) == 0);
  CHECK(evaluate(qint(3), Rational(2)) == Rational(21, 4));
  CHECK(qint_at(3, Rational(2)) == Rational(21, 4));
}

TEST_CASE("evaluating at a pole throws") {
  const Scalar s = Scalar(1) / (q() - Scalar(1));
  CHECK_THROWS_AS(evaluate(s, Rational(1)), PoleError);
}

TEST_CASE("canonical form is unique") {
  const Scalar a = (q() * q() - Scalar(1)) / (q() - Scalar(1));
  CHECK(a == q() + Scalar(1));
  CHECK(a.str() == (q() + Scalar(1)).str());
  CHECK((Scalar(2) * q() / (Scalar(4) * q() * q())).str() == "(1)/(2*q)");
}

TEST_CASE("parameters do not mix") {
  CHECK_THROWS_AS(Scalar::param('q') + Scalar::param('h'), ParameterMismatch);
  CHECK_NOTHROW(Scalar::param('h') + Scalar(3));
}

TEST_CASE("root of unity guard") {
  CHECK(is_root_of_unity_risk(Rational(1), 4));
  CHECK(is_root_of_unity_risk(Rational(-1), 4));
  CHECK_FALSE(is_root_of_unity_risk(Rational(2), 10));
}

TEST_CASE("sample points are seeded and avoid roots of unity") {
  const auto a = sample_points(3, 7);
  CHECK(a == sample_points(3, 7));
  CHECK(a.size() == 3);
  for (const auto& x : a) CHECK_FALSE(is_root_of_unity_risk(x, 8));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
}
