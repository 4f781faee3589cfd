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
#include "qdouble/heckerep.hpp"

using namespace qdouble;

namespace {
Scalar q() { return Scalar::param('q'); }
using Op = TensorOperator<Scalar>;
}  // namespace

TEST_CASE("partitions and tableaux") {
  CHECK(partitions_of(3).size() == 3);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(3, 2).size() == 2);
  CHECK(standard_tableaux(Partition({2})).size() == 1);
  CHECK(standard_tableaux(Partition({2, 1})).size() == 2);
  CHECK(hook_length_count(Partition({2, 1})) == 2);
  CHECK(hook_length_count(Partition({3, 2})) == 5);
  const auto col = standard_tableaux(Partition({1, 1, 1}));
  REQUIRE(col.size() == 1);
  CHECK(col[0].content(1) == 0);
  CHECK(col[0].content(2) == -1);
  CHECK(col[0].content(3) == -2);
  CHECK(parse_partition("2,1") == Partition({2, 1}));
  CHECK_THROWS(parse_partition("1,2"));
}

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dimension(Partition({1}), 2) == 2);
  CHECK(weyl_dimension(Partition({2}), 2) == 3);
  CHECK(weyl_dimension(Partition({1, 1}), 2) == 1);
  CHECK(weyl_dimension(Partition({2, 1}), 3) == 8);
  CHECK(weyl_dimension(Partition({1, 1, 1}), 2) == 0);
}

TEST_CASE("content sums") {
  CHECK(content_sum_power(Partition({1}), q()) == Scalar(1));
  CHECK(content_sum_power(Partition({2}), q()) == Scalar(1) + q().pow(-2));
  CHECK(content_sum_power(Partition({1, 1}), q()) == Scalar(1) + q().pow(2));
}

TEST_CASE("Jucys-Murphy elements") {
  const auto r = standard_hecke(2);
  const auto j = jucys_murphy(r, 3);
  CHECK(j[0] == Op::identity(2, 3));
  const auto nu = q() - q().inverse();
  CHECK(jucys_murphy(r, 2)[1] == Op::identity(2, 2) + nu * r.matrix());
  CHECK(j[1] * j[2] == j[2] * j[1]);
  const auto ji = jucys_murphy_inverse(r, 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(j[i] * ji[i] == Op::identity(2, 3));
}

TEST_CASE("skew-symmetrizers") {
  const auto r = standard_hecke(2);
  CHECK(skew_symmetrizer(r, 1) == Op::identity(2, 1));
  const auto a2 = skew_symmetrizer(r, 2);
  CHECK(a2 == (Scalar(1) / qint(2)) * (q() * Op::identity(2, 2) - r.matrix()));
  CHECK(a2.rank() == 1);
  CHECK(skew_symmetrizer(r, 3).is_zero());
  const auto r3 = standard_hecke(3);
  CHECK(skew_symmetrizer(r3, 3).rank() == 1);
}

TEST_CASE("two-box idempotents") {
  const auto r = standard_hecke(2);
  const auto id = Op::identity(2, 2);
  const auto row = young_idempotent(r, standard_tableaux(Partition({2}))[0]);
  const auto col = young_idempotent(r, standard_tableaux(Partition({1, 1}))[0]);
  CHECK(col == skew_symmetrizer(r, 2));
  CHECK(row == (Scalar(1) / qint(2)) * (q().inverse() * id + r.matrix()));
  CHECK(row + col == id);
  CHECK((row * col).is_zero());
}

TEST_CASE("one-column idempotent is the skew-symmetrizer") {
  for (int n = 2; n <= 3; ++n) {
    const auto r = standard_hecke(n);
    for (int k = 1; k <= 3; ++k) {
      std::vector<std::vector<int>> rows;
      for (int i = 1; i <= k; ++i) rows.push_back({i});
      CHECK(young_idempotent(r, StandardTableau(rows)) == skew_symmetrizer(r, k));
    }
  }
}

TEST_CASE("tall shapes vanish at small N") {
  const auto r = standard_hecke(2);
  CHECK(young_idempotent(r, standard_tableaux(Partition({1, 1, 1}))[0]).is_zero());
}

TEST_CASE("family completeness and q=1 ranks at N=2, k=3") {
  const auto r = standard_hecke(2);
  const auto fam = idempotent_family(r, 3);
  CHECK(fam.members.size() == 4);
  auto sum = Op::zero(2, 3);
  for (const auto& [t, p] : fam.members) sum = sum + p;
  CHECK(sum == Op::identity(2, 3));
  // Symbolic projectors are regular at q = 1 even though the recursion is not.
  for (const auto& [t, p] : fam.members)
    CHECK(static_cast<long>(evaluate(p, Rational(1)).rank()) == weyl_dimension(t.shape(), 2));
  CHECK_THROWS_AS(idempotent_family(evaluate(r, Rational(1)), 3), std::domain_error);
}

TEST_CASE("A R_i = -q^-1 A") {
  const auto r = standard_hecke(3);
  const auto a = skew_symmetrizer(r, 3);
  for (int i = 1; i <= 2; ++i) {
    CHECK(a * r.lift(3, i) == (-q().inverse()) * a);
    CHECK(r.lift(3, i) * a == (-q().inverse()) * a);
  }
}
