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
#include "qdouble/re_algebra.hpp"

using namespace qdouble;

namespace {
using E = NCElement<Scalar>;
E m(int i, int j) { return E(Letter(Tag::M, i - 1, j - 1)); }
}  // namespace

TEST_CASE("letters and words") {
  const Letter a(Tag::M, 0, 1);
  CHECK(a.tag() == Tag::M);
  CHECK(a.row() == 0);
  CHECK(a.col() == 1);
  CHECK(a.str() == "m12");
  CHECK(Letter(Tag::M, 1, 1) < Letter(Tag::L, 0, 0));
  Word w(a);
  w.push_back(Letter(Tag::D, 1, 0));
  CHECK(w.size() == 2);
  CHECK(w.degree_in(Tag::D) == 1);
}

TEST_CASE("element arithmetic") {
  const E x = m(1, 1);
  CHECK((x - x).is_zero());
  CHECK((x * m(2, 2)).degree() == 2);
  CHECK(!(x * m(2, 2) == m(2, 2) * x));
  CHECK((Scalar(2) * x).coeff(Word(Letter(Tag::M, 0, 0))) == Scalar(2));
}

TEST_CASE("N=1 RE algebra is free on one generator") {
  const auto p = re_presentation(standard_hecke(1), Tag::M);
  CHECK(p.relations().empty());
  for (int d = 0; d <= 4; ++d) CHECK(p.normal_word_count(d) == 1);
}

TEST_CASE("N=2 RE algebra has 6 independent quadratic relations") {
  const auto p = re_presentation(standard_hecke(2), Tag::M);
  CHECK(p.raw_relation_count() <= 16);
  CHECK(p.relations().size() == 6);
  CHECK(p.homogeneous());
  // Hilbert series of a commutative polynomial ring in 4 variables.
  CHECK(p.normal_word_count(2) == 10);
  CHECK(p.normal_word_count(3) == 20);
}

TEST_CASE("relations reduce to zero, degree-one words do not") {
  const auto p = re_presentation(standard_hecke(2), Tag::M);
  for (const auto& rel : p.relations()) CHECK(p.normal_form(rel, 2).is_zero());
  for (const auto& rel : components(re_matrix(standard_hecke(2), Tag::M))) CHECK(p.equals(rel, E(), 2));
  CHECK_FALSE(p.equals(m(1, 1), m(2, 2), 1));
}

TEST_CASE("q = 1 relations are commutators") {
  const auto p = re_presentation(flip(2), Tag::M);
  CHECK(p.equals(m(1, 2) * m(2, 1), m(2, 1) * m(1, 2), 2));
  for (const auto& rel : p.relations()) {
    Scalar total(0);
    for (const auto& [w, c] : rel.terms()) total += c;
    CHECK(total == Scalar(0));
  }
}

TEST_CASE("relations of N=3 at a sample point reduce") {
  const auto r = evaluate(standard_hecke(3), Rational(3, 2));
  const auto p = re_presentation(r, Tag::M);
  for (const auto& rel : components(re_matrix(r, Tag::M))) CHECK(p.normal_form(rel, 2).is_zero());
  CHECK(p.normal_word_count(2) == 45);
}

TEST_CASE("modified RE algebra is filtered") {
  const auto p = modified_re_presentation(standard_hecke(2), Tag::Lhat);
  CHECK_FALSE(p.homogeneous());
  CHECK(p.relations().size() == 6);
  CHECK(p.normal_word_count(2) == 15);
}

TEST_CASE("R-symmetric and R-skew algebras") {
  const auto r = standard_hecke(2);
  const auto sym = r_symmetric_algebra(r);
  const auto skew = r_skew_symmetric_algebra(r);
  // Homogeneous presentations count words of exact degree d.
  CHECK(sym.normal_word_count(2) == 3);
  CHECK(sym.normal_word_count(3) == 4);
  CHECK(skew.normal_word_count(2) == 1);
  CHECK(skew.normal_word_count(3) == 0);
}

TEST_CASE("matrix copies over the algebra") {
  const auto r = standard_hecke(2);
  const auto x1 = matrix_copy(Tag::M, 1, CopyVariant::Over, 1, r);
  CHECK(x1.entries() == MatrixOverAlgebra<Scalar>::generating(Tag::M, 2).entries());
  CHECK(matrix_copy(Tag::M, 1, CopyVariant::Over, 2, r).entries() ==
        matrix_copy(Tag::M, 1, CopyVariant::Under, 2, r).entries());
}
