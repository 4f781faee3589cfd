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


#include "qdouble/invariants.hpp"
#include "support.hpp"

using namespace qdouble;

namespace {
Scalar q() { return Scalar::param('q'); }
using E = NCElement<Scalar>;
E m(int i, int j) { return E(Letter(Tag::M, i - 1, j - 1)); }
}  // namespace

TEST_CASE("power sums") {
  const auto r1 = standard_hecke(1);
  CHECK(power_sum(1, Tag::M, r1, rtrace_form(r1)) == q().inverse() * m(1, 1));
  const auto r = standard_hecke(2);
  const auto c = rtrace_form(r);
  CHECK(power_sum(1, Tag::M, r, c) == q().inverse() * m(1, 1) + q().pow(-3) * m(2, 2));
  CHECK(elementary_symmetric(1, Tag::M, r, c) == power_sum(1, Tag::M, r, c));
  CHECK_THROWS_AS(elementary_symmetric(3, Tag::M, r, c), std::invalid_argument);
}

TEST_CASE("power sums and e2 are central at N=2") {
  const auto r = standard_hecke(2);
  const auto c = rtrace_form(r);
  const auto p = re_presentation(r, Tag::M);
  const auto e2 = elementary_symmetric(2, Tag::M, r, c);
  for (int k = 1; k <= 2; ++k) {
    const auto pk = power_sum(k, Tag::M, r, c);
    for (Letter g : p.generators()) CHECK(p.equals(pk * E(g), E(g) * pk, k + 1));
  }
  for (Letter g : p.generators()) CHECK(p.equals(e2 * E(g), E(g) * e2, 3));
}

TEST_CASE("Cayley-Hamilton at N=1 and N=2") {
  for (int n = 1; n <= 2; ++n) {
    const auto r = standard_hecke(n);
    const auto ch = cayley_hamilton_matrix(Tag::M, r, rtrace_form(r));
    const auto p = re_presentation(r, Tag::M);
    int entries = 0;
    for (const auto& e : ch.entries()) {
      CHECK(p.normal_form(e, n).is_zero());
      if (!e.is_zero()) ++entries;
    }
    if (n == 2) CHECK(entries == 4);
  }
}

TEST_CASE("TRL characters at N=2") {
  CHECK(spectral_char_trl(Partition({1}), 2, q()) == q().inverse() + q().pow(-5));
  CHECK(spectral_char_trl(Partition({2}), 2, q()) == q().inverse() + q().pow(-7));
  CHECK(spectral_char_trl(Partition({1, 1}), 2, q()) == q().pow(-3) + q().pow(-5));
  CHECK(spectral_char_trl(Partition({1, 1}), 2, q()).str() == "(q^2+1)/(q^5)");
  CHECK(spectral_char_trl(Partition(), 2, q()) == qint(2) * q().pow(-2));
  for (const auto& lambda : partitions_of(3, 3))
    CHECK(evaluate(spectral_char_trl(lambda, 3, q()), Rational(1)) == 3);
  CHECK_THROWS_AS(spectral_char_trl(Partition({1, 1, 1}), 2, q()), std::invalid_argument);
}

TEST_CASE("mu characters") {
  const auto s = spectral_character(Partition({1}), 2, q());
  CHECK(s.mu[0] == q().pow(-4));
  CHECK(s.mu[1] == Scalar(1));
  const auto z = spectral_character(Partition(), 3, q());
  for (int i = 1; i <= 3; ++i) CHECK(z.mu[static_cast<std::size_t>(i - 1)] == q().pow(-2 * (3 - i)));
  const auto t = spectral_character(Partition({2, 1}), 3, q());
  for (int k = 1; k <= 3; ++k)
    CHECK(evaluate(t.muhat[static_cast<std::size_t>(k - 1)], Rational(1)) == Partition({2, 1}).part(k) + 3 - k);
  // e_1 identity: chi(Tr_R L) = q^-1 sum mu_i.
  CHECK(s.trl == q().inverse() * (s.mu[0] + s.mu[1]));
  CHECK(s.power_sum(1) == s.trl);
}

TEST_CASE("operator oracle for Tr_R L") {
  const auto r = standard_hecke(2);
  const auto o = trl_operator(r, 1);
  CHECK(o == spectral_char_trl(Partition({1}), 2, q()) * TensorOperator<Scalar>::identity(2, 1));
  const auto o2 = trl_operator(r, 2);
  const auto fam = idempotent_family(r, 2);
  for (const auto& [t, p] : fam.members)
    if (t.shape().length() <= 2) CHECK(eigen_violation(o2, p, spectral_char_trl(t.shape(), 2, q())).empty());
}

TEST_CASE("word-level action agrees with the operator oracle") {
  const auto r = standard_hecke(2);
  const auto left = make_double(DoubleKind::Left, r);
  const auto trl = power_sum(1, Tag::L, r, rtrace_form(r));
  CHECK(central_action_operator(left, trl, r, 1) == trl_operator(r, 1));
  CHECK(central_action_operator(left, E::one(), r, 2) == TensorOperator<Scalar>::identity(2, 2));
}

TEST_CASE("suites") {
  CHECK(verify_trl_spectrum(2, 2).all_pass());
  CHECK(verify_spectrum(SpectrumElement::E2, Partition({1, 1}), 2).all_pass());
  CHECK(verify_e1_compatibility(3, 3).all_pass());
  CHECK(verify_cayley_hamilton(3, Mode::Sampled, 1, 5).all_pass());
}
