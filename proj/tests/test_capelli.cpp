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
#include "support.hpp"

using namespace qdouble;

namespace {
Scalar q() { return Scalar::param('q'); }
using E = NCElement<Scalar>;
E m(int i, int j) { return E(Letter(Tag::M, i - 1, j - 1)); }
}  // namespace

TEST_CASE("structure pair of A^(2)") {
  const auto a = skew_symmetrizer(standard_hecke(2), 2);
  const auto uv = extract_uv(a);
  Scalar pairing(0);
  for (std::size_t i = 0; i < 4; ++i) pairing += uv.v[i] * uv.u[i];
  CHECK(pairing == Scalar(1));
  Scalar trace(0);
  for (std::size_t i = 0; i < 4; ++i) trace += a.at(i, i);
  CHECK(trace == Scalar(1));
  // q = 1: u is proportional to x1 (x) x2 - x2 (x) x1.
  const auto u1 = extract_uv(evaluate(a, Rational(1))).u;
  CHECK(u1 == std::vector<Rational>{0, 1, -1, 0});
  CHECK_THROWS_AS(extract_uv(TensorOperator<Scalar>::identity(2, 2)), RankNotOne);
}

TEST_CASE("quantum determinant") {
  const auto r1 = standard_hecke(1);
  CHECK(det_r(Tag::M, r1, extract_uv(skew_symmetrizer(r1, 1))) == m(1, 1));
  const auto r = standard_hecke(2);
  const auto uv = extract_uv(skew_symmetrizer(r, 2));
  const auto det = det_r(Tag::M, r, uv);
  // Gauge invariance under u -> c u, v -> v / c.
  auto scaled = uv;
  for (auto& x : scaled.u) x = Scalar(3) * x;
  for (auto& x : scaled.v) x = x / Scalar(3);
  CHECK(det_r(Tag::M, r, scaled) == det);
  const auto p = re_presentation(r, Tag::M);
  for (Letter g : p.generators()) CHECK(p.equals(det * E(g), E(g) * det, 3));
  const auto flat = re_presentation(flip(2), Tag::M);
  const auto det1 = evaluate(det, Rational(1));
  CHECK(evaluate(flat, Rational(1)).equals(det1, evaluate(m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1), Rational(1)), 2));
}

TEST_CASE("k=1 Capelli is the definition of Lhat") {
  const auto r = standard_hecke(2);
  const auto prod = capelli_product(r, 1);
  CHECK(prod.entries() == lhat_from_md<Scalar>(2).entries());
  CHECK(capelli_violation(r, 1, false).empty());
  CHECK(capelli_violation(r, 1, true).empty());
}

TEST_CASE("Capelli N=2 k=2 via both routes") {
  const auto r = standard_hecke(2);
  CHECK(capelli_violation(r, 2, false).empty());
  CHECK(capelli_violation(r, 2, true).empty());
}

TEST_CASE("classical Capelli at q=1") {
  const auto p = flip_at<Rational>(2);
  CHECK(capelli_violation(p, 2, false).empty());
  CHECK(det_capelli_violation(p).empty());
}

TEST_CASE("determinant Capelli") {
  CHECK(det_capelli_violation(standard_hecke(1)).empty());
  CHECK(det_capelli_violation(standard_hecke(2)).empty());
}

TEST_CASE("a wrong shift is detected") {
  // Dropping the q-shift turns the product into M D M D, which differs.
  const auto r = standard_hecke(2);
  const auto qd = make_double(DoubleKind::Qpd, r);
  const auto a = skew_symmetrizer(r, 2);
  const auto lh1 = matrix_copy(lhat_from_md<Scalar>(2), 1, CopyVariant::Over, 2, r);
  const auto lh2 = matrix_copy(lhat_from_md<Scalar>(2), 2, CopyVariant::Over, 2, r);
  const auto bad = a * (lh1 * lh2) * a;
  const auto good = a * capelli_product(r, 2) * a;
  bool differs = false;
  for (std::size_t i = 0; i < bad.entries().size() && !differs; ++i)
    differs = !qd.equal(bad.entries()[i], good.entries()[i]);
  CHECK(differs);
}

TEST_CASE("suites") {
  CHECK(verify_capelli(2, 1).all_pass());
  CHECK(verify_det_capelli(3, Mode::Sampled, 1, 2).all_pass());
}
