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


#include "qdouble/u2h_calculus.hpp"
#include "support.hpp"

using namespace qdouble;
using namespace qdouble::u2h;

namespace {
PBWElement X() { return PBWElement::x(); }
PBWElement Y() { return PBWElement::y(); }
PBWElement Z() { return PBWElement::z(); }
PBWElement T() { return PBWElement::t(); }
PBWElement Rad() { return PBWElement::radius(); }
PBWElement c(const Scalar& s) { return PBWElement(s); }
}  // namespace

TEST_CASE("PBW normal ordering") {
  CHECK(Y() * X() == X() * Y() - h() * Z());
  CHECK(Z() * Y() == Y() * Z() - h() * X());
  CHECK(Z() * X() == X() * Z() + h() * Y());
  CHECK(T() * X() == X() * T());
  CHECK((Y() * X()).str() == "(-h)*z + (1)*x*y");
}

TEST_CASE("quantum radius") {
  const auto r2 = Rad() * Rad();
  CHECK(r2 == X() * X() + Y() * Y() + Z() * Z() - c(h() * h() / Scalar(4)));
  CHECK(Rad() * PBWElement::inverse_radius() == c(Scalar(1)));
  CHECK(Rad() * X() == X() * Rad());
}

TEST_CASE("derivatives on generators") {
  CHECK(apply_derivative(Derivative::Dx, X()) == c(Scalar(1)));
  CHECK(apply_derivative(Derivative::Dx, Y()).is_zero());
  CHECK(apply_derivative(Derivative::Dy, Y()) == c(Scalar(1)));
  CHECK(apply_derivative(Derivative::Dz, Z()) == c(Scalar(1)));
  CHECK(apply_derivative(Derivative::DtHat, c(Scalar(1))) == c(Scalar(2) / h()));
  CHECK(apply_dt(c(Scalar(1))).is_zero());
}

TEST_CASE("derivatives of the radius") {
  CHECK(equal(apply_derivative(Derivative::Dx, Rad()), X() * PBWElement::inverse_radius()));
  CHECK(equal(apply_derivative(Derivative::Dy, Rad()), Y() * PBWElement::inverse_radius()));
  CHECK(equal(apply_derivative(Derivative::Dz, Rad()), Z() * PBWElement::inverse_radius()));
}

TEST_CASE("derivative of a square") {
  // The h-correction of d_x x^2 vanishes for this ordering.
  CHECK(apply_derivative(Derivative::Dx, X() * X()) == Scalar(2) * X());
}

TEST_CASE("derivatives commute") {
  const std::vector<Derivative> ds{Derivative::Dx, Derivative::Dy, Derivative::Dz, Derivative::DtHat};
  const auto a = X() * Y() * Z() + Y() * Y();
  for (auto d1 : ds)
    for (auto d2 : ds) {
      auto one = [&](Derivative d, const PBWElement& e) {
        return d == Derivative::DtHat ? apply_dt(e) : apply_derivative(d, e);
      };
      CHECK(equal(one(d1, one(d2, a)), one(d2, one(d1, a))));
    }
}

TEST_CASE("dhat of the unit is the identity") {
  const auto m = dhat_matrix(c(Scalar(1)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(m[static_cast<std::size_t>(4 * i + j)] == (i == j ? c(Scalar(1)) : PBWElement()));
}

TEST_CASE("dhat of x carries h/2") {
  const auto m = dhat_matrix(X());
  bool found = false;
  for (const auto& e : m) found = found || e == c(h() / Scalar(2));
  CHECK(found);
}

TEST_CASE("homomorphism on products and the radius") {
  CHECK(matrix_difference(dhat_matrix(X() * Y()), dhat_matrix(X()) * dhat_matrix(Y())).empty());
  CHECK(matrix_difference(dhat_matrix(Rad()), dhat_radius_closed_form()).empty());
  CHECK(matrix_difference(dhat_matrix(Rad()) * dhat_matrix(Rad()), dhat_matrix(Rad() * Rad())).empty());
}

TEST_CASE("bracket representation") {
  const auto xy = dhat_matrix(X()) * dhat_matrix(Y());
  const auto yx = dhat_matrix(Y()) * dhat_matrix(X());
  const auto z = dhat_matrix(Z());
  DhatMatrix lhs, rhs;
  for (std::size_t i = 0; i < 16; ++i) {
    lhs[i] = xy[i] - yx[i];
    rhs[i] = h() * z[i];
  }
  CHECK(matrix_difference(lhs, rhs).empty());
}

TEST_CASE("seeded random pairs are reproducible") {
  const auto a = default_pairs(5, 3);
  const auto b = default_pairs(5, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].first == b[i].first);
}

TEST_CASE("suites") {
  CHECK(verify_u2h(2, 5).all_pass());
  CHECK(classical_limit_report().all_pass());
}
