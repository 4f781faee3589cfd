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

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdouble/report.hpp"
#include "qdouble/scalar.hpp"

namespace qdouble::u2h {

/// Deformation parameter h as a Scalar in Q(h).
Scalar h();

/// Exponents of x^a y^b z^c t^d rh^e.
using Mono = std::array<int, 5>;

class UnsupportedElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of U(u(2)_h) extended by the central quantum radius rh with
/// rh^2 = x^2 + y^2 + z^2 - h^2/4. Terms are PBW ordered x < y < z < t < rh;
/// rh exponents are at most 1, negative ones allowed.
class PBWElement {
 public:
  PBWElement() = default;
  explicit PBWElement(const Scalar& c);
  PBWElement(const Mono& m, const Scalar& c);

  static PBWElement x();
  static PBWElement y();
  static PBWElement z();
  static PBWElement t();
  static PBWElement radius();
  static PBWElement inverse_radius();

  const std::map<Mono, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int degree() const;
  int min_radius_exponent() const;

  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(const Scalar& s, const PBWElement& a);
  friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.t_ == b.t_; }

  std::string str() const;

 private:
  void add(const Mono& m, const Scalar& c);
  std::map<Mono, Scalar> t_;
};

/// Canonical comparison: multiplies by rh^k to clear negative radius powers,
/// then compares PBW normal forms.
bool equal(const PBWElement& a, const PBWElement& b);

/// Product of the x, y, z, t, rh letters in the given order (0..4), in
/// normal form.
PBWElement from_word(const std::vector<int>& letters);

enum class Derivative { Dx, Dy, Dz, DtHat };
const char* derivative_name(Derivative d);

/// d |> a by pushing d rightward with the permutation table, then applying
/// the counit. Radius letters use the homomorphism rule with the closed form
/// of dhat(rh). Throws UnsupportedElement on negative radius powers.
PBWElement apply_derivative(Derivative d, const PBWElement& a);
/// Same, on a literal word of letters (no normal ordering first).
PBWElement apply_derivative_word(Derivative d, const std::vector<int>& letters);
/// Unshifted d_t |> a = dhat_t |> a - (2/h) a.
PBWElement apply_dt(const PBWElement& a);

using DhatMatrix = std::array<PBWElement, 16>;

/// h/2 times the pattern matrix of derivatives, applied to a.
DhatMatrix dhat_matrix(const PBWElement& a);
DhatMatrix dhat_matrix_word(const std::vector<int>& letters);
DhatMatrix operator*(const DhatMatrix& a, const DhatMatrix& b);
/// Closed form ((rh^2 + hh^2)/rh) I + (i hh / rh) M.
DhatMatrix dhat_radius_closed_form();
/// First differing entry, or empty when equal.
std::string matrix_difference(const DhatMatrix& a, const DhatMatrix& b);

VerificationReport verify_dhat_homomorphism(const std::vector<std::pair<PBWElement, PBWElement>>& pairs,
                                            const std::string& label);
/// Generator pairs plus `random_pairs` seeded random degree <= 3 pairs.
std::vector<std::pair<PBWElement, PBWElement>> default_pairs(int random_pairs, std::uint64_t seed);
VerificationReport classical_limit_report();
/// Full suite: commutativity, homomorphism, brackets, radius and limits.
VerificationReport verify_u2h(std::uint64_t seed = 1, int random_pairs = 20);

}  // namespace qdouble::u2h
