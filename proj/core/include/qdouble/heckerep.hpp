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

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdouble/braiding.hpp"
#include "qdouble/scalar.hpp"
#include "qdouble/tensor_operator.hpp"

namespace qdouble {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// lambda_i (1-based); zero beyond the length.
  int part(int i) const { return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of k, in reverse lexicographic order ((k) first).
std::vector<Partition> partitions_of(int k);
/// Partitions of k with at most `max_length` parts.
std::vector<Partition> partitions_of(int k, int max_length);

Partition parse_partition(const std::string& text);

/// Dimension of the GL(n) irreducible of highest weight lambda (Weyl formula).
long weyl_dimension(const Partition& lambda, int n);
/// Number of standard tableaux by the hook length formula.
long hook_length_count(const Partition& lambda);

class StandardTableau {
 public:
  /// rows[r] lists the entries of row r; entries are 1..k.
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  Partition shape() const;
  int size() const { return size_; }
  /// Content column - row of the box holding `entry` (1-based entry).
  int content(int entry) const;
  /// Contents of the addable boxes of the sub-tableau holding 1..m.
  std::vector<int> addable_contents(int m) const;
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::string str() const;

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<std::pair<int, int>> position_;  // entry-1 -> (row, col), 0-based
  int size_ = 0;
};

/// All standard tableaux of shape lambda in last-letter order.
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

/// Sum over boxes of q^(-2 c(box)); depends only on the shape.
template <Field F>
F content_sum_power(const Partition& lambda, const F& q) {
  F s(0);
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda.part(r + 1); ++c) s = s + power(q, -2 * (c - r));
  return s;
}

template <Field F>
F content_sum_power(const StandardTableau& t, const F& q) {
  return content_sum_power(t.shape(), q);
}

/// J_1 = Id, J_i = R_{i-1} J_{i-1} R_{i-1} on V^{(x) k}.
template <Field F>
std::vector<TensorOperator<F>> jucys_murphy(const Braiding<F>& r, int k) {
  if (k < 1) throw std::invalid_argument("jucys_murphy: k must be positive");
  std::vector<TensorOperator<F>> j{TensorOperator<F>::identity(r.n(), k)};
  for (int i = 2; i <= k; ++i) {
    const auto ri = r.lift(k, i - 1);
    j.push_back(ri * j.back() * ri);
  }
  return j;
}

/// Inverses J_i^-1 = R_{i-1}^-1 J_{i-1}^-1 R_{i-1}^-1.
template <Field F>
std::vector<TensorOperator<F>> jucys_murphy_inverse(const Braiding<F>& r, int k) {
  std::vector<TensorOperator<F>> j{TensorOperator<F>::identity(r.n(), k)};
  for (int i = 2; i <= k; ++i) {
    const auto ri = r.lift_inverse(k, i - 1);
    j.push_back(ri * j.back() * ri);
  }
  return j;
}

/// A^(1) = I, A^(k) = (1/k_q) A^(k-1) (q^(k-1) I - (k-1)_q R_{k-1}) A^(k-1),
/// with A^(k-1) acting on the first k-1 slots.
template <Field F>
TensorOperator<F> skew_symmetrizer(const Braiding<F>& r, int k) {
  if (k < 1) throw std::invalid_argument("skew_symmetrizer: k must be positive");
  TensorOperator<F> a = TensorOperator<F>::identity(r.n(), 1);
  for (int m = 2; m <= k; ++m) {
    const auto prev = a.embed(m, 1);
    const auto mid = power(r.q(), m - 1) * TensorOperator<F>::identity(r.n(), m) -
                     qint_at(m - 1, r.q()) * r.lift(m, m - 1);
    a = (F(1) / qint_at(m, r.q())) * (prev * mid * prev);
  }
  return a;
}

/// Image P_T(R) of the primitive idempotent of tableau T, built from the
/// Jucys-Murphy spectrum: product over i of prod_{c' != c(i)}
/// (J_i - q^(2c')) / (q^(2c(i)) - q^(2c')), c' over addable contents of T|_{i-1}.
/// Shapes with more than n rows give the zero operator.
template <Field F>
TensorOperator<F> young_idempotent(const Braiding<F>& r, const StandardTableau& t,
                                   const std::vector<TensorOperator<F>>& jm) {
  const int k = t.size();
  if (static_cast<int>(jm.size()) != k) throw std::invalid_argument("young_idempotent: J family has wrong arity");
  const auto id = TensorOperator<F>::identity(r.n(), k);
  TensorOperator<F> p = id;
  for (int i = 2; i <= k; ++i) {
    const int ci = t.content(i);
    const F target = power(r.q(), 2 * ci);
    for (int c : t.addable_contents(i - 1)) {
      if (c == ci) continue;
      const F other = power(r.q(), 2 * c);
      if (is_zero(target - other))
        throw std::domain_error("young_idempotent: q^2 is a root of unity, contents collide for " + t.str());
      p = p * ((F(1) / (target - other)) * (jm[static_cast<std::size_t>(i - 1)] - other * id));
    }
  }
  if (!(p * p == p)) throw InvariantViolation("young_idempotent: result is not idempotent for " + t.str());
  return p;
}

template <Field F>
TensorOperator<F> young_idempotent(const Braiding<F>& r, const StandardTableau& t) {
  return young_idempotent(r, t, jucys_murphy(r, t.size()));
}

template <Field F>
struct IdempotentFamily {
  int arity = 0;
  std::vector<std::pair<StandardTableau, TensorOperator<F>>> members;
};

/// Idempotents for every standard tableau of every partition of k.
template <Field F>
IdempotentFamily<F> idempotent_family(const Braiding<F>& r, int k) {
  IdempotentFamily<F> fam;
  fam.arity = k;
  const auto jm = jucys_murphy(r, k);
  for (const auto& lambda : partitions_of(k))
    for (const auto& t : standard_tableaux(lambda)) fam.members.emplace_back(t, young_idempotent(r, t, jm));
  return fam;
}

/// Hecke-representation suite for N <= max_n, k <= max_k.
VerificationReport verify_heckerep(int max_n = 3, int max_k = 3);

}  // namespace qdouble
