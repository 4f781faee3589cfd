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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdouble/report.hpp"
#include "qdouble/scalar.hpp"
#include "qdouble/tensor_operator.hpp"

namespace qdouble {

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A Hecke symmetry R on V (x) V: braid relation plus
/// R^2 = I + (q - q^-1) R. Validated on construction.
template <Field F>
class Braiding {
 public:
  Braiding(int n, F q, TensorOperator<F> r, std::string convention)
      : n_(n), q_(std::move(q)), r_(std::move(r)), convention_(std::move(convention)) {
    if (n_ < 1) throw std::invalid_argument("Braiding: dimension must be positive");
    if (r_.n() != n_ || r_.arity() != 2) throw std::invalid_argument("Braiding: matrix must act on V (x) V");
    const auto id = TensorOperator<F>::identity(n_, 2);
    if (!(r_ * r_ == id + nu() * r_)) throw InvariantViolation("Braiding: Hecke condition fails");
    inv_ = r_ - nu() * id;
    if (!(r_ * inv_ == id)) throw InvariantViolation("Braiding: R - nu I is not the inverse of R");
    const auto r1 = lift(3, 1);
    const auto r2 = lift(3, 2);
    if (!(r1 * r2 * r1 == r2 * r1 * r2)) throw InvariantViolation("Braiding: braid relation fails");
  }

  int n() const { return n_; }
  const F& q() const { return q_; }
  /// nu = q - q^-1.
  F nu() const { return q_ - F(1) / q_; }
  const TensorOperator<F>& matrix() const { return r_; }
  const TensorOperator<F>& inverse_matrix() const { return inv_; }
  const std::string& convention() const { return convention_; }

  /// R_i on V^{(x) arity}: R in slots (i, i+1).
  TensorOperator<F> lift(int arity, int position) const { return lift_op(r_, arity, position); }
  TensorOperator<F> lift_inverse(int arity, int position) const { return lift_op(inv_, arity, position); }

  /// The braiding R^-1, itself Hecke with q replaced by q^-1.
  Braiding inverse() const {
    return Braiding(n_, F(1) / q_, inv_, convention_ + " (inverse)");
  }

 private:
  TensorOperator<F> lift_op(const TensorOperator<F>& m, int arity, int position) const {
    if (position < 1 || position > arity - 1)
      throw std::out_of_range("Braiding::lift: position " + std::to_string(position) + " out of range for arity " +
                              std::to_string(arity));
    return m.embed(arity, position);
  }

  int n_;
  F q_;
  TensorOperator<F> r_;
  TensorOperator<F> inv_;
  std::string convention_;
};

inline constexpr const char* kHeckeConvention =
    "R(x_i(x)x_i)=q x_i(x)x_i; R(x_i(x)x_j)=x_j(x)x_i (i<j); "
    "R(x_i(x)x_j)=x_j(x)x_i+(q-q^-1)x_i(x)x_j (i>j); column vectors, lexicographic basis";

/// Drinfeld-Jimbo GL(n) Hecke symmetry at the given value of q.
template <Field F>
Braiding<F> standard_hecke_at(int n, const F& q) {
  if (n < 1) throw std::invalid_argument("standard_hecke: dimension must be positive");
  TensorOperator<F> r(n, 2);
  const F nu = q - F(1) / q;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t col = flat_index({i, j}, n);
      if (i == j) {
        r.set(col, col, q);
      } else {
        r.set(flat_index({j, i}, n), col, F(1));
        if (i > j) r.set(col, col, nu);
      }
    }
  return Braiding<F>(n, q, std::move(r), kHeckeConvention);
}

template <Field F>
Braiding<F> flip_at(int n) {
  TensorOperator<F> p(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.set(flat_index({j, i}, n), flat_index({i, j}, n), F(1));
  return Braiding<F>(n, F(1), std::move(p), "flip P(x(x)y)=y(x)x");
}

Braiding<Scalar> standard_hecke(int n, char param = 'q');
Braiding<Scalar> flip(int n);
Braiding<Rational> evaluate(const Braiding<Scalar>& r, const Rational& at);

/// Diagonal weight matrix C of the R-trace Tr_R X = Tr(C X).
template <Field F>
struct RTraceForm {
  std::vector<F> weights;
  F trace_of_identity() const {
    F t(0);
    for (const auto& w : weights) t = t + w;
    return t;
  }
};

/// Partial R-trace over one slot (1-based).
template <Field F>
TensorOperator<F> rtrace(const TensorOperator<F>& x, int slot, const RTraceForm<F>& c) {
  return x.partial_trace(slot, c.weights);
}

/// Copies X_{k-bar} = R_{k-1} X_{(k-1)-bar} R_{k-1}^-1 and
/// X_{k-under} = R_{k-1}^-1 X_{(k-1)-under} R_{k-1}, starting from X in slot 1.
template <Field F>
TensorOperator<F> over_copy(const TensorOperator<F>& x, int slot, int arity, const Braiding<F>& r) {
  TensorOperator<F> c = x.embed(arity, 1);
  for (int s = 2; s <= slot; ++s) c = r.lift(arity, s - 1) * c * r.lift_inverse(arity, s - 1);
  return c;
}

template <Field F>
TensorOperator<F> under_copy(const TensorOperator<F>& x, int slot, int arity, const Braiding<F>& r) {
  TensorOperator<F> c = x.embed(arity, 1);
  for (int s = 2; s <= slot; ++s) c = r.lift_inverse(arity, s - 1) * c * r.lift(arity, s - 1);
  return c;
}

/// Checks Tr_{R(2)} X_{2-bar} = Tr_{R(2)} X_{2-under} = (Tr_R X) I for every
/// matrix unit X. Returns an empty string on success, else a description.
template <Field F>
std::string trace_property_violation(const Braiding<F>& r, const RTraceForm<F>& c) {
  const int n = r.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      TensorOperator<F> x(n, 1);
      x.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b), F(1));
      const F tr = a == b ? c.weights[static_cast<std::size_t>(a)] : F(0);
      const auto expected = tr * TensorOperator<F>::identity(n, 1);
      if (!(rtrace(over_copy(x, 2, 2, r), 2, c) == expected))
        return "over copy of e_" + std::to_string(a + 1) + std::to_string(b + 1);
      if (!(rtrace(under_copy(x, 2, 2, r), 2, c) == expected))
        return "under copy of e_" + std::to_string(a + 1) + std::to_string(b + 1);
    }
  return {};
}

/// C = diag(q^-1, q^-3, ..., q^(1-2n)); verified against the trace property.
template <Field F>
RTraceForm<F> rtrace_form(const Braiding<F>& r) {
  RTraceForm<F> c;
  for (int i = 1; i <= r.n(); ++i) c.weights.push_back(power(r.q(), 1 - 2 * i));
  if (auto v = trace_property_violation(r, c); !v.empty())
    throw InvariantViolation("rtrace_form: trace property fails for " + v);
  return c;
}

/// Braiding suite: braid relation, Hecke condition and inverse for
/// N = 1..max_n, trace property and normalization, slot locality of the
/// R-trace, and a sampled smoke test at N = max_n + 1.
VerificationReport verify_braiding(int max_n = 4, std::uint64_t seed = 1);
/// Braid, Hecke and trace checks at sampled rational q.
VerificationReport verify_braiding_sampled(int n, int samples, std::uint64_t seed);

}  // namespace qdouble
