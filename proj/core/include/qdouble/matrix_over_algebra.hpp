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

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qdouble/braiding.hpp"
#include "qdouble/nc_element.hpp"
#include "qdouble/tensor_operator.hpp"

namespace qdouble {

/// Square matrix on V^{(x) arity} with noncommutative entries. Products keep
/// the letter order of the matrix factors.
template <Field F>
class MatrixOverAlgebra {
 public:
  MatrixOverAlgebra() = default;
  MatrixOverAlgebra(int n, int arity) : n_(n), arity_(arity), e_(dim() * dim()) {}

  /// The generating matrix X = (x_i^j) of an algebra, acting on one slot.
  static MatrixOverAlgebra generating(Tag tag, int n) {
    MatrixOverAlgebra m(n, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = letter<F>(tag, i, j);
    return m;
  }

  /// Column vector x = (x_i) placed in slot 1 of `arity` slots as x (x) I,
  /// padded into a square matrix whose slot-1 column index is pinned to 0.
  static MatrixOverAlgebra vector_in_first_slot(Tag tag, int n, int arity) {
    MatrixOverAlgebra m(n, arity);
    const std::size_t rest = ipow(static_cast<std::size_t>(n), arity - 1);
    for (int i = 0; i < n; ++i)
      for (std::size_t t = 0; t < rest; ++t)
        m.at(static_cast<std::size_t>(i) * rest + t, t) = letter<F>(tag, i, 0);
    return m;
  }

  static MatrixOverAlgebra from_operator(const TensorOperator<F>& op) {
    MatrixOverAlgebra m(op.n(), op.arity());
    for (std::size_t r = 0; r < op.dim(); ++r)
      for (const auto& [c, v] : op.matrix().row(r)) m.at(r, c) = NCElement<F>(v);
    return m;
  }

  int n() const { return n_; }
  int arity() const { return arity_; }
  std::size_t dim() const { return ipow(static_cast<std::size_t>(n_), arity_); }

  NCElement<F>& at(std::size_t r, std::size_t c) { return e_[r * dim() + c]; }
  const NCElement<F>& at(std::size_t r, std::size_t c) const { return e_[r * dim() + c]; }

  MatrixOverAlgebra embed(int total, int first) const {
    if (first < 1 || first + arity_ - 1 > total) throw std::out_of_range("MatrixOverAlgebra::embed: bad slots");
    const std::size_t nb = ipow(static_cast<std::size_t>(n_), first - 1);
    const std::size_t na = ipow(static_cast<std::size_t>(n_), total - (first - 1) - arity_);
    const std::size_t d = dim();
    MatrixOverAlgebra out(n_, total);
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          const auto& v = at(r, c);
          if (v.is_zero()) continue;
          for (std::size_t a = 0; a < na; ++a) out.at((b * d + r) * na + a, (b * d + c) * na + a) = v;
        }
    return out;
  }

  friend MatrixOverAlgebra operator*(const MatrixOverAlgebra& a, const MatrixOverAlgebra& b) {
    a.check_same(b);
    const std::size_t d = a.dim();
    MatrixOverAlgebra m(a.n_, a.arity_);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        const auto& x = a.at(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < d; ++c) {
          const auto& y = b.at(k, c);
          if (!y.is_zero()) m.at(r, c) += x * y;
        }
      }
    return m;
  }

  friend MatrixOverAlgebra operator*(const TensorOperator<F>& s, const MatrixOverAlgebra& a) {
    if (s.n() != a.n_ || s.arity() != a.arity_) throw std::invalid_argument("MatrixOverAlgebra: shape mismatch");
    const std::size_t d = a.dim();
    MatrixOverAlgebra m(a.n_, a.arity_);
    for (std::size_t r = 0; r < d; ++r)
      for (const auto& [k, v] : s.matrix().row(r))
        for (std::size_t c = 0; c < d; ++c) m.at(r, c).add_scaled(a.at(k, c), v);
    return m;
  }

  friend MatrixOverAlgebra operator*(const MatrixOverAlgebra& a, const TensorOperator<F>& s) {
    if (s.n() != a.n_ || s.arity() != a.arity_) throw std::invalid_argument("MatrixOverAlgebra: shape mismatch");
    const std::size_t d = a.dim();
    MatrixOverAlgebra m(a.n_, a.arity_);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) {
        const auto& x = a.at(r, k);
        if (x.is_zero()) continue;
        for (const auto& [c, v] : s.matrix().row(k)) m.at(r, c).add_scaled(x, v);
      }
    return m;
  }

  friend MatrixOverAlgebra operator*(const F& s, MatrixOverAlgebra a) {
    for (auto& x : a.e_) x = s * x;
    return a;
  }

  friend MatrixOverAlgebra operator+(MatrixOverAlgebra a, const MatrixOverAlgebra& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }
  friend MatrixOverAlgebra operator-(MatrixOverAlgebra a, const MatrixOverAlgebra& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] -= b.e_[i];
    return a;
  }
  friend MatrixOverAlgebra operator+(MatrixOverAlgebra a, const TensorOperator<F>& s) {
    return a + from_operator(s);
  }

  /// Weighted trace over one slot (1-based).
  MatrixOverAlgebra partial_trace(int slot, const std::vector<F>& weights) const {
    MatrixOverAlgebra out(n_, arity_ - 1);
    for (std::size_t r = 0; r < dim(); ++r) {
      auto ri = multi_index(r, n_, arity_);
      const int t = ri[static_cast<std::size_t>(slot - 1)];
      ri.erase(ri.begin() + slot - 1);
      const std::size_t ro = flat_index(ri, n_);
      for (std::size_t c = 0; c < dim(); ++c) {
        const auto& v = at(r, c);
        if (v.is_zero()) continue;
        auto ci = multi_index(c, n_, arity_);
        if (ci[static_cast<std::size_t>(slot - 1)] != t) continue;
        ci.erase(ci.begin() + slot - 1);
        out.at(ro, flat_index(ci, n_)).add_scaled(v, weights[static_cast<std::size_t>(t)]);
      }
    }
    return out;
  }

  /// Weighted trace over all slots.
  NCElement<F> full_trace(const std::vector<F>& weights) const {
    NCElement<F> t;
    for (std::size_t r = 0; r < dim(); ++r) {
      const auto& v = at(r, r);
      if (v.is_zero()) continue;
      F w(1);
      for (int i : multi_index(r, n_, arity_)) w = w * weights[static_cast<std::size_t>(i)];
      t.add_scaled(v, w);
    }
    return t;
  }

  /// <row| X |col> contraction with scalar tensors.
  NCElement<F> sandwich(const std::vector<F>& row, const std::vector<F>& col) const {
    NCElement<F> t;
    for (std::size_t r = 0; r < dim(); ++r) {
      if (is_zero(row[r])) continue;
      for (std::size_t c = 0; c < dim(); ++c) {
        if (is_zero(col[c])) continue;
        t.add_scaled(at(r, c), row[r] * col[c]);
      }
    }
    return t;
  }

  template <class Fn>
  MatrixOverAlgebra map_entries(Fn&& fn) const {
    MatrixOverAlgebra m = *this;
    for (auto& x : m.e_) x = fn(x);
    return m;
  }

  const std::vector<NCElement<F>>& entries() const { return e_; }

 private:
  void check_same(const MatrixOverAlgebra& b) const {
    if (n_ != b.n_ || arity_ != b.arity_) throw std::invalid_argument("MatrixOverAlgebra: shape mismatch");
  }

  int n_ = 0;
  int arity_ = 0;
  std::vector<NCElement<F>> e_;
};

enum class CopyVariant { Over, Under };

/// Matrix copies of a slot-1 matrix X in `arity` slots:
/// over:  X_{k} = R_{k-1} X_{k-1} R_{k-1}^-1,
/// under: X_{k} = R_{k-1}^-1 X_{k-1} R_{k-1}.
template <Field F>
MatrixOverAlgebra<F> matrix_copy(const MatrixOverAlgebra<F>& x1, int slot, CopyVariant variant, int arity,
                                 const Braiding<F>& r) {
  if (slot < 1 || slot > arity) throw std::out_of_range("matrix_copy: slot out of range");
  MatrixOverAlgebra<F> c = x1.arity() == arity ? x1 : x1.embed(arity, 1);
  for (int s = 2; s <= slot; ++s) {
    if (variant == CopyVariant::Over)
      c = r.lift(arity, s - 1) * c * r.lift_inverse(arity, s - 1);
    else
      c = r.lift_inverse(arity, s - 1) * c * r.lift(arity, s - 1);
  }
  return c;
}

/// Copy of the generating matrix of `tag`.
template <Field F>
MatrixOverAlgebra<F> matrix_copy(Tag tag, int slot, CopyVariant variant, int arity, const Braiding<F>& r) {
  return matrix_copy(MatrixOverAlgebra<F>::generating(tag, r.n()), slot, variant, arity, r);
}

/// X_1 X_{2-over} ... X_{k-over} on V^{(x) arity}, arity >= k.
template <Field F>
MatrixOverAlgebra<F> monomial_matrix(Tag tag, int k, int arity, const Braiding<F>& r) {
  MatrixOverAlgebra<F> p = matrix_copy(tag, 1, CopyVariant::Over, arity, r);
  for (int s = 2; s <= k; ++s) p = p * matrix_copy(tag, s, CopyVariant::Over, arity, r);
  return p;
}

inline MatrixOverAlgebra<Rational> evaluate(const MatrixOverAlgebra<Scalar>& m, const Rational& at) {
  MatrixOverAlgebra<Rational> out(m.n(), m.arity());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out.at(r, c) = evaluate(m.at(r, c), at);
  return out;
}

}  // namespace qdouble
