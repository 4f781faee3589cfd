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

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdouble/scalar.hpp"

namespace qdouble {

/// Row-major sparse matrix over a field. Rows are ordered maps so iteration
/// order is deterministic.
template <Field F>
class SparseMatrix {
 public:
  using Row = std::map<std::size_t, F>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace(i, F(1));
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return rows_[r]; }

  F at(std::size_t r, std::size_t c) const {
    auto it = rows_[r].find(c);
    return it == rows_[r].end() ? F(0) : it->second;
  }

  void add_to(std::size_t r, std::size_t c, const F& v) {
    if (is_zero(v)) return;
    auto [it, fresh] = rows_[r].try_emplace(c, v);
    if (!fresh) {
      it->second = it->second + v;
      if (is_zero(it->second)) rows_[r].erase(it);
    }
  }

  void set(std::size_t r, std::size_t c, const F& v) {
    if (is_zero(v))
      rows_[r].erase(c);
    else
      rows_[r].insert_or_assign(c, v);
  }

  bool is_zero_matrix() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace(r, v);
    return t;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("SparseMatrix: shape mismatch in product");
    SparseMatrix m(a.rows(), b.cols_);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (const auto& [k, av] : a.rows_[r])
        for (const auto& [c, bv] : b.rows_[k]) m.add_to(r, c, av * bv);
    return m;
  }

  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) {
    a.check_same(b);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, v] : b.rows_[r]) a.add_to(r, c, v);
    return a;
  }

  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) {
    a.check_same(b);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (const auto& [c, v] : b.rows_[r]) a.add_to(r, c, -v);
    return a;
  }

  friend SparseMatrix operator*(const F& s, SparseMatrix a) {
    if (is_zero(s)) return SparseMatrix(a.rows(), a.cols());
    for (auto& r : a.rows_)
      for (auto& [c, v] : r) v = s * v;
    return a;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) return false;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a.rows_[r].size() != b.rows_[r].size()) return false;
      auto it = b.rows_[r].begin();
      for (const auto& [c, v] : a.rows_[r]) {
        if (it->first != c || !(it->second == v)) return false;
        ++it;
      }
    }
    return true;
  }

  template <class G, class Fn>
  SparseMatrix<G> map(Fn&& fn) const {
    SparseMatrix<G> m(rows(), cols_);
    for (std::size_t r = 0; r < rows(); ++r)
      for (const auto& [c, v] : rows_[r]) m.set(r, c, fn(v));
    return m;
  }

  /// Rank by Gaussian elimination over F.
  std::size_t rank() const {
    std::map<std::size_t, Row> pivots;  // pivot column -> normalized row
    for (const auto& r0 : rows_) {
      Row r = r0;
      while (!r.empty()) {
        auto lead = r.begin();
        auto pit = pivots.find(lead->first);
        if (pit == pivots.end()) break;
        const F f = lead->second;
        for (const auto& [c, v] : pit->second) {
          auto [it, fresh] = r.try_emplace(c, -(f * v));
          if (!fresh) {
            it->second = it->second - f * v;
            if (is_zero(it->second)) r.erase(it);
          }
        }
      }
      if (r.empty()) continue;
      const F inv = F(1) / r.begin()->second;
      for (auto& [c, v] : r) v = inv * v;
      const std::size_t col = r.begin()->first;
      pivots.emplace(col, std::move(r));
    }
    return pivots.size();
  }

 private:
  void check_same(const SparseMatrix& b) const {
    if (rows() != b.rows() || cols_ != b.cols_)
      throw std::invalid_argument("SparseMatrix: shape mismatch");
  }

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Flat index of a multi-index (i_1, ..., i_k), i_1 most significant.
inline std::size_t flat_index(const std::vector<int>& idx, int n) {
  std::size_t f = 0;
  for (int i : idx) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(i);
  return f;
}

inline std::vector<int> multi_index(std::size_t flat, int n, int arity) {
  std::vector<int> idx(static_cast<std::size_t>(arity));
  for (int s = arity - 1; s >= 0; --s) {
    idx[static_cast<std::size_t>(s)] = static_cast<int>(flat % static_cast<std::size_t>(n));
    flat /= static_cast<std::size_t>(n);
  }
  return idx;
}

inline std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Operator on V^{\otimes k}, dim V = n, in the lexicographic multi-index basis.
/// Storage is sparse for every arity; lifts of two-slot operators are very
/// sparse and the dense products of idempotents stay small for k <= 4.
template <Field F>
class TensorOperator {
 public:
  TensorOperator() = default;
  TensorOperator(int n, int arity)
      : n_(n), arity_(arity), m_(ipow(static_cast<std::size_t>(n), arity), ipow(static_cast<std::size_t>(n), arity)) {}
  TensorOperator(int n, int arity, SparseMatrix<F> m) : n_(n), arity_(arity), m_(std::move(m)) {
    if (m_.rows() != dim() || m_.cols() != dim())
      throw std::invalid_argument("TensorOperator: matrix shape does not match n^arity");
  }

  static TensorOperator identity(int n, int arity) {
    return TensorOperator(n, arity, SparseMatrix<F>::identity(ipow(static_cast<std::size_t>(n), arity)));
  }
  static TensorOperator zero(int n, int arity) { return TensorOperator(n, arity); }

  int n() const { return n_; }
  int arity() const { return arity_; }
  std::size_t dim() const { return ipow(static_cast<std::size_t>(n_), arity_); }
  const SparseMatrix<F>& matrix() const { return m_; }

  F at(std::size_t r, std::size_t c) const { return m_.at(r, c); }
  F at(const std::vector<int>& row, const std::vector<int>& col) const {
    return m_.at(flat_index(row, n_), flat_index(col, n_));
  }
  void set(std::size_t r, std::size_t c, const F& v) { m_.set(r, c, v); }
  void add_to(std::size_t r, std::size_t c, const F& v) { m_.add_to(r, c, v); }

  bool is_zero() const { return m_.is_zero_matrix(); }
  std::size_t rank() const { return m_.rank(); }

  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
    a.check_same(b);
    return TensorOperator(a.n_, a.arity_, a.m_ * b.m_);
  }
  friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    a.check_same(b);
    return TensorOperator(a.n_, a.arity_, a.m_ + b.m_);
  }
  friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
    a.check_same(b);
    return TensorOperator(a.n_, a.arity_, a.m_ - b.m_);
  }
  friend TensorOperator operator*(const F& s, const TensorOperator& a) {
    return TensorOperator(a.n_, a.arity_, s * a.m_);
  }
  friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
    return a.n_ == b.n_ && a.arity_ == b.arity_ && a.m_ == b.m_;
  }

  /// Places this operator on consecutive slots [first, first+arity) of a
  /// product of `total` copies of V, identity elsewhere. Slots are 1-based.
  TensorOperator embed(int total, int first) const {
    if (first < 1 || first + arity_ - 1 > total)
      throw std::out_of_range("TensorOperator::embed: slots out of range");
    const int before = first - 1;
    const int after = total - (first - 1) - arity_;
    const std::size_t nb = ipow(static_cast<std::size_t>(n_), before);
    const std::size_t na = ipow(static_cast<std::size_t>(n_), after);
    const std::size_t d = dim();
    TensorOperator out(n_, total);
    for (std::size_t b = 0; b < nb; ++b)
      for (std::size_t r = 0; r < d; ++r)
        for (const auto& [c, v] : m_.row(r))
          for (std::size_t a = 0; a < na; ++a)
            out.m_.set((b * d + r) * na + a, (b * d + c) * na + a, v);
    return out;
  }

  /// Trace over one slot (1-based) weighted by the diagonal `weights` in that slot.
  TensorOperator partial_trace(int slot, const std::vector<F>& weights) const {
    if (slot < 1 || slot > arity_) throw std::out_of_range("TensorOperator::partial_trace: slot out of range");
    if (static_cast<int>(weights.size()) != n_) throw std::invalid_argument("partial_trace: weight size");
    TensorOperator out(n_, arity_ - 1);
    for (std::size_t r = 0; r < dim(); ++r) {
      auto ri = multi_index(r, n_, arity_);
      const int tr = ri[static_cast<std::size_t>(slot - 1)];
      for (const auto& [c, v] : m_.row(r)) {
        auto ci = multi_index(c, n_, arity_);
        if (ci[static_cast<std::size_t>(slot - 1)] != tr) continue;
        ri.erase(ri.begin() + slot - 1);
        ci.erase(ci.begin() + slot - 1);
        out.m_.add_to(flat_index(ri, n_), flat_index(ci, n_), weights[static_cast<std::size_t>(tr)] * v);
        ri.insert(ri.begin() + slot - 1, tr);
      }
    }
    return out;
  }

  /// Weighted trace over all slots.
  F full_trace(const std::vector<F>& weights) const {
    F t(0);
    for (std::size_t r = 0; r < dim(); ++r) {
      F v = m_.at(r, r);
      if (is_zero(v)) continue;
      for (int i : multi_index(r, n_, arity_)) v = v * weights[static_cast<std::size_t>(i)];
      t = t + v;
    }
    return t;
  }

  template <class G, class Fn>
  TensorOperator<G> map(Fn&& fn) const {
    return TensorOperator<G>(n_, arity_, m_.template map<G>(std::forward<Fn>(fn)));
  }

  /// Sparse triplet text: header line "n arity", then "row col value" lines.
  std::string triplets() const {
    std::ostringstream os;
    os << n_ << " " << arity_ << "\n";
    for (std::size_t r = 0; r < dim(); ++r)
      for (const auto& [c, v] : m_.row(r)) os << r << " " << c << " " << to_string(v) << "\n";
    return os.str();
  }

 private:
  void check_same(const TensorOperator& b) const {
    if (n_ != b.n_ || arity_ != b.arity_) throw std::invalid_argument("TensorOperator: shape mismatch");
  }

  int n_ = 0;
  int arity_ = 0;
  SparseMatrix<F> m_;
};

inline TensorOperator<Rational> evaluate(const TensorOperator<Scalar>& op, const Rational& at) {
  return op.map<Rational>([&](const Scalar& s) { return s.evaluate(at); });
}

}  // namespace qdouble
