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

#include <string>
#include <vector>

#include "qdouble/braiding.hpp"
#include "qdouble/heckerep.hpp"
#include "qdouble/matrix_over_algebra.hpp"
#include "qdouble/presentation.hpp"

namespace qdouble {

/// Entries of a matrix relation, skipping zeros.
template <Field F>
std::vector<NCElement<F>> components(const MatrixOverAlgebra<F>& m) {
  std::vector<NCElement<F>> out;
  for (const auto& e : m.entries())
    if (!e.is_zero()) out.push_back(e);
  return out;
}

/// R X1 R X1 - X1 R X1 R, the reflection equation as a matrix.
template <Field F>
MatrixOverAlgebra<F> re_matrix(const Braiding<F>& r, Tag tag) {
  const auto x1 = MatrixOverAlgebra<F>::generating(tag, r.n()).embed(2, 1);
  const auto& R = r.matrix();
  return R * x1 * R * x1 - x1 * R * x1 * R;
}

/// Reflection equation algebra on the generating matrix of `tag`.
template <Field F>
Presentation<F> re_presentation(const Braiding<F>& r, Tag tag) {
  return Presentation<F>("RE(" + tag_name(tag) + ")", matrix_letters(tag, r.n()), components(re_matrix(r, tag)));
}

/// Modified reflection equation R X1 R X1 - X1 R X1 R = c (R X1 - X1 R);
/// c = 1 gives the modified RE algebra, c = h its h-deformation.
template <Field F>
MatrixOverAlgebra<F> modified_re_matrix(const Braiding<F>& r, Tag tag, const F& c = F(1)) {
  const auto x1 = MatrixOverAlgebra<F>::generating(tag, r.n()).embed(2, 1);
  const auto& R = r.matrix();
  return re_matrix(r, tag) - c * (R * x1 - x1 * R);
}

template <Field F>
Presentation<F> modified_re_presentation(const Braiding<F>& r, Tag tag, const F& c = F(1)) {
  return Presentation<F>("mRE(" + tag_name(tag) + ")", matrix_letters(tag, r.n()),
                         components(modified_re_matrix(r, tag, c)));
}

/// Free algebra on the letters of a tag.
template <Field F>
Presentation<F> free_presentation(const std::string& name, std::vector<Letter> letters) {
  return Presentation<F>(name, std::move(letters), {});
}

/// Quotient of T(V) by the image of a two-slot projector applied to x (x) x.
template <Field F>
Presentation<F> quadratic_vector_quotient(const std::string& name, const TensorOperator<F>& projector, Tag tag) {
  const int n = projector.n();
  std::vector<NCElement<F>> rels;
  for (std::size_t row = 0; row < projector.dim(); ++row) {
    NCElement<F> rel;
    for (const auto& [col, v] : projector.matrix().row(row)) {
      const auto idx = multi_index(col, n, 2);
      Word w(Letter(tag, idx[0], 0));
      w.push_back(Letter(tag, idx[1], 0));
      rel.add_term(w, v);
    }
    if (!rel.is_zero()) rels.push_back(rel);
  }
  return Presentation<F>(name, vector_letters(tag, n), rels);
}

/// R-symmetric algebra: relations A^(2)(x (x) x) = 0.
template <Field F>
Presentation<F> r_symmetric_algebra(const Braiding<F>& r, Tag tag = Tag::X) {
  return quadratic_vector_quotient("Sym_R", skew_symmetrizer(r, 2), tag);
}

/// R-skew-symmetric algebra: relations (q^-1 I + R)(x (x) x) = 0.
template <Field F>
Presentation<F> r_skew_symmetric_algebra(const Braiding<F>& r, Tag tag = Tag::X) {
  const auto p = (F(1) / r.q()) * TensorOperator<F>::identity(r.n(), 2) + r.matrix();
  return quadratic_vector_quotient("Lambda_R", p, tag);
}

}  // namespace qdouble
