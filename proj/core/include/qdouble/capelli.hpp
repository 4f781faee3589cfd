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

#include <stdexcept>
#include <string>
#include <vector>

#include "qdouble/doubles.hpp"
#include "qdouble/heckerep.hpp"
#include "qdouble/report.hpp"
#include "qdouble/sampling.hpp"

namespace qdouble {

/// Rank-one factorization A = |u><v| with <v|u> = 1.
template <Field F>
struct StructurePair {
  std::vector<F> u;
  std::vector<F> v;
};

class RankNotOne : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// u is the first nonzero column of A scaled so its first nonzero component
/// is 1; v is the row of A through that component.
template <Field F>
StructurePair<F> extract_uv(const TensorOperator<F>& a) {
  if (a.rank() != 1) throw RankNotOne("extract_uv: projector rank is " + std::to_string(a.rank()));
  const std::size_t dim = a.dim();
  StructurePair<F> p{std::vector<F>(dim, F(0)), std::vector<F>(dim, F(0))};
  std::size_t col = dim;
  for (std::size_t c = 0; c < dim && col == dim; ++c)
    for (std::size_t r = 0; r < dim; ++r)
      if (!is_zero(a.at(r, c))) {
        col = c;
        break;
      }
  std::size_t lead = dim;
  for (std::size_t r = 0; r < dim; ++r)
    if (!is_zero(a.at(r, col))) {
      if (lead == dim) lead = r;
      p.u[r] = a.at(r, col);
    }
  const F scale = F(1) / p.u[lead];
  for (auto& x : p.u) x = scale * x;
  for (std::size_t c = 0; c < dim; ++c) p.v[c] = a.at(lead, c);
  F pairing(0);
  for (std::size_t i = 0; i < dim; ++i) pairing = pairing + p.v[i] * p.u[i];
  if (!(pairing == F(1))) throw InvariantViolation("extract_uv: <v|u> != 1, projector is not idempotent");
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (!(a.at(r, c) == p.u[r] * p.v[c])) throw InvariantViolation("extract_uv: A != |u><v|");
  return p;
}

/// det_R M = <v| M_1 M_2bar ... M_Nbar |u>; for the derivative tag the
/// factors are reversed: <v| D_Nbar ... D_2bar D_1 |u>.
template <Field F>
NCElement<F> det_r(Tag tag, const Braiding<F>& r, const StructurePair<F>& p) {
  const int n = r.n();
  MatrixOverAlgebra<F> prod;
  if (tag == Tag::D) {
    prod = matrix_copy(tag, n, CopyVariant::Over, n, r);
    for (int s = n - 1; s >= 1; --s) prod = prod * matrix_copy(tag, s, CopyVariant::Over, n, r);
  } else {
    prod = monomial_matrix(tag, n, n, r);
  }
  return prod.sandwich(p.v, p.u);
}

/// Lhat = M D with entries in the QPD double.
template <Field F>
MatrixOverAlgebra<F> lhat_from_md(int n) {
  return MatrixOverAlgebra<F>::generating(Tag::M, n) * MatrixOverAlgebra<F>::generating(Tag::D, n);
}

/// Lhat_1bar (Lhat_2bar + q I) ... (Lhat_kbar + q^(k-1) (k-1)_q I) on k slots.
template <Field F>
MatrixOverAlgebra<F> capelli_product(const Braiding<F>& r, int k) {
  const auto lh = lhat_from_md<F>(r.n());
  MatrixOverAlgebra<F> p = matrix_copy(lh, 1, CopyVariant::Over, k, r);
  for (int s = 2; s <= k; ++s) {
    const F shift = power(r.q(), s - 1) * qint_at(s - 1, r.q());
    p = p * (matrix_copy(lh, s, CopyVariant::Over, k, r) + shift * TensorOperator<F>::identity(r.n(), k));
  }
  return p;
}

/// q^(k(k-1)) A^(k) M_1bar ... M_kbar D_kbar ... D_1bar.
template <Field F>
MatrixOverAlgebra<F> capelli_rhs(const Braiding<F>& r, int k, const TensorOperator<F>& a) {
  MatrixOverAlgebra<F> p = monomial_matrix(Tag::M, k, k, r);
  for (int s = k; s >= 1; --s) p = p * matrix_copy(Tag::D, s, CopyVariant::Over, k, r);
  return power(r.q(), k * (k - 1)) * (a * p);
}

/// Element X of the double acting on b in B: sum over ordered terms b_w a_w
/// of b_w (a_w |> b), in B normal form.
template <Field F>
NCElement<F> act_on_b(const QuantumDouble<F>& qd, const NCElement<F>& x, const NCElement<F>& b) {
  const auto ordered = qd.normal_order(x);
  std::map<Word, NCElement<F>> by_a;
  for (const auto& [w, c] : ordered.terms()) {
    std::size_t split = 0;
    while (split < w.size() && qd.is_b(w[split])) ++split;
    by_a[w.subword(split, w.size() - split)].add_term(w.subword(0, split), c);
  }
  NCElement<F> out;
  for (const auto& [aw, bpart] : by_a) out += bpart * qd.act(NCElement<F>(aw, F(1)), b);
  return qd.algebra_b().normal_form(out, std::max(out.degree(), 0));
}

/// B monomials (words) of degree <= d.
template <Field F>
std::vector<NCElement<F>> b_monomials(const Presentation<F>& b, int d) {
  std::vector<Word> words{Word{}};
  std::vector<Word> layer{Word{}};
  for (int e = 1; e <= d; ++e) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter l : b.generators()) {
        Word x = w;
        x.push_back(l);
        next.push_back(x);
      }
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<NCElement<F>> out;
  for (const auto& w : words) out.emplace_back(w, F(1));
  return out;
}

/// Matrix Capelli identity: entrywise comparison of both sides, either as
/// canonical elements of the double or as operators on B monomials of degree
/// <= monomial_degree. Returns an empty string on success.
template <Field F>
std::string capelli_violation(const Braiding<F>& r, int k, bool operator_route, int monomial_degree = 2) {
  const auto qd = make_double(DoubleKind::Qpd, r);
  const auto a = skew_symmetrizer(r, k);
  const auto lhs = a * capelli_product(r, k) * a;
  const auto rhs = capelli_rhs(r, k, a);
  const auto monos = operator_route ? b_monomials(qd.algebra_b(), monomial_degree) : std::vector<NCElement<F>>{};
  for (std::size_t i = 0; i < lhs.dim(); ++i)
    for (std::size_t j = 0; j < lhs.dim(); ++j) {
      const auto diff = lhs.at(i, j) - rhs.at(i, j);
      const std::string where = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      if (!operator_route) {
        const auto res = qd.canonical(diff);
        if (!res.is_zero()) return clip(where + ": " + res.str());
        continue;
      }
      for (const auto& f : monos) {
        const auto res = act_on_b(qd, diff, f);
        if (!res.is_zero()) return clip(where + " on " + f.str() + ": " + res.str());
      }
    }
  return {};
}

/// Determinant Capelli identity; returns an empty string on success.
template <Field F>
std::string det_capelli_violation(const Braiding<F>& r) {
  const int n = r.n();
  const auto qd = make_double(DoubleKind::Qpd, r);
  const auto a = skew_symmetrizer(r, n);
  const auto c = rtrace_form(r);
  const auto lhs = (a * capelli_product(r, n)).full_trace(c.weights);
  const auto uv = extract_uv(a);
  const auto rhs = power(r.q(), -n) * (det_r(Tag::M, r, uv) * det_r(Tag::D, r, uv));
  const auto res = qd.canonical(lhs - rhs);
  return res.is_zero() ? std::string{} : clip(res.str());
}

VerificationReport verify_capelli(int n, int k, Mode mode = Mode::Exact, int samples = 3, std::uint64_t seed = 1);
VerificationReport verify_det_capelli(int n, Mode mode = Mode::Exact, int samples = 3, std::uint64_t seed = 1);

}  // namespace qdouble
