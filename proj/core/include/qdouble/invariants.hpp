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

#include "qdouble/braiding.hpp"
#include "qdouble/doubles.hpp"
#include "qdouble/heckerep.hpp"
#include "qdouble/matrix_over_algebra.hpp"
#include "qdouble/report.hpp"
#include "qdouble/sampling.hpp"

namespace qdouble {

/// Tr_R X^k for the generating matrix X of `tag` (ordinary matrix power).
template <Field F>
NCElement<F> power_sum(int k, Tag tag, const Braiding<F>& r, const RTraceForm<F>& c) {
  if (k < 1) throw std::invalid_argument("power_sum: k must be positive");
  const auto x = MatrixOverAlgebra<F>::generating(tag, r.n());
  auto p = x;
  for (int i = 1; i < k; ++i) p = p * x;
  return p.full_trace(c.weights);
}

/// e_k = Tr_{R(1..k)} (A^(k) X_1 X_2bar ... X_kbar).
template <Field F>
NCElement<F> elementary_symmetric(int k, Tag tag, const Braiding<F>& r, const RTraceForm<F>& c) {
  if (k < 1 || k > r.n()) throw std::invalid_argument("elementary_symmetric: need 1 <= k <= N");
  return (skew_symmetrizer(r, k) * monomial_matrix(tag, k, k, r)).full_trace(c.weights);
}

/// X^N - q e_1 X^(N-1) + q^2 e_2 X^(N-2) - ... + (-q)^N e_N I as an N x N matrix.
template <Field F>
MatrixOverAlgebra<F> cayley_hamilton_matrix(Tag tag, const Braiding<F>& r, const RTraceForm<F>& c) {
  const int n = r.n();
  const auto x = MatrixOverAlgebra<F>::generating(tag, n);
  std::vector<MatrixOverAlgebra<F>> pw{MatrixOverAlgebra<F>::from_operator(TensorOperator<F>::identity(n, 1))};
  for (int i = 1; i <= n; ++i) pw.push_back(pw.back() * x);
  MatrixOverAlgebra<F> out = pw[static_cast<std::size_t>(n)];
  for (int k = 1; k <= n; ++k) {
    const auto ek = elementary_symmetric(k, tag, r, c);
    const F coef = power(F(-r.q()), k);
    const auto term = pw[static_cast<std::size_t>(n - k)].map_entries([&](const NCElement<F>& e) { return ek * e; });
    out = out + coef * term;
  }
  return out;
}

/// Character of Tr_R L: N_q/q^N - nu q^(-2N) sum q^(-2c) over the boxes of lambda.
template <Field F>
F spectral_char_trl(const Partition& lambda, int n, const F& q) {
  if (lambda.length() > n) throw std::invalid_argument("spectral_char_trl: partition has more than N parts");
  const F nu = q - F(1) / q;
  return qint_at(n, q) * power(q, -n) - nu * power(q, -2 * n) * content_sum_power(lambda, q);
}

/// Characters of the central elements on the module of lambda.
template <Field F>
struct SpectralCharacter {
  Partition lambda;
  int n = 0;
  F trl = F(0);
  std::vector<F> mu;     // q^(-2(lambda_i + N - i))
  std::vector<F> muhat;  // q^(-(lambda_i + N - i)) (lambda_i + N - i)_q
  std::vector<F> e;      // e[k-1] = q^(-k) e_k(mu)
  std::vector<F> d;      // q^-1 prod_{j != i} (mu_i - q^-2 mu_j) / (mu_i - mu_j)

  /// Tr_R L^k = sum mu_i^k d_i.
  F power_sum(int k) const {
    F s(0);
    for (std::size_t i = 0; i < mu.size(); ++i) s = s + power(mu[i], k) * d[i];
    return s;
  }
};

/// Elementary symmetric polynomial of degree k in the values.
template <Field F>
F elementary_symmetric_value(const std::vector<F>& v, int k) {
  std::vector<F> e(static_cast<std::size_t>(k) + 1, F(0));
  e[0] = F(1);
  for (const auto& x : v)
    for (int j = k; j >= 1; --j) e[static_cast<std::size_t>(j)] = e[static_cast<std::size_t>(j)] + x * e[static_cast<std::size_t>(j - 1)];
  return e[static_cast<std::size_t>(k)];
}

template <Field F>
SpectralCharacter<F> spectral_character(const Partition& lambda, int n, const F& q) {
  if (lambda.length() > n) throw std::invalid_argument("spectral_character: partition has more than N parts");
  SpectralCharacter<F> s;
  s.lambda = lambda;
  s.n = n;
  s.trl = spectral_char_trl(lambda, n, q);
  for (int i = 1; i <= n; ++i) {
    const int m = lambda.part(i) + n - i;
    s.mu.push_back(power(q, -2 * m));
    s.muhat.push_back(power(q, -m) * qint_at(m, q));
  }
  for (int k = 1; k <= n; ++k) s.e.push_back(power(q, -k) * elementary_symmetric_value(s.mu, k));
  const F qm2 = power(q, -2);
  for (std::size_t i = 0; i < s.mu.size(); ++i) {
    F di = F(1) / q;
    for (std::size_t j = 0; j < s.mu.size(); ++j)
      if (j != i) di = di * (s.mu[i] - qm2 * s.mu[j]) / (s.mu[i] - s.mu[j]);
    s.d.push_back(di);
  }
  return s;
}

/// rtrace over slot k+1 of J_(k+1)^-1: the operator of Tr_R L on degree-k monomials.
template <Field F>
TensorOperator<F> trl_operator(const Braiding<F>& r, int k) {
  const auto jinv = jucys_murphy_inverse(r, k + 1);
  return rtrace(jinv.back(), k + 1, rtrace_form(r));
}

/// Empty when O P = P O = chi P; otherwise a witness naming the residual rank.
template <Field F>
std::string eigen_violation(const TensorOperator<F>& o, const TensorOperator<F>& p, const F& chi) {
  const auto target = chi * p;
  const auto left = o * p - target;
  if (!left.is_zero()) return "O*P - chi*P has rank " + std::to_string(left.rank());
  const auto right = p * o - target;
  if (!right.is_zero()) return "P*O - chi*P has rank " + std::to_string(right.rank());
  return {};
}

enum class SpectrumElement { Trl, E2, Pk };

const char* spectrum_element_name(SpectrumElement e);

/// Word-level operator of a central element of L(R) on degree-k monomials
/// M_1 M_2bar ... M_kbar in the left double.
template <Field F>
TensorOperator<F> central_action_operator(const QuantumDouble<F>& left, const NCElement<F>& a, const Braiding<F>& r,
                                          int k) {
  return action_operator(left, a, monomial_matrix(Tag::M, k, k, r));
}

/// Cayley-Hamilton over the braiding; returns the first nonvanishing entry.
VerificationReport verify_cayley_hamilton(int n, Mode mode, int samples = 3, std::uint64_t seed = 1);

/// Operator-level spectrum check of Tr_R L for every lambda |- k, N.
VerificationReport verify_trl_spectrum(int n, int k);

/// Word-level spectrum check of TRL, E2 or PK (power `power`) in the left
/// double at rank N on every tableau of lambda.
VerificationReport verify_spectrum(SpectrumElement element, const Partition& lambda, int n, int power = 2);

/// The e_1 identity chi(Tr_R L) = q^-1 sum chi(mu_i) for all lambda |- k <= max_k.
VerificationReport verify_e1_compatibility(int max_n, int max_k);

}  // namespace qdouble
