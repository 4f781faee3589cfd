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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qdouble/braiding.hpp"
#include "qdouble/matrix_over_algebra.hpp"
#include "qdouble/presentation.hpp"
#include "qdouble/re_algebra.hpp"
#include "qdouble/report.hpp"

namespace qdouble {

enum class DoubleKind { LeftMod, Left, AdjMod, Adj, Qpd, Vec, HShifted, ShiftedDhat };

std::string kind_name(DoubleKind k);

/// A pair of presented algebras (A, B) with permutation relations
/// a b = sigma(a b) and a counit on A. Mixed elements are normal ordered with
/// all B letters to the left of all A letters.
template <Field F>
class QuantumDouble {
 public:
  using Sigma = std::unordered_map<std::uint32_t, NCElement<F>>;

  /// Builds sigma by solving the componentwise matrix relation `relation`
  /// (an expression equal to zero in the double) for the A-letter B-letter
  /// products.
  QuantumDouble(std::string name, Presentation<F> a, Presentation<F> b, const MatrixOverAlgebra<F>& relation,
                std::map<std::uint16_t, F> counit)
      : name_(std::move(name)),
        a_(std::move(a)),
        b_(std::move(b)),
        counit_(std::move(counit)),
        memo_(std::make_shared<Memo>()) {
    solve_sigma(components(relation));
    for (Letter l : a_.generators())
      if (!counit_.count(l.code)) throw std::invalid_argument("QuantumDouble: counit missing for " + l.str());
  }

  const std::string& name() const { return name_; }
  const Presentation<F>& algebra_a() const { return a_; }
  const Presentation<F>& algebra_b() const { return b_; }
  const Sigma& sigma_table() const { return sigma_; }

  bool is_a(Letter l) const { return a_.has_letter(l); }
  bool is_b(Letter l) const { return b_.has_letter(l); }

  /// sigma(a b) for generators a of A and b of B.
  const NCElement<F>& sigma(Letter a, Letter b) const {
    auto it = sigma_.find(key(a, b));
    if (it == sigma_.end()) throw std::invalid_argument("sigma: not an (A, B) generator pair");
    return it->second;
  }

  F counit(Letter l) const { return counit_.at(l.code); }

  /// Counit extended multiplicatively to an element of A.
  F counit(const NCElement<F>& x) const {
    F s(0);
    for (const auto& [w, c] : x.terms()) {
      F t = c;
      for (Letter l : w) t = t * counit(l);
      s = s + t;
    }
    return s;
  }

  /// Rewrites every word into (B word)(A word) by applying sigma to the
  /// leftmost A-letter B-letter pair until none remains.
  NCElement<F> normal_order(const NCElement<F>& x) const {
    NCElement<F> out;
    for (const auto& [w, c] : x.terms()) out.add_scaled(order_word(w), c);
    return out;
  }

  /// Canonical form of an ordered element: NF_B grouped by A word, then
  /// NF_A grouped by B normal word.
  NCElement<F> binormal_form(const NCElement<F>& ordered) const {
    std::map<Word, NCElement<F>> by_a;
    for (const auto& [w, c] : ordered.terms()) {
      const std::size_t split = b_prefix(w);
      if (split != w.size() && !all_a(w, split))
        throw std::invalid_argument("binormal_form: element is not normal ordered");
      by_a[w.subword(split, w.size() - split)].add_term(w.subword(0, split), c);
    }
    std::map<Word, NCElement<F>> by_b;
    for (auto& [aw, bpart] : by_a) {
      const auto nb = b_.normal_form(bpart, std::max(bpart.degree(), 0));
      for (const auto& [bw, c] : nb.terms()) by_b[bw].add_term(aw, c);
    }
    NCElement<F> out;
    for (auto& [bw, apart] : by_b) {
      const auto na = a_.normal_form(apart, std::max(apart.degree(), 0));
      for (const auto& [aw, c] : na.terms()) out.add_term(bw * aw, c);
    }
    return out;
  }

  /// Canonical form of an arbitrary mixed element.
  NCElement<F> canonical(const NCElement<F>& x) const { return binormal_form(normal_order(x)); }

  bool equal(const NCElement<F>& x, const NCElement<F>& y) const { return canonical(x - y).is_zero(); }

  /// a |> b = (id (x) counit) sigma(a (x) b), returned in B normal form.
  NCElement<F> act(const NCElement<F>& a, const NCElement<F>& b) const {
    const auto ordered = normal_order(a * b);
    NCElement<F> out;
    for (const auto& [w, c] : ordered.terms()) {
      const std::size_t split = b_prefix(w);
      F e = c;
      for (std::size_t i = split; i < w.size(); ++i) e = e * counit(w[i]);
      out.add_term(w.subword(0, split), e);
    }
    return b_.normal_form(out, std::max(out.degree(), 0));
  }

  /// Counit applied to every relation of A; empty when all vanish.
  std::vector<std::size_t> counit_violations() const {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < a_.relations().size(); ++i)
      if (!is_zero(counit(a_.relations()[i]))) bad.push_back(i);
    return bad;
  }

 private:
  struct Memo {
    std::mutex mu;
    std::unordered_map<Word, NCElement<F>, WordHash> words;
  };

  static std::uint32_t key(Letter a, Letter b) { return (std::uint32_t{a.code} << 16) | b.code; }

  std::size_t b_prefix(const Word& w) const {
    std::size_t i = 0;
    while (i < w.size() && is_b(w[i])) ++i;
    return i;
  }
  bool all_a(const Word& w, std::size_t from) const {
    for (std::size_t i = from; i < w.size(); ++i)
      if (!is_a(w[i])) return false;
    return true;
  }

  NCElement<F> order_word(const Word& w) const {
    {
      std::lock_guard<std::mutex> lock(memo_->mu);
      if (auto it = memo_->words.find(w); it != memo_->words.end()) return it->second;
    }
    NCElement<F> result;
    std::size_t pos = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (is_a(w[i]) && is_b(w[i + 1])) {
        pos = i;
        break;
      }
    if (pos == w.size()) {
      for (Letter l : w)
        if (!is_a(l) && !is_b(l)) throw std::invalid_argument("normal_order: foreign letter " + l.str());
      result = NCElement<F>(w, F(1));
    } else {
      const Word head = w.subword(0, pos);
      const Word tail = w.subword(pos + 2, w.size() - pos - 2);
      for (const auto& [s, c] : sigma(w[pos], w[pos + 1]).terms()) result.add_scaled(order_word(head * s * tail), c);
    }
    std::lock_guard<std::mutex> lock(memo_->mu);
    memo_->words.emplace(w, result);
    return result;
  }

  /// Gauss-Jordan elimination with the A-letter B-letter words as unknowns.
  void solve_sigma(const std::vector<NCElement<F>>& equations) {
    std::vector<std::pair<Letter, Letter>> vars;
    std::map<std::uint32_t, std::size_t> index;
    for (Letter a : a_.generators())
      for (Letter b : b_.generators()) {
        index.emplace(key(a, b), vars.size());
        vars.emplace_back(a, b);
      }
    struct Row {
      std::map<std::size_t, F> coef;
      NCElement<F> rest;
    };
    std::vector<Row> rows;
    for (const auto& eq : equations) {
      Row r;
      for (const auto& [w, c] : eq.terms()) {
        if (w.size() == 2 && is_a(w[0]) && is_b(w[1]))
          r.coef.emplace(index.at(key(w[0], w[1])), c);
        else
          r.rest.add_term(w, c);
      }
      rows.push_back(std::move(r));
    }
    std::map<std::size_t, Row> pivots;
    for (auto& r : rows) {
      for (auto& [v, prow] : pivots) {
        auto it = r.coef.find(v);
        if (it == r.coef.end()) continue;
        const F f = it->second;
        for (const auto& [u, c] : prow.coef) {
          auto [jt, fresh] = r.coef.try_emplace(u, -(f * c));
          if (!fresh) {
            jt->second = jt->second - f * c;
            if (qdouble::is_zero(jt->second)) r.coef.erase(jt);
          }
        }
        r.rest.add_scaled(prow.rest, -f);
      }
      if (r.coef.empty()) {
        if (!binormal_form(r.rest).is_zero())
          throw InvariantViolation("QuantumDouble " + name_ + ": permutation relations are inconsistent");
        continue;
      }
      const std::size_t v = r.coef.begin()->first;
      const F inv = F(1) / r.coef.begin()->second;
      for (auto& [u, c] : r.coef) c = inv * c;
      r.rest = inv * r.rest;
      // Eliminate v from the existing pivot rows.
      for (auto& [pv, prow] : pivots) {
        auto it = prow.coef.find(v);
        if (it == prow.coef.end()) continue;
        const F f = it->second;
        for (const auto& [u, c] : r.coef) {
          auto [jt, fresh] = prow.coef.try_emplace(u, -(f * c));
          if (!fresh) {
            jt->second = jt->second - f * c;
            if (qdouble::is_zero(jt->second)) prow.coef.erase(jt);
          }
        }
        prow.rest.add_scaled(r.rest, -f);
      }
      pivots.emplace(v, std::move(r));
    }
    if (pivots.size() != vars.size())
      throw InvariantViolation("QuantumDouble " + name_ + ": permutation relations do not determine every product (" +
                               std::to_string(pivots.size()) + " of " + std::to_string(vars.size()) + ")");
    for (auto& [v, r] : pivots) {
      if (r.coef.size() != 1) throw InvariantViolation("QuantumDouble: elimination left a coupled unknown");
      sigma_.emplace(key(vars[v].first, vars[v].second), -r.rest);
    }
  }

  std::string name_;
  Presentation<F> a_;
  Presentation<F> b_;
  std::map<std::uint16_t, F> counit_;
  Sigma sigma_;
  std::shared_ptr<Memo> memo_;
};

/// Counit of a matrix algebra: diagonal entries to `diag`, others to 0.
template <Field F>
std::map<std::uint16_t, F> matrix_counit(Tag tag, int n, const F& diag) {
  std::map<std::uint16_t, F> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e.emplace(Letter(tag, i, j).code, i == j ? diag : F(0));
  return e;
}

/// The matrix expression (equal to zero in the double) that defines the
/// permutation relations of `kind`. h is used only by the h-deformed kinds:
///   HShifted:    D1 R N1 R - R N1 R^-1 D1 - R - h D1 R,
///   ShiftedDhat: Dh1 R N1 R - R N1 R Dh1 - h Dh1 R (involutive R).
template <Field F>
MatrixOverAlgebra<F> permutation_relation(DoubleKind kind, const Braiding<F>& r, const F& h = F(0)) {
  const int n = r.n();
  const auto& R = r.matrix();
  const auto& Ri = r.inverse_matrix();
  auto gen = [&](Tag t) { return MatrixOverAlgebra<F>::generating(t, n).embed(2, 1); };
  const auto Rm = MatrixOverAlgebra<F>::from_operator(R);
  switch (kind) {
    case DoubleKind::LeftMod: {
      const auto M1 = gen(Tag::M);
      const auto Lh = gen(Tag::Lhat);
      return R * Lh * R * M1 - M1 * R * Lh * Ri - R * M1;
    }
    case DoubleKind::Left: {
      const auto M1 = gen(Tag::M);
      const auto L = gen(Tag::L);
      return R * L * R * M1 - M1 * R * L * Ri;
    }
    case DoubleKind::AdjMod: {
      const auto M1 = gen(Tag::M);
      const auto Lh = gen(Tag::Lhat);
      return R * Lh * R * M1 - M1 * R * Lh * R - R * M1 + M1 * R;
    }
    case DoubleKind::Adj: {
      const auto M1 = gen(Tag::M);
      const auto L = gen(Tag::L);
      return R * L * R * M1 - M1 * R * L * R;
    }
    case DoubleKind::Qpd: {
      const auto M1 = gen(Tag::M);
      const auto D = gen(Tag::D);
      return D * R * M1 * R - R * M1 * Ri * D - Rm;
    }
    case DoubleKind::Vec: {
      const auto L = gen(Tag::L);
      const auto x1 = MatrixOverAlgebra<F>::vector_in_first_slot(Tag::X, n, 2);
      const auto L2 = MatrixOverAlgebra<F>::generating(Tag::L, n).embed(2, 2);
      return R * L * R * x1 - x1 * L2;
    }
    case DoubleKind::HShifted: {
      const auto N1 = gen(Tag::N);
      const auto D = gen(Tag::D);
      return D * R * N1 * R - R * N1 * Ri * D - Rm - h * (D * R);
    }
    case DoubleKind::ShiftedDhat: {
      const auto N1 = gen(Tag::N);
      const auto Dh = gen(Tag::Dhat);
      return Dh * R * N1 * R - R * N1 * R * Dh - h * (Dh * R);
    }
  }
  throw std::invalid_argument("permutation_relation: unknown kind");
}

/// The six doubles built on the braiding. HShifted and ShiftedDhat need the
/// deformation parameter h and go through h_shifted_double.
template <Field F>
QuantumDouble<F> make_double(DoubleKind kind, const Braiding<F>& r) {
  const int n = r.n();
  const auto B = re_presentation(r, Tag::M);
  const auto rel = [&] { return permutation_relation(kind, r); };
  switch (kind) {
    case DoubleKind::LeftMod:
      return QuantumDouble<F>(kind_name(kind), modified_re_presentation(r, Tag::Lhat), B, rel(),
                              matrix_counit(Tag::Lhat, n, F(0)));
    case DoubleKind::Left:
      return QuantumDouble<F>(kind_name(kind), re_presentation(r, Tag::L), B, rel(), matrix_counit(Tag::L, n, F(1)));
    case DoubleKind::AdjMod:
      return QuantumDouble<F>(kind_name(kind), modified_re_presentation(r, Tag::Lhat), B, rel(),
                              matrix_counit(Tag::Lhat, n, F(0)));
    case DoubleKind::Adj:
      return QuantumDouble<F>(kind_name(kind), re_presentation(r, Tag::L), B, rel(), matrix_counit(Tag::L, n, F(1)));
    case DoubleKind::Qpd:
      return QuantumDouble<F>(kind_name(kind), re_presentation(r.inverse(), Tag::D), B, rel(),
                              matrix_counit(Tag::D, n, F(0)));
    case DoubleKind::Vec:
      return QuantumDouble<F>(kind_name(kind), re_presentation(r, Tag::L),
                              free_presentation<F>("T(V)", vector_letters(Tag::X, n)), rel(),
                              matrix_counit(Tag::L, n, F(1)));
    default:
      throw std::invalid_argument("make_double: kind needs a deformation parameter");
  }
}

/// h-deformed doubles on (D, N_h) where N_h is the modified RE algebra with
/// right side h (R N - N R). ShiftedDhat needs an involutive braiding and
/// has counit(Dh) = h^-1 I.
template <Field F>
QuantumDouble<F> h_shifted_double(DoubleKind kind, const Braiding<F>& r, const F& h) {
  const int n = r.n();
  const auto B = modified_re_presentation(r, Tag::N, h);
  if (kind == DoubleKind::HShifted)
    return QuantumDouble<F>(kind_name(kind), re_presentation(r.inverse(), Tag::D), B,
                            permutation_relation(kind, r, h), matrix_counit(Tag::D, n, F(0)));
  if (kind == DoubleKind::ShiftedDhat) {
    if (!(r.matrix() * r.matrix() == TensorOperator<F>::identity(n, 2)))
      throw std::invalid_argument("h_shifted_double: shifted derivatives need an involutive braiding");
    return QuantumDouble<F>(kind_name(kind), re_presentation(r, Tag::Dhat), B, permutation_relation(kind, r, h),
                            matrix_counit(Tag::Dhat, n, F(1) / h));
  }
  throw std::invalid_argument("h_shifted_double: kind is not h-deformed");
}

/// (X |> Y)_{ac} = sum_b X_{ab} |> Y_{bc} for X over A and Y over B.
template <Field F>
MatrixOverAlgebra<F> matrix_action(const QuantumDouble<F>& qd, const MatrixOverAlgebra<F>& x,
                                   const MatrixOverAlgebra<F>& y) {
  MatrixOverAlgebra<F> out(x.n(), x.arity());
  for (std::size_t a = 0; a < x.dim(); ++a)
    for (std::size_t b = 0; b < x.dim(); ++b) {
      if (x.at(a, b).is_zero()) continue;
      for (std::size_t c = 0; c < x.dim(); ++c)
        if (!y.at(b, c).is_zero()) out.at(a, c) += qd.act(x.at(a, b), y.at(b, c));
    }
  return out;
}

/// Matrix of algebra elements acted on entrywise: (a |> X)_{rc} = a |> X_{rc}.
template <Field F>
MatrixOverAlgebra<F> act_entrywise(const QuantumDouble<F>& qd, const NCElement<F>& a, const MatrixOverAlgebra<F>& x) {
  return x.map_entries([&](const NCElement<F>& e) { return qd.act(a, e); });
}

/// Dense solve of an overdetermined linear system; nullopt when inconsistent.
/// `unique` reports whether the solution is unique.
template <Field F>
std::optional<std::vector<F>> solve_linear(std::vector<std::pair<std::vector<F>, F>> eqs, std::size_t unknowns,
                                           bool* unique) {
  std::vector<std::size_t> pivot_col;
  std::vector<std::pair<std::vector<F>, F>> piv;
  for (auto& [a, b] : eqs) {
    for (std::size_t p = 0; p < piv.size(); ++p) {
      const F f = a[pivot_col[p]];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < unknowns; ++j) a[j] = a[j] - f * piv[p].first[j];
      b = b - f * piv[p].second;
    }
    std::size_t c = 0;
    while (c < unknowns && is_zero(a[c])) ++c;
    if (c == unknowns) {
      if (!is_zero(b)) return std::nullopt;
      continue;
    }
    const F inv = F(1) / a[c];
    for (auto& v : a) v = inv * v;
    b = inv * b;
    for (std::size_t p = 0; p < piv.size(); ++p) {
      const F f = piv[p].first[c];
      if (is_zero(f)) continue;
      for (std::size_t j = 0; j < unknowns; ++j) piv[p].first[j] = piv[p].first[j] - f * a[j];
      piv[p].second = piv[p].second - f * b;
    }
    pivot_col.push_back(c);
    piv.emplace_back(std::move(a), std::move(b));
  }
  if (unique) *unique = piv.size() == unknowns;
  std::vector<F> x(unknowns, F(0));
  for (std::size_t p = 0; p < piv.size(); ++p) x[pivot_col[p]] = piv[p].second;
  return x;
}

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operator O on V^(x)k with a |> X = O X entrywise modulo the B ideal, for
/// a matrix X of B elements on k slots (typically M_1 M_2bar ... M_kbar).
template <Field F>
TensorOperator<F> action_operator(const QuantumDouble<F>& qd, const NCElement<F>& a, const MatrixOverAlgebra<F>& x) {
  const std::size_t dim = x.dim();
  const auto& b = qd.algebra_b();
  std::vector<NCElement<F>> nx(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) nx[r * dim + c] = b.normal_form(x.at(r, c), std::max(x.at(r, c).degree(), 0));
  TensorOperator<F> op(x.n(), x.arity());
  for (std::size_t r = 0; r < dim; ++r) {
    std::map<std::pair<std::size_t, Word>, std::pair<std::vector<F>, F>> rows;
    auto row_of = [&](std::size_t c, const Word& w) -> std::pair<std::vector<F>, F>& {
      auto [it, fresh] = rows.try_emplace({c, w});
      if (fresh) it->second = {std::vector<F>(dim, F(0)), F(0)};
      return it->second;
    };
    for (std::size_t c = 0; c < dim; ++c) {
      for (std::size_t s = 0; s < dim; ++s)
        for (const auto& [w, v] : nx[s * dim + c].terms()) {
          auto& e = row_of(c, w);
          e.first[s] = e.first[s] + v;
        }
      const auto image = qd.act(a, x.at(r, c));
      for (const auto& [w, v] : image.terms()) {
        auto& e = row_of(c, w);
        e.second = e.second + v;
      }
    }
    std::vector<std::pair<std::vector<F>, F>> eqs;
    for (auto& [k, e] : rows) eqs.push_back(std::move(e));
    bool unique = false;
    auto sol = solve_linear<F>(std::move(eqs), dim, &unique);
    if (!sol) throw InconsistentSystem("action_operator: element does not act as an operator on row " + std::to_string(r));
    if (!unique) throw InconsistentSystem("action_operator: monomial entries are linearly dependent");
    for (std::size_t s = 0; s < dim; ++s) op.set(r, s, (*sol)[s]);
  }
  return op;
}

/// Doubles suite: construction and counits of the six kinds, the printed
/// actions, shift compatibility, representation property, ideal
/// compatibility, QPD consistency and the vector-double quotients.
VerificationReport verify_doubles(int n);

/// h-deformed doubles: substitution consistency with the QPD double,
/// counits, actions on generators and the shifted derivatives.
VerificationReport verify_h_shifted(int n);

}  // namespace qdouble
