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


#include "qdouble/doubles.hpp"

namespace qdouble {

std::string kind_name(DoubleKind k) {
  switch (k) {
    case DoubleKind::LeftMod: return "left-modified";
    case DoubleKind::Left: return "left";
    case DoubleKind::AdjMod: return "adjoint-modified";
    case DoubleKind::Adj: return "adjoint";
    case DoubleKind::Qpd: return "qpd";
    case DoubleKind::Vec: return "vector";
    case DoubleKind::HShifted: return "h-shifted";
    case DoubleKind::ShiftedDhat: return "shifted-dhat";
  }
  return "?";
}

}  // namespace qdouble

namespace qdouble {

namespace {

using S = Scalar;
using MA = MatrixOverAlgebra<S>;

std::string first_nonzero(const MA& m, const std::function<NCElement<S>(const NCElement<S>&)>& reduce) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto v = reduce(m.at(i, j));
      if (!v.is_zero())
        return clip("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + v.str());
    }
  return {};
}

NCElement<S> identity_map(const NCElement<S>& x) { return x; }

// Entrywise difference of two matrices with an optional scale on the second.
std::string matrix_mismatch(const MA& a, const MA& b) { return first_nonzero(a - b, identity_map); }

// B words of degree <= 2 used as test vectors.
std::vector<NCElement<S>> short_b_words(const Presentation<S>& b) {
  std::vector<NCElement<S>> out{NCElement<S>(S(1))};
  for (Letter l : b.generators()) out.emplace_back(l);
  const auto& g = b.generators();
  for (std::size_t i = 0; i < g.size(); i += 2)
    for (std::size_t j = 1; j < g.size(); j += 2) out.push_back(NCElement<S>(g[i]) * NCElement<S>(g[j]));
  return out;
}

// Substitution L -> I - nu Lhat in the non-modified relation gives -nu times
// the modified one.
CheckRecord shift_check(DoubleKind plain, DoubleKind modified, const Braiding<S>& r, const std::string& anchor) {
  const S nu = r.nu();
  const auto subst = permutation_relation(plain, r).map_entries([&](const NCElement<S>& e) {
    return e.substitute([&](Letter l) {
      if (l.tag() != Tag::L) return NCElement<S>(l);
      NCElement<S> v = (S(0) - nu) * NCElement<S>(Letter(Tag::Lhat, l.row(), l.col()));
      if (l.row() == l.col()) v += NCElement<S>(S(1));
      return v;
    });
  });
  const auto w = matrix_mismatch(subst, (S(0) - nu) * permutation_relation(modified, r));
  return make_check(kind_name(plain) + " vs " + kind_name(modified) + " under L = I - nu Lhat N=" +
                        std::to_string(r.n()),
                    anchor, w.empty(), w);
}

}  // namespace

VerificationReport verify_doubles(int n) {
  VerificationReport rep;
  rep.suite = "doubles";
  const auto r = standard_hecke(n);
  const std::string tag = " N=" + std::to_string(n);
  const DoubleKind kinds[] = {DoubleKind::LeftMod, DoubleKind::Left, DoubleKind::AdjMod,
                              DoubleKind::Adj,     DoubleKind::Qpd,  DoubleKind::Vec};
  static const std::map<DoubleKind, std::string> anchors = {
      {DoubleKind::LeftMod, "Eq. (2.4)"}, {DoubleKind::Left, "Eq. (2.5)"}, {DoubleKind::AdjMod, "Eq. (2.7)"},
      {DoubleKind::Adj, "Eq. (2.8)"},     {DoubleKind::Qpd, "Eq. (2.9)"},  {DoubleKind::Vec, "Eq. (2.10)"}};
  std::map<DoubleKind, QuantumDouble<S>> built;

  for (auto k : kinds) {
    rep.add(timed_check([&] {
      try {
        auto qd = make_double(k, r);
        const auto bad = qd.counit_violations();
        auto rec = make_check("construct " + kind_name(k) + tag, anchors.at(k), bad.empty(),
                              bad.empty() ? "" : std::to_string(bad.size()) + " relations not killed by the counit");
        rec.details.emplace_back("sigma pairs", std::to_string(qd.sigma_table().size()));
        built.emplace(k, std::move(qd));
        return rec;
      } catch (const std::exception& e) {
        return make_check("construct " + kind_name(k) + tag, anchors.at(k), false, e.what());
      }
    }));
  }
  if (built.size() != std::size(kinds)) return rep;

  if (n == 1) {
    rep.add(timed_check([&] {
      const Letter l(Tag::L, 0, 0), m(Tag::M, 0, 0);
      const auto expect = power(r.q(), -2) * (NCElement<S>(m) * NCElement<S>(l));
      const auto& got = built.at(DoubleKind::Left).sigma(l, m);
      return make_check("left sigma l m = q^-2 m l", "Eq. (2.5)", got == expect, got == expect ? "" : got.str());
    }));
  }

  rep.add(timed_check([&] {
    const auto& qd = built.at(DoubleKind::Left);
    const auto M1 = MA::generating(Tag::M, n).embed(2, 1);
    const auto lhs = matrix_action(qd, MA::generating(Tag::L, n).embed(2, 1) * r.matrix(), M1);
    const auto w = matrix_mismatch(lhs, r.inverse_matrix() * M1);
    return make_check("L1 R |> M1 = R^-1 M1" + tag, "Eq. (2.6)", w.empty(), w);
  }));
  rep.add(timed_check([&] {
    const auto& qd = built.at(DoubleKind::Qpd);
    const auto lhs = matrix_action(qd, MA::generating(Tag::D, n).embed(2, 1), matrix_copy(Tag::M, 2, CopyVariant::Over, 2, r));
    const auto w = matrix_mismatch(lhs, MA::from_operator(r.inverse_matrix()));
    return make_check("D1 |> M2bar = R^-1" + tag, "Eq. (6.2)", w.empty(), w);
  }));
  rep.add(timed_check([&] {
    const auto& qd = built.at(DoubleKind::Left);
    const auto M1 = MA::generating(Tag::M, n).embed(2, 1);
    const auto lhs = matrix_action(qd, matrix_copy(Tag::L, 2, CopyVariant::Under, 2, r), M1);
    const auto w = matrix_mismatch(lhs, jucys_murphy_inverse(r, 2).back() * M1);
    return make_check("L2under |> M1 = J2^-1 M1" + tag, "Eq. (3.1)", w.empty(), w);
  }));

  rep.add(timed_check([&] { return shift_check(DoubleKind::Left, DoubleKind::LeftMod, r, "Eq. (1.4)"); }));
  rep.add(timed_check([&] { return shift_check(DoubleKind::Adj, DoubleKind::AdjMod, r, "Eq. (1.4)"); }));

  for (auto k : kinds) {
    const auto& qd = built.at(k);
    rep.add(timed_check([&] {
      // act(a1 a2, b) = act(a1, act(a2, b)) on generator pairs and short B words.
      std::string w;
      const auto bs = short_b_words(qd.algebra_b());
      for (Letter a1 : qd.algebra_a().generators())
        for (Letter a2 : qd.algebra_a().generators())
          for (const auto& b : bs) {
            if (!w.empty()) break;
            const NCElement<S> x1(a1), x2(a2);
            const auto lhs = qd.act(x1 * x2, b);
            const auto rhs = qd.act(x1, qd.act(x2, b));
            const auto d = qd.algebra_b().normal_form(lhs - rhs, std::max({lhs.degree(), rhs.degree(), 0}));
            if (!d.is_zero()) w = clip(a1.str() + "*" + a2.str() + " on " + b.str() + ": " + d.str());
          }
      return make_check("representation property " + kind_name(k) + tag, "Eq. (2.2)", w.empty(), w);
    }));
    rep.add(timed_check([&] {
      std::string w;
      for (const auto& rel : qd.algebra_a().relations())
        for (Letter b : qd.algebra_b().generators()) {
          const auto v = qd.canonical(rel * NCElement<S>(b));
          if (!v.is_zero() && w.empty()) w = clip("A relation * " + b.str() + ": " + v.str());
        }
      for (Letter a : qd.algebra_a().generators())
        for (const auto& rel : qd.algebra_b().relations()) {
          const auto v = qd.canonical(NCElement<S>(a) * rel);
          if (!v.is_zero() && w.empty()) w = clip(a.str() + " * B relation: " + v.str());
        }
      return make_check("ideal compatibility " + kind_name(k) + tag, "Definition 2.1", w.empty(), w);
    }));
  }

  rep.add(timed_check([&] {
    // Lhat := M D satisfies the left-modified permutation relations in the QPD double.
    const auto& qd = built.at(DoubleKind::Qpd);
    const auto md = MA::generating(Tag::M, n) * MA::generating(Tag::D, n);
    const auto rel = permutation_relation(DoubleKind::LeftMod, r).map_entries([&](const NCElement<S>& e) {
      return e.substitute([&](Letter l) {
        return l.tag() == Tag::Lhat ? md.at(static_cast<std::size_t>(l.row()), static_cast<std::size_t>(l.col()))
                                    : NCElement<S>(l);
      });
    });
    const auto w = first_nonzero(rel, [&](const NCElement<S>& x) { return qd.canonical(x); });
    return make_check("QPD consistency Lhat = M D" + tag, "Eq. (2.9)", w.empty(), w);
  }));

  rep.add(timed_check([&] {
    const auto& qd = built.at(DoubleKind::Vec);
    std::string w;
    for (const auto& quotient : {r_symmetric_algebra(r), r_skew_symmetric_algebra(r)})
      for (const auto& rel : quotient.relations())
        for (Letter a : qd.algebra_a().generators()) {
          const auto ordered = qd.normal_order(NCElement<S>(a) * rel);
          std::map<Word, NCElement<S>> by_a;
          for (const auto& [word, c] : ordered.terms()) {
            std::size_t split = 0;
            while (split < word.size() && qd.is_b(word[split])) ++split;
            by_a[word.subword(split, word.size() - split)].add_term(word.subword(0, split), c);
          }
          for (const auto& [aw, bpart] : by_a) {
            const auto v = quotient.normal_form(bpart, std::max(bpart.degree(), 0));
            if (!v.is_zero() && w.empty()) w = clip(quotient.name() + ", " + a.str() + ": " + v.str());
          }
        }
    return make_check("vector double preserves Sym_R and Lambda_R" + tag, "Eq. (2.10)", w.empty(), w);
  }));
  return rep;
}

VerificationReport verify_h_shifted(int n) {
  VerificationReport rep;
  rep.suite = "u2h";
  const std::string tag = " N=" + std::to_string(n);
  const auto r = standard_hecke(n);
  const S hnum = S(3) / S(5);
  const S nu = r.nu();

  rep.add(timed_check([&] {
    // M = h I - nu N and D = -D'/nu turn the QPD system into the h-shifted one.
    auto subst = [&](const NCElement<S>& e) {
      return e.substitute([&](Letter l) {
        if (l.tag() == Tag::M) {
          NCElement<S> v = (S(0) - nu) * NCElement<S>(Letter(Tag::N, l.row(), l.col()));
          if (l.row() == l.col()) v += NCElement<S>(hnum);
          return v;
        }
        if (l.tag() == Tag::D) return (S(-1) / nu) * NCElement<S>(l);
        return NCElement<S>(l);
      });
    };
    std::string w = matrix_mismatch(permutation_relation(DoubleKind::Qpd, r).map_entries(subst),
                                     permutation_relation(DoubleKind::HShifted, r, hnum));
    if (w.empty())
      w = matrix_mismatch(re_matrix(r, Tag::M).map_entries(subst), (nu * nu) * modified_re_matrix(r, Tag::N, hnum));
    auto rec = make_check("h-shifted consistency with QPD" + tag, "Eq. (6.1)", w.empty(), w);
    rec.details.emplace_back("h", to_string(hnum));
    return rec;
  }));

  rep.add(timed_check([&] {
    const auto at0 = permutation_relation(DoubleKind::HShifted, r, S(0)).map_entries([](const NCElement<S>& e) {
      return e.substitute([](Letter l) {
        return l.tag() == Tag::N ? NCElement<S>(Letter(Tag::M, l.row(), l.col())) : NCElement<S>(l);
      });
    });
    const auto w = matrix_mismatch(at0, permutation_relation(DoubleKind::Qpd, r));
    return make_check("h=0 recovers the QPD relation" + tag, "Eq. (6.1)", w.empty(), w);
  }));

  rep.add(timed_check([&] {
    const auto qd = h_shifted_double(DoubleKind::HShifted, r, hnum);
    const auto bad = qd.counit_violations();
    const auto lhs = matrix_action(qd, MA::generating(Tag::D, n).embed(2, 1),
                                   matrix_copy(Tag::N, 2, CopyVariant::Over, 2, r));
    std::string w = bad.empty() ? matrix_mismatch(lhs, MA::from_operator(r.inverse_matrix())) : "counit violation";
    return make_check("h-shifted D1 |> N2bar = R^-1" + tag, "Eq. (6.2)", w.empty(), w);
  }));

  const auto p = flip(n);
  const S hs = S::param('h');
  rep.add(timed_check([&] {
    const auto qd = h_shifted_double(DoubleKind::HShifted, p, hs);
    std::string w;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int s = 0; s < n; ++s) {
            const auto v = qd.act(NCElement<S>(Letter(Tag::D, i, j)), NCElement<S>(Letter(Tag::N, k, s)));
            const S expect = (i == s && k == j) ? S(1) : S(0);
            if (!(v == NCElement<S>(expect)) && w.empty()) w = clip(v.str());
          }
    return make_check("classical action d_ij |> n_ks at q=1" + tag, "Section 6 classical action", w.empty(), w);
  }));

  rep.add(timed_check([&] {
    // Dhat = D + h^-1 I turns the h-shifted relation into the shifted one.
    const auto shifted = permutation_relation(DoubleKind::HShifted, p, hs).map_entries([&](const NCElement<S>& e) {
      return e.substitute([&](Letter l) {
        if (l.tag() != Tag::D) return NCElement<S>(l);
        NCElement<S> v(Letter(Tag::Dhat, l.row(), l.col()));
        if (l.row() == l.col()) v -= NCElement<S>(S(1) / hs);
        return v;
      });
    });
    std::string w = matrix_mismatch(shifted, permutation_relation(DoubleKind::ShiftedDhat, p, hs));
    const auto qd = h_shifted_double(DoubleKind::ShiftedDhat, p, hs);
    if (w.empty() && !qd.counit_violations().empty()) w = "counit violation";
    // (counit (x) id) Delta(dhat_i^j) = sum_k counit(dhat_k^j) dhat_i^k = h^-1 dhat_i^j.
    for (int i = 0; i < n && w.empty(); ++i)
      for (int j = 0; j < n; ++j) {
        NCElement<S> lhs;
        for (int k = 0; k < n; ++k)
          lhs.add_scaled(NCElement<S>(Letter(Tag::Dhat, i, k)), qd.counit(Letter(Tag::Dhat, k, j)));
        if (!(lhs == (S(1) / hs) * NCElement<S>(Letter(Tag::Dhat, i, j)))) w = "coproduct counit mismatch";
      }
    auto rec = make_check("shifted derivatives Dhat = D + h^-1 I" + tag, "Section 6 shifted QPD", w.empty(), w);
    rec.details.emplace_back("permutation relations", std::to_string(qd.sigma_table().size()));
    return rec;
  }));
  return rep;
}

}  // namespace qdouble
