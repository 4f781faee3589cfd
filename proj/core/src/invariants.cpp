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

#include "qdouble/invariants.hpp"

#include "qdouble/re_algebra.hpp"

namespace qdouble {

const char* spectrum_element_name(SpectrumElement e) {
  switch (e) {
    case SpectrumElement::Trl: return "TRL";
    case SpectrumElement::E2: return "E2";
    case SpectrumElement::Pk: return "PK";
  }
  return "?";
}

namespace {

template <Field F>
CheckRecord cayley_hamilton_check(const Braiding<F>& r, const std::string& id) {
  const int n = r.n();
  const auto c = rtrace_form(r);
  const auto pres = re_presentation(r, Tag::L);
  const auto ch = cayley_hamilton_matrix(Tag::L, r, c);
  CheckRecord rec = make_check(id, "Eq. (3.7)", true);
  for (std::size_t i = 0; i < ch.dim() && rec.pass; ++i)
    for (std::size_t j = 0; j < ch.dim(); ++j) {
      const auto nf = pres.normal_form(ch.at(i, j), n);
      if (!nf.is_zero()) {
        rec.pass = false;
        rec.witness = clip("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + nf.str());
        break;
      }
    }
  rec.details.emplace_back("entries", std::to_string(ch.dim() * ch.dim()));
  rec.details.emplace_back("degree", std::to_string(n));
  return rec;
}

}  // namespace

VerificationReport verify_cayley_hamilton(int n, Mode mode, int samples, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "cayley-hamilton";
  const auto sym = standard_hecke(n);
  if (mode == Mode::Exact) {
    rep.add(timed_check([&] { return cayley_hamilton_check(sym, "cayley-hamilton N=" + std::to_string(n)); }));
    return rep;
  }
  for (const auto& p : sample_points(samples, seed, 2 * n + 2)) {
    rep.add(timed_check([&] {
      auto rec = cayley_hamilton_check(evaluate(sym, p), "cayley-hamilton N=" + std::to_string(n) + " q=" + to_string(p));
      rec.details.emplace_back("sample", to_string(p));
      return rec;
    }));
  }
  return rep;
}

VerificationReport verify_trl_spectrum(int n, int k) {
  VerificationReport rep;
  rep.suite = "spectrum";
  const auto r = standard_hecke(n);
  const auto o = trl_operator(r, k);
  const auto jm = jucys_murphy(r, k);
  const Scalar q = r.q();
  for (const auto& lambda : partitions_of(k, n)) {
    rep.add(timed_check([&] {
      const Scalar chi = spectral_char_trl(lambda, n, q);
      CheckRecord rec = make_check("trl N=" + std::to_string(n) + " lambda=" + lambda.str(), "Eq. (3.5)", true);
      int tableaux = 0;
      for (const auto& t : standard_tableaux(lambda)) {
        ++tableaux;
        const auto v = eigen_violation(o, young_idempotent(r, t, jm), chi);
        if (!v.empty()) {
          rec.pass = false;
          rec.witness = "tableau " + t.str() + ": " + v;
          break;
        }
      }
      rec.details.emplace_back("chi", chi.str());
      rec.details.emplace_back("tableaux", std::to_string(tableaux));
      rec.details.emplace_back("level", "operator rtrace_{k+1}(J_{k+1}^-1)");
      return rec;
    }));
  }
  return rep;
}

VerificationReport verify_spectrum(SpectrumElement element, const Partition& lambda, int n, int pw) {
  VerificationReport rep;
  rep.suite = element == SpectrumElement::Trl ? "spectrum" : "conjecture";
  const int k = lambda.weight();
  if (lambda.length() > n) throw std::invalid_argument("verify_spectrum: partition has more than N parts");
  if (element == SpectrumElement::E2 && n < 2) throw std::invalid_argument("verify_spectrum: e_2 needs N >= 2");
  const auto r = standard_hecke(n);
  const auto c = rtrace_form(r);
  const auto sc = spectral_character(lambda, n, r.q());
  NCElement<Scalar> a;
  Scalar chi;
  std::string anchor;
  switch (element) {
    case SpectrumElement::Trl:
      a = elementary_symmetric(1, Tag::L, r, c);
      chi = sc.trl;
      anchor = "Eq. (3.4)";
      break;
    case SpectrumElement::E2:
      a = elementary_symmetric(2, Tag::L, r, c);
      chi = sc.e[1];
      anchor = "Conjecture 3.4";
      break;
    case SpectrumElement::Pk:
      a = power_sum(pw, Tag::L, r, c);
      chi = sc.power_sum(pw);
      anchor = "Eq. (3.10)";
      break;
  }
  std::string id = std::string(spectrum_element_name(element)) + " N=" + std::to_string(n) + " lambda=" + lambda.str();
  if (element == SpectrumElement::Pk) id += " power=" + std::to_string(pw);
  rep.add(timed_check([&] {
    CheckRecord rec = make_check(id, anchor, true);
    rec.conjecture = element == SpectrumElement::E2;
    rec.details.emplace_back("chi", chi.str());
    const auto left = make_double(DoubleKind::Left, r);
    TensorOperator<Scalar> o;
    try {
      o = central_action_operator(left, a, r, k);
    } catch (const InconsistentSystem& e) {
      rec.pass = false;
      rec.witness = e.what();
      return rec;
    }
    if (element == SpectrumElement::Trl && !(o == trl_operator(r, k))) {
      rec.pass = false;
      rec.witness = "word-level operator differs from rtrace_{k+1}(J_{k+1}^-1)";
      return rec;
    }
    const auto jm = jucys_murphy(r, k);
    for (const auto& t : standard_tableaux(lambda)) {
      const auto v = eigen_violation(o, young_idempotent(r, t, jm), chi);
      if (!v.empty()) {
        rec.pass = false;
        rec.witness = "tableau " + t.str() + ": " + v;
        break;
      }
    }
    rec.details.emplace_back("level", "word-level action in the left double");
    return rec;
  }));
  return rep;
}

VerificationReport verify_e1_compatibility(int max_n, int max_k) {
  VerificationReport rep;
  rep.suite = "conjecture";
  const Scalar q = Scalar::param('q');
  for (int n = 1; n <= max_n; ++n)
    for (int k = 1; k <= max_k; ++k)
      rep.add(timed_check([&] {
        CheckRecord rec = make_check("e1 N=" + std::to_string(n) + " k=" + std::to_string(k), "Eq. (3.11)", true);
        rec.conjecture = true;
        int count = 0;
        for (const auto& lambda : partitions_of(k, n)) {
          ++count;
          const auto sc = spectral_character(lambda, n, q);
          if (!(sc.trl == sc.e[0])) {
            rec.pass = false;
            rec.witness = "lambda " + lambda.str() + ": " + sc.trl.str() + " vs " + sc.e[0].str();
            break;
          }
        }
        rec.details.emplace_back("partitions", std::to_string(count));
        return rec;
      }));
  return rep;
}

}  // namespace qdouble
