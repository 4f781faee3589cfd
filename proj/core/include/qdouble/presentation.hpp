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

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdouble/nc_element.hpp"
#include "qdouble/scalar.hpp"
#include "qdouble/word.hpp"

namespace qdouble {

class DegreeOverflow : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Row-echelon basis of a subspace of the free algebra. Each row is stored
/// with its largest word (the pivot) carrying coefficient 1.
template <Field F>
class EchelonBasis {
 public:
  /// Adds x to the span; returns true when the rank grows.
  bool insert(NCElement<F> x) {
    while (!x.is_zero()) {
      const auto& lead = *x.terms().rbegin();
      auto p = rows_.find(lead.first);
      if (p == rows_.end()) break;
      const F c = lead.second;
      x.add_scaled(p->second, -c);
    }
    if (x.is_zero()) return false;
    const auto& lead = *x.terms().rbegin();
    const Word pivot = lead.first;
    const F inv = F(1) / lead.second;
    rows_.emplace(pivot, inv * x);
    return true;
  }

  /// Residue of x after eliminating every pivot word, scanning from the top.
  NCElement<F> reduce(NCElement<F> x) const {
    if (rows_.empty()) return x;
    const auto& t = x.terms();
    auto it = t.end();
    while (it != t.begin()) {
      --it;
      auto p = rows_.find(it->first);
      if (p == rows_.end()) continue;
      const Word w = it->first;
      const F c = it->second;
      x.add_scaled(p->second, -c);
      it = t.lower_bound(w);
    }
    return x;
  }

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Word& w) const { return rows_.count(w) != 0; }
  const std::map<Word, NCElement<F>>& rows() const { return rows_; }

 private:
  std::map<Word, NCElement<F>> rows_;
};

/// Algebra presented by generators and relations. Homogeneous presentations
/// cache one echelon basis of the ideal per exact degree; inhomogeneous
/// (filtered) ones cache one basis per degree bound, spanned by all
/// w1 r w2 whose top degree fits under the bound.
template <Field F>
class Presentation {
 public:
  Presentation() : cache_(std::make_shared<Cache>()) {}
  Presentation(std::string name, std::vector<Letter> generators, const std::vector<NCElement<F>>& relations)
      : name_(std::move(name)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    raw_count_ = relations.size();
    EchelonBasis<F> e;
    for (const auto& r : relations) {
      if (r.is_zero()) continue;
      if (r.degree() != r.low_degree()) homogeneous_ = false;
      e.insert(r);
    }
    for (const auto& [w, r] : e.rows()) relations_.push_back(r);
    for (Letter l : generators_) letter_codes_.insert(l.code);
  }

  const std::string& name() const { return name_; }
  const std::vector<Letter>& generators() const { return generators_; }
  /// Independent relations (row-reduced).
  const std::vector<NCElement<F>>& relations() const { return relations_; }
  std::size_t raw_relation_count() const { return raw_count_; }
  bool homogeneous() const { return homogeneous_; }
  bool has_letter(Letter l) const { return letter_codes_.count(l.code) != 0; }

  /// Presentation with extra relations adjoined.
  Presentation with_relations(const std::string& name, const std::vector<NCElement<F>>& extra) const {
    std::vector<NCElement<F>> all = relations_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Presentation(name, generators_, all);
  }

  /// Ideal basis: degree-d component (homogeneous) or filtered piece <= d.
  std::shared_ptr<const EchelonBasis<F>> ideal_basis(int d) const {
    if (d < 0) throw std::invalid_argument("Presentation: negative degree");
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto& store = cache_->bases;
    if (auto it = store.find(d); it != store.end()) return it->second;
    int start = d;
    while (start > 0 && !store.count(start - 1)) --start;
    for (int e = start; e <= d; ++e) {
      auto b = std::make_shared<EchelonBasis<F>>();
      if (auto prev = store.find(e - 1); prev != store.end()) {
        for (const auto& [w, row] : prev->second->rows())
          for (Letter l : generators_) {
            const NCElement<F> x(l);
            b->insert(x * row);
            b->insert(row * x);
          }
        // Filtered pieces are nested.
        if (!homogeneous_)
          for (const auto& [w, row] : prev->second->rows()) b->insert(row);
      }
      for (const auto& r : relations_)
        if (r.degree() == e) b->insert(r);
      store.emplace(e, std::move(b));
    }
    return store.at(d);
  }

  /// Canonical representative of x modulo the ideal, within the degree bound.
  NCElement<F> normal_form(const NCElement<F>& x, int bound) const {
    if (x.degree() > bound)
      throw DegreeOverflow("normal_form: element of degree " + std::to_string(x.degree()) + " exceeds bound " +
                           std::to_string(bound));
    check_letters(x);
    if (x.is_zero()) return x;
    if (!homogeneous_) return ideal_basis(bound)->reduce(x);
    NCElement<F> out;
    for (int e = x.low_degree(); e <= x.degree(); ++e) {
      auto c = x.component(e);
      if (c.is_zero()) continue;
      out += ideal_basis(e)->reduce(std::move(c));
    }
    return out;
  }

  NCElement<F> normal_form(const NCElement<F>& x) const { return normal_form(x, std::max(x.degree(), 0)); }

  bool equals(const NCElement<F>& a, const NCElement<F>& b, int bound) const {
    return normal_form(a - b, bound).is_zero();
  }

  /// Dimension of the space of normal words: degree exactly d (homogeneous)
  /// or degree <= d (filtered).
  std::size_t normal_word_count(int d) const {
    std::size_t total = 0;
    const std::size_t g = generators_.size();
    if (homogeneous_) {
      total = 1;
      for (int i = 0; i < d; ++i) total *= g;
    } else {
      std::size_t p = 1;
      for (int i = 0; i <= d; ++i, p *= g) total += p;
    }
    return total - ideal_basis(d)->rank();
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, std::shared_ptr<const EchelonBasis<F>>> bases;
  };

  void check_letters(const NCElement<F>& x) const {
    for (const auto& [w, c] : x.terms())
      for (Letter l : w)
        if (!has_letter(l)) throw std::invalid_argument("Presentation " + name_ + ": foreign letter " + l.str());
  }

  std::string name_;
  std::vector<Letter> generators_;
  std::vector<NCElement<F>> relations_;
  std::set<std::uint16_t> letter_codes_;
  std::size_t raw_count_ = 0;
  bool homogeneous_ = true;
  std::shared_ptr<Cache> cache_;
};

/// Letters of the generating matrix of a tag, row-major.
inline std::vector<Letter> matrix_letters(Tag tag, int n) {
  std::vector<Letter> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.emplace_back(tag, i, j);
  return out;
}

/// Letters x_1..x_n of a vector tag.
inline std::vector<Letter> vector_letters(Tag tag, int n) {
  std::vector<Letter> out;
  for (int i = 0; i < n; ++i) out.emplace_back(tag, i, 0);
  return out;
}

inline Presentation<Rational> evaluate(const Presentation<Scalar>& p, const Rational& at) {
  std::vector<NCElement<Rational>> rels;
  for (const auto& r : p.relations()) rels.push_back(evaluate(r, at));
  return Presentation<Rational>(p.name(), p.generators(), rels);
}

}  // namespace qdouble
