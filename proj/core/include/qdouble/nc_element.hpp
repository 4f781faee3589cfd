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

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "qdouble/scalar.hpp"
#include "qdouble/word.hpp"

namespace qdouble {

/// Element of the free associative algebra: finite F-linear combination of
/// words. Zero coefficients are never stored.
template <Field F>
class NCElement {
 public:
  using Terms = std::map<Word, F>;

  NCElement() = default;
  NCElement(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!qdouble::is_zero(c)) t_.emplace(Word{}, c);
  }
  explicit NCElement(Letter l) { t_.emplace(Word(l), F(1)); }
  NCElement(const Word& w, const F& c) {
    if (!qdouble::is_zero(c)) t_.emplace(w, c);
  }

  static NCElement one() { return NCElement(F(1)); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  /// Length of the longest word; -1 for zero.
  int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size()); }
  int low_degree() const { return t_.empty() ? -1 : static_cast<int>(t_.begin()->first.size()); }

  F coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? F(0) : it->second;
  }

  void add_term(const Word& w, const F& c) {
    if (qdouble::is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (!fresh) {
      it->second = it->second + c;
      if (qdouble::is_zero(it->second)) t_.erase(it);
    }
  }

  /// this += c * x
  void add_scaled(const NCElement& x, const F& c) {
    if (qdouble::is_zero(c)) return;
    for (const auto& [w, v] : x.t_) add_term(w, c * v);
  }

  NCElement& operator+=(const NCElement& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  NCElement& operator-=(const NCElement& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
  }
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  NCElement operator-() const {
    NCElement r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
  }

  friend NCElement operator*(const F& s, const NCElement& a) {
    NCElement r;
    if (qdouble::is_zero(s)) return r;
    for (const auto& [w, c] : a.t_) r.t_.emplace_hint(r.t_.end(), w, s * c);
    return r;
  }

  friend NCElement operator*(const NCElement& a, const NCElement& b) {
    NCElement r;
    for (const auto& [wa, ca] : a.t_)
      for (const auto& [wb, cb] : b.t_) r.add_term(wa * wb, ca * cb);
    return r;
  }

  friend bool operator==(const NCElement& a, const NCElement& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto it = b.t_.begin();
    for (const auto& [w, c] : a.t_) {
      if (!(it->first == w) || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }

  /// Applies fn to every coefficient (e.g. evaluation at a sample point).
  template <class G, class Fn>
  NCElement<G> map_coefficients(Fn&& fn) const {
    NCElement<G> r;
    for (const auto& [w, c] : t_) r.add_term(w, fn(c));
    return r;
  }

  /// Substitutes every letter by an element (algebra homomorphism on words).
  template <class Fn>
  NCElement substitute(Fn&& image) const {
    NCElement r;
    for (const auto& [w, c] : t_) {
      NCElement prod(c);
      for (Letter l : w) prod = prod * image(l);
      r += prod;
    }
    return r;
  }

  /// Homogeneous component of the given length.
  NCElement component(int d) const {
    NCElement r;
    for (const auto& [w, c] : t_)
      if (static_cast<int>(w.size()) == d) r.t_.emplace_hint(r.t_.end(), w, c);
    return r;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      const std::string cs = to_string(it->second);
      if (it->first.empty()) {
        os << cs;
      } else {
        if (cs != "1") os << "(" << cs << ")*";
        os << it->first.str();
      }
    }
    return os.str();
  }

 private:
  Terms t_;
};

template <Field F>
NCElement<F> letter(Tag t, int row, int col) {
  return NCElement<F>(Letter(t, row, col));
}

inline NCElement<Rational> evaluate(const NCElement<Scalar>& x, const Rational& at) {
  return x.map_coefficients<Rational>([&](const Scalar& s) { return s.evaluate(at); });
}

}  // namespace qdouble
