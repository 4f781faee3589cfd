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
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace qdouble {

/// Algebra tags of generating matrices. Order fixes the global letter order.
enum class Tag : std::uint8_t { M = 0, L, Lhat, D, N, Dhat, X };

std::string tag_name(Tag t);

/// Generator symbol: entry (row, col) of the generating matrix of an algebra.
/// Rows/cols are 0-based internally and printed 1-based; vector letters
/// (Tag::X) use col 0.
struct Letter {
  std::uint16_t code = 0;

  constexpr Letter() = default;
  constexpr Letter(Tag tag, int row, int col)
      : code(static_cast<std::uint16_t>((static_cast<unsigned>(tag) << 8) | (static_cast<unsigned>(row) << 4) |
                                        static_cast<unsigned>(col))) {}

  constexpr Tag tag() const { return static_cast<Tag>(code >> 8); }
  constexpr int row() const { return (code >> 4) & 0xF; }
  constexpr int col() const { return code & 0xF; }
  std::string str() const;

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// Finite word of letters, stored inline. Ordered graded-lexicographically:
/// shorter words first, then lexicographic by letter code.
class Word {
 public:
  static constexpr std::size_t kCapacity = 16;

  constexpr Word() = default;
  explicit Word(Letter l) : len_(1) { a_[0] = l; }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  Letter operator[](std::size_t i) const { return a_[i]; }
  const Letter* begin() const { return a_.data(); }
  const Letter* end() const { return a_.data() + len_; }

  void push_back(Letter l) {
    if (len_ == kCapacity) throw std::length_error("Word: capacity exceeded");
    a_[len_++] = l;
  }

  Word subword(std::size_t pos, std::size_t count) const {
    Word w;
    for (std::size_t i = 0; i < count; ++i) w.push_back(a_[pos + i]);
    return w;
  }

  friend Word operator*(const Word& x, const Word& y) {
    Word w = x;
    for (Letter l : y) w.push_back(l);
    return w;
  }

  friend bool operator==(const Word& x, const Word& y) {
    return x.len_ == y.len_ && std::equal(x.begin(), x.end(), y.begin());
  }
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    if (x.len_ != y.len_) return x.len_ <=> y.len_;
    for (std::size_t i = 0; i < x.len_; ++i)
      if (x.a_[i] != y.a_[i]) return x.a_[i] <=> y.a_[i];
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = len_;
    for (std::size_t i = 0; i < len_; ++i) h = h * 1000003u ^ a_[i].code;
    return h;
  }

  /// Number of letters carrying the given tag.
  int degree_in(Tag t) const {
    return static_cast<int>(std::count_if(begin(), end(), [t](Letter l) { return l.tag() == t; }));
  }

  std::string str() const;

 private:
  std::uint8_t len_ = 0;
  std::array<Letter, kCapacity> a_{};
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

}  // namespace qdouble
