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

#include "qdouble/word.hpp"

#include <sstream>

namespace qdouble {

std::string tag_name(Tag t) {
  switch (t) {
    case Tag::M: return "m";
    case Tag::L: return "l";
    case Tag::Lhat: return "lh";
    case Tag::D: return "d";
    case Tag::N: return "n";
    case Tag::Dhat: return "dh";
    case Tag::X: return "x";
  }
  return "?";
}

std::string Letter::str() const {
  std::string s = tag_name(tag()) + std::to_string(row() + 1);
  if (tag() != Tag::X) s += std::to_string(col() + 1);
  return s;
}

std::string Word::str() const {
  if (len_ == 0) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < len_; ++i) {
    if (i) os << '*';
    os << a_[i].str();
  }
  return os.str();
}

}  // namespace qdouble
