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


#include "qdouble/sampling.hpp"

#include <algorithm>
#include <random>

namespace qdouble {

const char* mode_name(Mode m) { return m == Mode::Exact ? "EXACT" : "SAMPLED"; }

std::vector<Rational> sample_points(int count, std::uint64_t seed, int bound) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> num(2, 97);
  std::uniform_int_distribution<int> den(1, 13);
  std::vector<Rational> out;
  while (static_cast<int>(out.size()) < count) {
    Rational x(num(gen), den(gen));
    x.canonicalize();
    if (x == 1 || is_root_of_unity_risk(x, std::max(bound, 2))) continue;
    if (std::find(out.begin(), out.end(), x) != out.end()) continue;
    out.push_back(x);
  }
  return out;
}

}  // namespace qdouble
