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
#include <vector>

#include "qdouble/scalar.hpp"

namespace qdouble {

enum class Mode { Exact, Sampled };

const char* mode_name(Mode m);

/// Deterministic rational sample points for SAMPLED mode: never 0 or +-1 and
/// never a root-of-unity risk up to `bound`, so q-integers and cyclotomic
/// denominators stay nonzero.
std::vector<Rational> sample_points(int count, std::uint64_t seed, int bound = 8);

}  // namespace qdouble
