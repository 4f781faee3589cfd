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
#include <optional>
#include <stdexcept>
#include <string>

#include "qdouble/report.hpp"
#include "qdouble/sampling.hpp"

namespace qdouble::cli {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  std::string suite;
  std::optional<int> n;
  std::optional<int> k;
  std::string lambda;
  std::optional<int> degree;
  Mode mode = Mode::Exact;
  int samples = 3;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Wall times break byte-identical output, so they are opt-in.
  bool timing = false;
};

/// Known suite names, in run_all order; "all" runs the acceptance grid.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws ConfigError on unknown suites or parameters
/// outside the supported range.
VerificationReport run_suite(const SuiteConfig& config);

/// The acceptance grid: every suite at its default parameters.
VerificationReport run_all(const SuiteConfig& config);

/// JSON text with fixed key order (schema 1).
std::string to_json(const VerificationReport& report, const SuiteConfig& config);

/// 0 pass, 1 hard failure, 2 conjecture finding only.
int exit_code(const VerificationReport& report);

}  // namespace qdouble::cli
