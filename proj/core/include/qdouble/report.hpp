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
#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace qdouble {

/// Outcome of one identity check. `anchor` names the identity under test;
/// `details` carries ordered key/value data such as characters or counts.
struct CheckRecord {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string witness;
  std::vector<std::pair<std::string, std::string>> details;
  double seconds = 0.0;
  /// Set for checks of conjectured identities; a failure is a finding.
  bool conjecture = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckRecord> checks;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
  }
  const CheckRecord* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  void add(CheckRecord c) { checks.push_back(std::move(c)); }
  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

inline CheckRecord make_check(std::string id, std::string anchor, bool pass, std::string witness = {}) {
  CheckRecord c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.pass = pass;
  c.witness = std::move(witness);
  return c;
}

/// Runs fn (returning a CheckRecord) and stores its wall time.
template <class Fn>
CheckRecord timed_check(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckRecord c = fn();
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

/// Shortens long serialized witnesses.
inline std::string clip(std::string s, std::size_t limit = 600) {
  if (s.size() > limit) s = s.substr(0, limit) + "...";
  return s;
}

}  // namespace qdouble
