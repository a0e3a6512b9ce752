// Copyright 2026 The HEG Authors
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

#ifndef HEG_VERIFY_HPP
#define HEG_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "heg/limits.hpp"

namespace heg::verify {

enum class Outcome { Pass, Fail, Skipped };

std::string_view to_string(Outcome o);

struct CriterionResult {
  int id = 0;
  std::string title;
  Outcome outcome = Outcome::Fail;
  std::string detail;
  double seconds = 0;
  double time_limit = 0;
};

/// Budgets used by the suite unless overridden. The hardness family needs
/// partition scans over up to 10 agents.
Limits suite_limits();

struct SuiteConfig {
  Limits limits = suite_limits();
  /// Mixed into every instance seed; 0 reproduces the reference run.
  std::uint64_t seed = 0;
};

inline constexpr int kCriterionCount = 11;

/// Runs one criterion (1-based). A CapabilityError raised under the
/// configured budgets yields Skipped; any other exception is a failure.
CriterionResult run_criterion(int id, const SuiteConfig& config);

struct SuiteReport {
  std::vector<CriterionResult> results;
  bool all_passed() const;
};

/// Runs every criterion in order, calling `on_result` after each one.
SuiteReport verify_paper(
    const SuiteConfig& config,
    const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3  title (1.23 s / 60 s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace heg::verify

#endif  // HEG_VERIFY_HPP
