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

#include <gtest/gtest.h>

#include "heg/verify.hpp"

namespace heg::verify {
namespace {

TEST(VerifyTest, CheapCriteriaPass) {
  const SuiteConfig config;
  for (int id : {1, 4, 10}) {
    const CriterionResult r = run_criterion(id, config);
    EXPECT_EQ(r.outcome, Outcome::Pass) << format_line(r);
  }
}

TEST(VerifyTest, TightBudgetSkipsInsteadOfFailing) {
  SuiteConfig config;
  config.limits.subset_budget = 10;
  const CriterionResult r = run_criterion(8, config);
  EXPECT_EQ(r.outcome, Outcome::Skipped) << format_line(r);
}

TEST(VerifyTest, StableAcrossRuns) {
  SuiteConfig config;
  config.seed = 3;
  const CriterionResult a = run_criterion(11, config);
  const CriterionResult b = run_criterion(11, config);
  EXPECT_EQ(a.outcome, b.outcome);
  EXPECT_EQ(a.detail, b.detail);
}

TEST(VerifyTest, RejectsUnknownCriterion) {
  EXPECT_THROW(run_criterion(0, SuiteConfig{}), std::invalid_argument);
  EXPECT_THROW(run_criterion(kCriterionCount + 1, SuiteConfig{}),
               std::invalid_argument);
}

}  // namespace
}  // namespace heg::verify
