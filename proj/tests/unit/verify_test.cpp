// Copyright 2026 The hdetent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hdetent/verify.hpp"

#include <algorithm>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace hdetent::verify {
namespace {

TEST(Verify, SuiteNames) {
  const auto names = suite_names();
  for (const char* expected : {"props", "locc", "lemma1", "roof"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
  }
}

TEST(Verify, UnknownSuite) {
  Report report;
  EXPECT_THROW(run_suite("nope", SuiteOptions{}, report), std::invalid_argument);
}

TEST(Verify, PropsSmoke) {
  SuiteOptions options;
  options.trials = 3;
  std::vector<nlohmann::json> lines;
  Report report([&](const CheckRecord& r) { lines.push_back(r.to_json()); });
  run_suite("props", options, report);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(lines.size(), report.records().size());
  ASSERT_FALSE(lines.empty());
  for (const auto& line : lines) {
    const auto& j = line;
    for (const char* key : {"check", "params", "observed", "bound", "pass"}) EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Verify, RecordJson) {
  CheckRecord r{"example", nlohmann::json{{"d", 2}}, 0.5, 1.0, true};
  const auto j = r.to_json();
  EXPECT_EQ(j["check"], "example");
  EXPECT_EQ(j["params"]["d"], 2);
  EXPECT_EQ(j["observed"], 0.5);
  EXPECT_EQ(j["pass"], true);
}

}  // namespace
}  // namespace hdetent::verify
