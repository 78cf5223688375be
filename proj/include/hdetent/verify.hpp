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

// Seeded verification suites. Every check produces one record
//   {"check": ..., "params": {...}, "observed": x, "bound": b, "pass": bool}
// and a suite passes iff all of its records pass.

#ifndef HDETENT_VERIFY_HPP_
#define HDETENT_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hdetent/convexroof.hpp"
#include "hdetent/hyperdet.hpp"
#include "hdetent/locc.hpp"

namespace hdetent::verify {

struct CheckRecord {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  double observed = 0.0;
  double bound = 0.0;
  bool pass = false;

  nlohmann::json to_json() const;
};

using CheckSink = std::function<void(const CheckRecord&)>;
using TrialSink = std::function<void(const TrialReport&)>;

class Report {
 public:
  explicit Report(CheckSink sink = {}) : sink_(std::move(sink)) {}

  const CheckRecord& add(CheckRecord record);
  const std::vector<CheckRecord>& records() const { return records_; }
  bool passed() const;
  std::size_t failures() const;

 private:
  CheckSink sink_;
  std::vector<CheckRecord> records_;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  /// Replaces the default instance count of the main sampled checks. Fixed
  /// grids and spot checks (critical-value draws, roof convexity) keep their size.
  std::optional<std::size_t> trials;
  HdetOptions hdet;
  std::size_t roof_restarts = RoofOptions{}.restarts;
  std::size_t roof_iterations = RoofOptions{}.iterations;
  /// Receives every monotonicity trial when set.
  TrialSink on_trial;
};

// props
void check_determinant_reduction(const SuiteOptions& options, Report& report);
void check_even_against_naive(const SuiteOptions& options, Report& report);
void check_multiplicativity(const SuiteOptions& options, Report& report);
void check_product_states(const SuiteOptions& options, Report& report);
void check_local_unitary_invariance(const SuiteOptions& options, Report& report);
void check_quadratic_form(const SuiteOptions& options, Report& report);
void check_qubit_identities(const SuiteOptions& options, Report& report);
void check_multilinear_structure(const SuiteOptions& options, Report& report);

// locc
void check_monotonicity(const SuiteOptions& options, Report& report);
void check_povm_identities(const SuiteOptions& options, Report& report);

// lemma1
void check_lemma1_bound(const SuiteOptions& options, Report& report);
void check_critical_value(const SuiteOptions& options, Report& report);

// roof
void check_convex_roof(const SuiteOptions& options, Report& report);

/// props, locc, lemma1, roof.
const std::vector<std::string_view>& suite_names();

/// Runs every check of the named suite. Throws std::invalid_argument for an
/// unknown name.
void run_suite(std::string_view name, const SuiteOptions& options, Report& report);

}  // namespace hdetent::verify

#endif  // HDETENT_VERIFY_HPP_
