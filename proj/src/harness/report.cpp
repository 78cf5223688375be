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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hdetent/verify.hpp"

namespace hdetent::verify {

nlohmann::json CheckRecord::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["params"] = params;
  j["observed"] = observed;
  j["bound"] = bound;
  j["pass"] = pass;
  return j;
}

const CheckRecord& Report::add(CheckRecord record) {
  records_.push_back(std::move(record));
  if (sink_) sink_(records_.back());
  return records_.back();
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const CheckRecord& r) { return !r.pass; }));
}

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names{"props", "locc", "lemma1", "roof"};
  return names;
}

void run_suite(std::string_view name, const SuiteOptions& options, Report& report) {
  if (name == "props") {
    check_determinant_reduction(options, report);
    check_even_against_naive(options, report);
    check_multiplicativity(options, report);
    check_product_states(options, report);
    check_local_unitary_invariance(options, report);
    check_quadratic_form(options, report);
    check_qubit_identities(options, report);
    check_multilinear_structure(options, report);
  } else if (name == "locc") {
    check_monotonicity(options, report);
    check_povm_identities(options, report);
  } else if (name == "lemma1") {
    check_lemma1_bound(options, report);
    check_critical_value(options, report);
  } else if (name == "roof") {
    check_convex_roof(options, report);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
}

}  // namespace hdetent::verify
