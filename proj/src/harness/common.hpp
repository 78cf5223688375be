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

#ifndef HDETENT_HARNESS_COMMON_HPP_
#define HDETENT_HARNESS_COMMON_HPP_

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdint>

#include "hdetent/random.hpp"
#include "hdetent/verify.hpp"

namespace hdetent::verify::detail {

inline double relative_error(Complex observed, Complex expected) {
  const double scale = std::max(std::abs(observed), std::abs(expected));
  if (scale == 0.0) return 0.0;
  return std::abs(observed - expected) / scale;
}

/// Independent stream per check so that suites can run in any order.
inline Rng check_rng(const SuiteOptions& options, std::uint64_t tag) {
  return Rng(derive_seed(options.seed, tag));
}

inline std::size_t instances(const SuiteOptions& options, std::size_t fallback) {
  return options.trials.value_or(fallback);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Record passing when observed <= bound.
inline CheckRecord at_most(std::string check, nlohmann::json params, double observed, double bound) {
  return CheckRecord{std::move(check), std::move(params), observed, bound, observed <= bound};
}

/// Record passing when observed >= bound.
inline CheckRecord at_least(std::string check, nlohmann::json params, double observed, double bound) {
  return CheckRecord{std::move(check), std::move(params), observed, bound, observed >= bound};
}

}  // namespace hdetent::verify::detail

#endif  // HDETENT_HARNESS_COMMON_HPP_
