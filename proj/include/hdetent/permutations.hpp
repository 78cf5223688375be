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

#ifndef HDETENT_PERMUTATIONS_HPP_
#define HDETENT_PERMUTATIONS_HPP_

#include <cstddef>
#include <vector>

namespace hdetent {

/// Largest d for which enumerate_signed_permutations agrees to run by default.
inline constexpr std::size_t kDefaultPermutationGuard = 8;

struct SignedPermutation {
  std::vector<std::size_t> mapping;  // mapping[j] = sigma(j), 0-based
  int parity = 1;                    // +1 even, -1 odd
};

/// Iterative Heap's algorithm. Each step is a single transposition, so the
/// parity flips on every call to next().
class PermutationStream {
 public:
  /// Throws std::invalid_argument if d == 0 or d > guard.
  explicit PermutationStream(std::size_t d, std::size_t guard = kDefaultPermutationGuard);

  const SignedPermutation& current() const { return current_; }

  /// Advances to the next permutation; returns false once all d! were produced.
  bool next();

 private:
  SignedPermutation current_;
  std::vector<std::size_t> counters_;
  std::size_t level_ = 1;
};

/// All d! permutations of {0..d-1}, each exactly once, with their signs.
std::vector<SignedPermutation> enumerate_signed_permutations(
    std::size_t d, std::size_t guard = kDefaultPermutationGuard);

}  // namespace hdetent

#endif  // HDETENT_PERMUTATIONS_HPP_
