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

#include "hdetent/permutations.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace hdetent {

PermutationStream::PermutationStream(std::size_t d, std::size_t guard) {
  if (d == 0) {
    throw std::invalid_argument("PermutationStream: d must be positive");
  }
  if (d > guard) {
    throw std::invalid_argument("PermutationStream: d = " + std::to_string(d) +
                                " exceeds the factorial guard " + std::to_string(guard));
  }
  current_.mapping.resize(d);
  std::iota(current_.mapping.begin(), current_.mapping.end(), std::size_t{0});
  current_.parity = 1;
  counters_.assign(d, 0);
}

bool PermutationStream::next() {
  auto& a = current_.mapping;
  while (level_ < a.size()) {
    if (counters_[level_] < level_) {
      if (level_ % 2 == 0) {
        std::swap(a[0], a[level_]);
      } else {
        std::swap(a[counters_[level_]], a[level_]);
      }
      current_.parity = -current_.parity;
      ++counters_[level_];
      level_ = 1;
      return true;
    }
    counters_[level_] = 0;
    ++level_;
  }
  return false;
}

std::vector<SignedPermutation> enumerate_signed_permutations(std::size_t d, std::size_t guard) {
  PermutationStream stream(d, guard);
  std::vector<SignedPermutation> out;
  std::size_t total = 1;
  for (std::size_t k = 2; k <= d; ++k) total *= k;
  out.reserve(total);
  do {
    out.push_back(stream.current());
  } while (stream.next());
  return out;
}

}  // namespace hdetent
