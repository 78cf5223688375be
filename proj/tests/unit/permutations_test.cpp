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

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "test_oracles.hpp"

namespace hdetent {
namespace {

TEST(Permutations, OneElement) {
  const auto perms = enumerate_signed_permutations(1);
  ASSERT_EQ(perms.size(), 1u);
  EXPECT_EQ(perms[0].mapping, std::vector<std::size_t>{0});
  EXPECT_EQ(perms[0].parity, 1);
}

TEST(Permutations, TwoElements) {
  const auto perms = enumerate_signed_permutations(2);
  ASSERT_EQ(perms.size(), 2u);
  EXPECT_EQ(perms[0].mapping, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(perms[0].parity, 1);
  EXPECT_EQ(perms[1].mapping, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(perms[1].parity, -1);
}

TEST(Permutations, CompleteWithCorrectParity) {
  for (std::size_t d = 1; d <= 7; ++d) {
    const auto perms = enumerate_signed_permutations(d);
    std::set<std::vector<std::size_t>> seen;
    int even = 0;
    for (const auto& p : perms) {
      EXPECT_EQ(p.parity, testing::inversion_parity(p.mapping));
      seen.insert(p.mapping);
      even += p.parity == 1;
    }
    std::size_t factorial = 1;
    for (std::size_t k = 2; k <= d; ++k) factorial *= k;
    EXPECT_EQ(perms.size(), factorial);
    EXPECT_EQ(seen.size(), factorial);
    if (d >= 2) {
      EXPECT_EQ(static_cast<std::size_t>(even), factorial / 2);
    }
  }
}

TEST(Permutations, FourHasTwelveOfEachParity) {
  const auto perms = enumerate_signed_permutations(4);
  EXPECT_EQ(perms.size(), 24u);
  EXPECT_EQ(std::count_if(perms.begin(), perms.end(), [](const auto& p) { return p.parity == 1; }), 12);
}

TEST(Permutations, Guard) {
  EXPECT_THROW(enumerate_signed_permutations(0), std::invalid_argument);
  EXPECT_THROW(enumerate_signed_permutations(9), std::invalid_argument);
  EXPECT_THROW(PermutationStream(5, 4), std::invalid_argument);
  EXPECT_EQ(enumerate_signed_permutations(5, 5).size(), 120u);
}

TEST(Permutations, StreamMatchesVector) {
  PermutationStream stream(5);
  const auto all = enumerate_signed_permutations(5);
  std::size_t i = 0;
  do {
    ASSERT_LT(i, all.size());
    EXPECT_EQ(stream.current().mapping, all[i].mapping);
    EXPECT_EQ(stream.current().parity, all[i].parity);
    ++i;
  } while (stream.next());
  EXPECT_EQ(i, all.size());
  EXPECT_FALSE(stream.next());
}

}  // namespace
}  // namespace hdetent
