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

#ifndef HDETENT_HYPERDET_HPP_
#define HDETENT_HYPERDET_HPP_

#include <cstdint>
#include <stdexcept>

#include "hdetent/hypermatrix.hpp"
#include "hdetent/permutations.hpp"

namespace hdetent {

inline constexpr std::uint64_t kDefaultTermBudget = 100'000'000;

/// Limits on combinatorial work. A sum that would need more than `max_terms`
/// products is refused with BudgetExceeded before any work starts.
struct HdetOptions {
  std::uint64_t max_terms = kDefaultTermBudget;
  std::size_t permutation_guard = kDefaultPermutationGuard;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (d!)^k, saturating at UINT64_MAX.
std::uint64_t permutation_tuple_count(std::size_t d, std::size_t k);

/// Cayley's first hyperdeterminant from its defining sum:
///
///   (1/d!) sum_{s_1..s_N in S_d} sgn(s_1)...sgn(s_N) prod_j A[s_1(j), ..., s_N(j)]
///
/// Cost is (d!)^N products. Kept as a cross-check for hdet_even; odd orders
/// are summed as-is and cancel to rounding error.
Complex hdet_naive(const Hypermatrix& a, const HdetOptions& options = {});

/// Even-order reduction with the first permutation fixed to the identity:
///
///   sum_{s_2..s_N in S_d} sgn(s_2)...sgn(s_N) prod_j A[j, s_2(j), ..., s_N(j)]
///
/// (d!)^(N-1) products with compensated accumulation. Order-2 input goes
/// through an LU determinant instead.
Complex hdet_even(const Hypermatrix& a, const HdetOptions& options = {});

/// hdet_even without the order-2 shortcut.
Complex hdet_even_sum(const Hypermatrix& a, const HdetOptions& options = {});

/// Default entry point: 0 for odd order, hdet_even otherwise.
Complex hdet(const Hypermatrix& a, const HdetOptions& options = {});

/// LU determinant of a square matrix.
Complex determinant(const Matrix& m);

struct HdetGradient {
  Complex value;
  /// d hdet / d A[i] for every entry (holomorphic derivative).
  Hypermatrix gradient;
};

/// Value and entrywise derivative of hdet for an even-order cuboid.
HdetGradient hdet_with_gradient(const Hypermatrix& a, const HdetOptions& options = {});

}  // namespace hdetent

#endif  // HDETENT_HYPERDET_HPP_
