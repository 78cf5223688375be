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

// Reference implementations used by the verification suites. They share no
// code with the library routines they check.

#ifndef HDETENT_HARNESS_ORACLES_HPP_
#define HDETENT_HARNESS_ORACLES_HPP_

#include <span>
#include <vector>

#include "hdetent/hypermatrix.hpp"

namespace hdetent::oracle {

/// Laplace expansion along the first row.
Complex cofactor_determinant(const Matrix& m);

/// Sign of a permutation by counting inversions.
int inversion_sign(std::span<const std::size_t> perm);

/// Full sum over N-tuples of permutations with a 1/d! prefactor, permutations
/// generated by std::next_permutation and signed by inversion count.
Complex hyperdeterminant_brute_force(const Hypermatrix& a);

/// sigma_y tensored with itself `count` times, entry by entry.
Matrix pauli_y_tensor(std::size_t count);

/// (M_1 (x) ... (x) M_n) v for square d x d factors, summed entry by entry.
Vector kronecker_apply(std::span<const Matrix> factors, const Vector& v);

/// Entries of (X_1 v_1) o ... o (X_N v_N) in row-major order.
std::vector<Complex> mapped_outer_product(std::span<const Matrix> xs, std::span<const Vector> vs);

}  // namespace hdetent::oracle

#endif  // HDETENT_HARNESS_ORACLES_HPP_
