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

#ifndef HDETENT_RANDOM_HPP_
#define HDETENT_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hdetent/hypermatrix.hpp"

namespace hdetent {

using Rng = std::mt19937_64;

/// i.i.d. standard complex normal entries (real and imaginary parts N(0, 1/2)).
Vector complex_gaussian_vector(std::size_t size, Rng& rng);
Matrix complex_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
/// phases of diag(R) moved into Q.
Matrix haar_unitary(std::size_t d, Rng& rng);

/// rows x cols matrix with orthonormal columns (rows >= cols), Haar on the
/// Stiefel manifold.
Matrix haar_isometry(std::size_t rows, std::size_t cols, Rng& rng);

/// Uniform sample from the probability simplex of dimension `size`.
std::vector<double> uniform_simplex(std::size_t size, Rng& rng);

/// Derives an independent stream seed from a base seed and a counter
/// (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter);

}  // namespace hdetent

#endif  // HDETENT_RANDOM_HPP_
