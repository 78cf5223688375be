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

#include "hdetent/random.hpp"

#include <cmath>
#include <stdexcept>

namespace hdetent {

Vector complex_gaussian_vector(std::size_t size, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Vector v(static_cast<Eigen::Index>(size));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v[i] = Complex{re, im};
  }
  return v;
}

Matrix complex_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Fill column by column so the draw order is fixed.
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(r, c) = Complex{re, im};
    }
  }
  return m;
}

Matrix haar_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols == 0 || rows < cols) {
    throw std::invalid_argument("haar_isometry: need rows >= cols >= 1");
  }
  const Matrix z = complex_gaussian_matrix(rows, cols, rng);
  Eigen::HouseholderQR<Matrix> qr(z);
  const auto ec = static_cast<Eigen::Index>(cols);
  Matrix q = qr.householderQ() * Matrix::Identity(z.rows(), ec);
  const Matrix r = qr.matrixQR().topLeftCorner(ec, ec).triangularView<Eigen::Upper>();
  for (Eigen::Index c = 0; c < ec; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0.0) q.col(c) *= r(c, c) / mag;
  }
  return q;
}

Matrix haar_unitary(std::size_t d, Rng& rng) { return haar_isometry(d, d, rng); }

std::vector<double> uniform_simplex(std::size_t size, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(size);
  double total = 0.0;
  for (auto& x : p) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace hdetent
