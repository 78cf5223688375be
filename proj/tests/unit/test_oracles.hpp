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

// Reference routines for the unit tests. Deliberately naive.

#ifndef HDETENT_TESTS_TEST_ORACLES_HPP_
#define HDETENT_TESTS_TEST_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "hdetent/hypermatrix.hpp"
#include "hdetent/random.hpp"

namespace hdetent::testing {

inline int inversion_parity(const std::vector<std::size_t>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  }
  return inv % 2 == 0 ? 1 : -1;
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t d) {
  std::vector<std::size_t> p(d);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Leibniz formula.
inline Complex leibniz_determinant(const Matrix& m) {
  Complex total = 0.0;
  for (const auto& p : all_permutations(static_cast<std::size_t>(m.rows()))) {
    Complex term = static_cast<double>(inversion_parity(p));
    for (Eigen::Index r = 0; r < m.rows(); ++r) term *= m(r, static_cast<Eigen::Index>(p[r]));
    total += term;
  }
  return total;
}

/// (1/d!) sum over all N-tuples of permutations.
inline Complex full_sum_hyperdeterminant(const Hypermatrix& a) {
  const std::size_t order = a.order();
  const std::size_t d = a.shape().dim(0);
  const auto perms = all_permutations(d);
  std::vector<std::size_t> pick(order, 0), index(order);
  Complex total = 0.0;
  for (;;) {
    Complex term = 1.0;
    for (std::size_t k = 0; k < order; ++k) term *= static_cast<double>(inversion_parity(perms[pick[k]]));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < order; ++k) index[k] = perms[pick[k]][j];
      term *= a.at(index);
    }
    total += term;
    std::size_t k = 0;
    while (k < order && ++pick[k] == perms.size()) pick[k++] = 0;
    if (k == order) break;
  }
  return total / static_cast<double>(perms.size());
}

/// Square root of the eigenvalues of rho (sy sy) rho^* (sy sy), combined as
/// max(0, l1 - l2 - l3 - l4).
inline double two_qubit_concurrence(const Matrix& rho) {
  Matrix syy = Matrix::Zero(4, 4);
  syy(0, 3) = -1.0;
  syy(1, 2) = 1.0;
  syy(2, 1) = 1.0;
  syy(3, 0) = -1.0;
  const Matrix r = rho * syy * rho.conjugate() * syy;
  Eigen::ComplexEigenSolver<Matrix> es(r);
  std::vector<double> l;
  for (Eigen::Index i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
  std::sort(l.rbegin(), l.rend());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

inline Hypermatrix random_hypermatrix(const Shape& shape, Rng& rng) {
  const Vector v = complex_gaussian_vector(shape.size(), rng);
  return Hypermatrix(shape, std::vector<Complex>(v.data(), v.data() + v.size()));
}

inline double relative_error(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace hdetent::testing

#endif  // HDETENT_TESTS_TEST_ORACLES_HPP_
