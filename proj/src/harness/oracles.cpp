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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hdetent::oracle {

namespace {

Complex cofactor_recursive(const Matrix& m, std::vector<Eigen::Index>& cols, Eigen::Index row) {
  if (cols.empty()) return 1.0;
  Complex total = 0.0;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Eigen::Index c = cols[k];
    const Complex entry = m(row, c);
    if (entry == Complex(0.0)) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    const Complex minor = cofactor_recursive(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    total += (k % 2 == 0 ? 1.0 : -1.0) * entry * minor;
  }
  return total;
}

}  // namespace

Complex cofactor_determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("cofactor_determinant: not square");
  std::vector<Eigen::Index> cols(static_cast<std::size_t>(m.cols()));
  std::iota(cols.begin(), cols.end(), Eigen::Index{0});
  return cofactor_recursive(m, cols, 0);
}

int inversion_sign(std::span<const std::size_t> perm) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Complex hyperdeterminant_brute_force(const Hypermatrix& a) {
  const std::size_t order = a.order();
  const std::size_t d = a.shape().dim(0);
  std::vector<std::vector<std::size_t>> perms;
  std::vector<int> signs;
  std::vector<std::size_t> p(d);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    perms.push_back(p);
    signs.push_back(inversion_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));

  const std::size_t count = perms.size();
  std::vector<std::size_t> choice(order, 0);
  std::vector<std::size_t> index(order);
  Complex total = 0.0;
  double factorial = static_cast<double>(count);
  while (true) {
    int sign = 1;
    for (std::size_t k = 0; k < order; ++k) sign *= signs[choice[k]];
    Complex term = static_cast<double>(sign);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < order; ++k) index[k] = perms[choice[k]][j];
      term *= a.at(index);
    }
    total += term;
    std::size_t k = 0;
    while (k < order && ++choice[k] == count) choice[k++] = 0;
    if (k == order) break;
  }
  return total / factorial;
}

Matrix pauli_y_tensor(std::size_t count) {
  const Eigen::Index dim = Eigen::Index{1} << count;
  const Eigen::Index all = dim - 1;
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const Eigen::Index y = x ^ all;
    // sigma_y = [[0, -i], [i, 0]]: row bit 0 gives -i, row bit 1 gives +i.
    Complex entry = 1.0;
    for (std::size_t b = 0; b < count; ++b) {
      entry *= ((x >> b) & 1) ? Complex(0.0, 1.0) : Complex(0.0, -1.0);
    }
    out(x, y) = entry;
  }
  return out;
}

Vector kronecker_apply(std::span<const Matrix> factors, const Vector& v) {
  const std::size_t n = factors.size();
  const std::size_t d = static_cast<std::size_t>(factors.front().rows());
  std::size_t dim = 1;
  for (std::size_t k = 0; k < n; ++k) dim *= d;
  if (static_cast<std::size_t>(v.size()) != dim) {
    throw std::invalid_argument("kronecker_apply: size mismatch");
  }
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> out(n);
    for (std::size_t k = n; k-- > 0;) {
      out[k] = x % d;
      x /= d;
    }
    return out;
  };
  Vector out = Vector::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    const auto xi = digits(x);
    for (std::size_t y = 0; y < dim; ++y) {
      const auto yi = digits(y);
      Complex coeff = 1.0;
      for (std::size_t k = 0; k < n; ++k) {
        coeff *= factors[k](static_cast<Eigen::Index>(xi[k]), static_cast<Eigen::Index>(yi[k]));
      }
      out(static_cast<Eigen::Index>(x)) += coeff * v(static_cast<Eigen::Index>(y));
    }
  }
  return out;
}

std::vector<Complex> mapped_outer_product(std::span<const Matrix> xs, std::span<const Vector> vs) {
  std::vector<Vector> mapped;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    Vector w = Vector::Zero(xs[k].rows());
    for (Eigen::Index r = 0; r < xs[k].rows(); ++r) {
      for (Eigen::Index c = 0; c < xs[k].cols(); ++c) w(r) += xs[k](r, c) * vs[k](c);
    }
    mapped.push_back(std::move(w));
  }
  std::vector<Complex> out{Complex(1.0)};
  for (const Vector& w : mapped) {
    std::vector<Complex> next;
    next.reserve(out.size() * static_cast<std::size_t>(w.size()));
    for (const Complex& a : out) {
      for (Eigen::Index i = 0; i < w.size(); ++i) next.push_back(a * w(i));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace hdetent::oracle
