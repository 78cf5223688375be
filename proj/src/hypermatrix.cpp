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

#include "hdetent/hypermatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hdetent {

namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void require_same_shape(const Hypermatrix& a, const Hypermatrix& b, const char* what) {
  if (!(a.shape() == b.shape())) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch");
  }
}

}  // namespace

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("Shape: order must be at least 1");
  }
  strides_.assign(dims_.size(), 1);
  for (std::size_t k = dims_.size(); k-- > 0;) {
    if (dims_[k] == 0) {
      throw std::invalid_argument("Shape: every extent must be positive");
    }
    strides_[k] = size_;
    size_ *= dims_[k];
  }
}

Shape Shape::cuboid(std::size_t order, std::size_t side) {
  return Shape(std::vector<std::size_t>(order, side));
}

bool Shape::is_cuboid() const {
  return std::all_of(dims_.begin(), dims_.end(), [&](std::size_t n) { return n == dims_[0]; });
}

std::size_t Shape::offset(std::span<const std::size_t> index) const {
  if (index.size() != dims_.size()) {
    throw std::invalid_argument("Shape::offset: index has wrong order");
  }
  std::size_t off = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= dims_[k]) {
      throw std::out_of_range("Shape::offset: index out of range");
    }
    off += index[k] * strides_[k];
  }
  return off;
}

std::vector<std::size_t> Shape::unravel(std::size_t offset) const {
  if (offset >= size_) {
    throw std::out_of_range("Shape::unravel: offset out of range");
  }
  std::vector<std::size_t> index(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    index[k] = offset / strides_[k];
    offset %= strides_[k];
  }
  return index;
}

Hypermatrix::Hypermatrix(Shape shape)
    : shape_(std::move(shape)), entries_(shape_.size(), Complex{0.0, 0.0}) {}

Hypermatrix::Hypermatrix(Shape shape, std::vector<Complex> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != shape_.size()) {
    throw std::invalid_argument("Hypermatrix: entry count " + std::to_string(entries_.size()) +
                                " does not match shape size " + std::to_string(shape_.size()));
  }
}

Hypermatrix Hypermatrix::from_vector(const Vector& v) {
  return Hypermatrix(Shape{static_cast<std::size_t>(v.size())},
                     std::vector<Complex>(v.data(), v.data() + v.size()));
}

Hypermatrix Hypermatrix::from_matrix(const Matrix& m) {
  RowMajorMatrix rm = m;
  return Hypermatrix(Shape{static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols())},
                     std::vector<Complex>(rm.data(), rm.data() + rm.size()));
}

Matrix Hypermatrix::to_matrix() const {
  if (order() != 2) {
    throw std::invalid_argument("Hypermatrix::to_matrix: order is not 2");
  }
  return Eigen::Map<const RowMajorMatrix>(entries_.data(), static_cast<Eigen::Index>(shape_.dim(0)),
                                          static_cast<Eigen::Index>(shape_.dim(1)));
}

Vector Hypermatrix::to_vector() const {
  return Eigen::Map<const Vector>(entries_.data(), static_cast<Eigen::Index>(entries_.size()));
}

Hypermatrix Hypermatrix::operator+(const Hypermatrix& other) const {
  require_same_shape(*this, other, "Hypermatrix::operator+");
  std::vector<Complex> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), other.entries_.begin(), out.begin(), std::plus<>{});
  return Hypermatrix(shape_, std::move(out));
}

Hypermatrix Hypermatrix::operator-(const Hypermatrix& other) const {
  require_same_shape(*this, other, "Hypermatrix::operator-");
  std::vector<Complex> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), other.entries_.begin(), out.begin(), std::minus<>{});
  return Hypermatrix(shape_, std::move(out));
}

Hypermatrix Hypermatrix::operator*(Complex scale) const {
  std::vector<Complex> out(entries_);
  for (auto& z : out) z *= scale;
  return Hypermatrix(shape_, std::move(out));
}

double max_abs_difference(const Hypermatrix& a, const Hypermatrix& b) {
  require_same_shape(a, b, "max_abs_difference");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double frobenius_norm(const Hypermatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size(), perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= perm.size() || inv[perm[k]] != perm.size()) {
      throw std::invalid_argument("inverse_permutation: not a permutation");
    }
    inv[perm[k]] = k;
  }
  return inv;
}

Hypermatrix pi_transpose(const Hypermatrix& a, std::span<const std::size_t> perm) {
  const std::size_t order = a.order();
  if (perm.size() != order) {
    throw std::invalid_argument("pi_transpose: permutation length " + std::to_string(perm.size()) +
                                " does not match order " + std::to_string(order));
  }
  inverse_permutation(perm);  // validates

  std::vector<std::size_t> dims(order);
  for (std::size_t k = 0; k < order; ++k) dims[k] = a.shape().dim(perm[k]);
  Shape out_shape(dims);

  // Source stride seen from each output axis.
  std::vector<std::size_t> src_stride(order);
  for (std::size_t k = 0; k < order; ++k) src_stride[k] = a.shape().strides()[perm[k]];

  std::vector<Complex> out(a.size());
  std::vector<std::size_t> index(order, 0);
  std::size_t src = 0;
  for (std::size_t dst = 0; dst < out.size(); ++dst) {
    out[dst] = a[src];
    // Odometer increment over the output multi-index.
    for (std::size_t k = order; k-- > 0;) {
      if (++index[k] < dims[k]) {
        src += src_stride[k];
        break;
      }
      src -= (dims[k] - 1) * src_stride[k];
      index[k] = 0;
    }
  }
  return Hypermatrix(std::move(out_shape), std::move(out));
}

Hypermatrix outer_product(const Hypermatrix& a, const Hypermatrix& b) {
  std::vector<std::size_t> dims = a.shape().dims();
  dims.insert(dims.end(), b.shape().dims().begin(), b.shape().dims().end());
  std::vector<Complex> out;
  out.reserve(a.size() * b.size());
  for (const Complex& x : a.entries()) {
    for (const Complex& y : b.entries()) out.push_back(x * y);
  }
  return Hypermatrix(Shape(std::move(dims)), std::move(out));
}

Hypermatrix mode_multiply(const Hypermatrix& a, std::size_t axis, const Matrix& x) {
  if (axis >= a.order()) {
    throw std::invalid_argument("mode_multiply: axis out of range");
  }
  const std::size_t n = a.shape().dim(axis);
  if (static_cast<std::size_t>(x.cols()) != n) {
    throw std::invalid_argument("mode_multiply: matrix for axis " + std::to_string(axis) + " has " +
                                std::to_string(x.cols()) + " columns, expected " + std::to_string(n));
  }
  const std::size_t m = static_cast<std::size_t>(x.rows());
  const std::size_t inner = a.shape().strides()[axis];
  const std::size_t outer = a.size() / (n * inner);

  std::vector<std::size_t> dims = a.shape().dims();
  dims[axis] = m;
  std::vector<Complex> out(outer * m * inner);
  const auto ei = static_cast<Eigen::Index>(inner);
  for (std::size_t o = 0; o < outer; ++o) {
    Eigen::Map<const RowMajorMatrix> src(a.entries().data() + o * n * inner,
                                         static_cast<Eigen::Index>(n), ei);
    Eigen::Map<RowMajorMatrix> dst(out.data() + o * m * inner, static_cast<Eigen::Index>(m), ei);
    dst.noalias() = x * src;
  }
  return Hypermatrix(Shape(std::move(dims)), std::move(out));
}

Hypermatrix multilinear_multiply(std::span<const Matrix> xs, const Hypermatrix& a) {
  if (xs.size() != a.order()) {
    throw std::invalid_argument("multilinear_multiply: got " + std::to_string(xs.size()) +
                                " matrices for an order-" + std::to_string(a.order()) + " hypermatrix");
  }
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (static_cast<std::size_t>(xs[k].cols()) != a.shape().dim(k)) {
      throw std::invalid_argument("multilinear_multiply: dimension mismatch on axis " + std::to_string(k));
    }
  }
  Hypermatrix result = a;
  for (std::size_t k = 0; k < xs.size(); ++k) result = mode_multiply(result, k, xs[k]);
  return result;
}

}  // namespace hdetent
