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

#ifndef HDETENT_HYPERMATRIX_HPP_
#define HDETENT_HYPERMATRIX_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hdetent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Extents (n_1, ..., n_N) of a hypermatrix.
///
/// Axes are numbered from 0 in code. Multi-indices map to flat offsets in
/// row-major order: the last index varies fastest, so for a 2x3 shape the
/// offset of (i, j) is 3*i + j. This matches the Kronecker-product basis
/// ordering |i_1 ... i_N> used for qudit amplitudes.
class Shape {
 public:
  explicit Shape(std::vector<std::size_t> dims);
  Shape(std::initializer_list<std::size_t> dims)
      : Shape(std::vector<std::size_t>(dims)) {}

  /// Order-`order` shape with every extent equal to `side`.
  static Shape cuboid(std::size_t order, std::size_t side);

  std::size_t order() const { return dims_.size(); }
  std::size_t dim(std::size_t axis) const { return dims_.at(axis); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<std::size_t>& strides() const { return strides_; }

  /// Number of entries (product of the extents).
  std::size_t size() const { return size_; }

  bool is_cuboid() const;

  std::size_t offset(std::span<const std::size_t> index) const;
  std::vector<std::size_t> unravel(std::size_t offset) const;

  bool operator==(const Shape& other) const { return dims_ == other.dims_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Dense complex hypermatrix. Immutable once built; every operation returns a
/// new value.
class Hypermatrix {
 public:
  /// All-zero hypermatrix of the given shape.
  explicit Hypermatrix(Shape shape);
  Hypermatrix(Shape shape, std::vector<Complex> entries);

  static Hypermatrix from_vector(const Vector& v);
  static Hypermatrix from_matrix(const Matrix& m);

  const Shape& shape() const { return shape_; }
  std::size_t order() const { return shape_.order(); }
  std::size_t size() const { return entries_.size(); }
  std::span<const Complex> entries() const { return entries_; }

  const Complex& operator[](std::size_t offset) const { return entries_[offset]; }
  const Complex& at(std::span<const std::size_t> index) const {
    return entries_[shape_.offset(index)];
  }
  const Complex& at(std::initializer_list<std::size_t> index) const {
    return at(std::span<const std::size_t>(index.begin(), index.size()));
  }

  /// Order-2 view as an Eigen matrix; throws for other orders.
  Matrix to_matrix() const;
  /// Flattened entries in row-major order.
  Vector to_vector() const;

  Hypermatrix operator+(const Hypermatrix& other) const;
  Hypermatrix operator-(const Hypermatrix& other) const;
  Hypermatrix operator*(Complex scale) const;

 private:
  Shape shape_;
  std::vector<Complex> entries_;
};

inline Hypermatrix operator*(Complex scale, const Hypermatrix& a) { return a * scale; }

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_difference(const Hypermatrix& a, const Hypermatrix& b);

double frobenius_norm(const Hypermatrix& a);

/// pi-transpose: the result has extents (n_{pi(0)}, ..., n_{pi(N-1)}) and its
/// entry at (i_{pi(0)}, ..., i_{pi(N-1)}) is a's entry at (i_0, ..., i_{N-1}).
/// `perm` is 0-based.
Hypermatrix pi_transpose(const Hypermatrix& a, std::span<const std::size_t> perm);

std::vector<std::size_t> inverse_permutation(std::span<const std::size_t> perm);

/// Outer product a o b of order order(a) + order(b).
Hypermatrix outer_product(const Hypermatrix& a, const Hypermatrix& b);

/// Contracts axis `axis` of `a` with the columns of `x`:
/// result[.., r, ..] = sum_c x(r, c) a[.., c, ..].
Hypermatrix mode_multiply(const Hypermatrix& a, std::size_t axis, const Matrix& x);

/// Multilinear matrix multiplication (X_1, ..., X_N) * A. Each X_k must have
/// n_k columns; the result has extents rows(X_1) x ... x rows(X_N).
Hypermatrix multilinear_multiply(std::span<const Matrix> xs, const Hypermatrix& a);

}  // namespace hdetent

#endif  // HDETENT_HYPERMATRIX_HPP_
