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

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "test_oracles.hpp"

namespace hdetent {
namespace {

using testing::random_hypermatrix;

TEST(Shape, RejectsEmptyAndZeroExtents) {
  EXPECT_THROW(Shape(std::vector<std::size_t>{}), std::invalid_argument);
  EXPECT_THROW(Shape({2, 0, 3}), std::invalid_argument);
}

TEST(Shape, CuboidAndStrides) {
  const Shape s({2, 3, 4});
  EXPECT_EQ(s.order(), 3u);
  EXPECT_EQ(s.size(), 24u);
  EXPECT_FALSE(s.is_cuboid());
  EXPECT_EQ(s.strides(), (std::vector<std::size_t>{12, 4, 1}));
  EXPECT_TRUE(Shape::cuboid(4, 3).is_cuboid());
  EXPECT_EQ(Shape::cuboid(4, 3).size(), 81u);
}

TEST(Shape, OffsetIsRowMajor) {
  const Shape s({2, 3, 4});
  std::size_t expected = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 4; ++k) {
        const std::vector<std::size_t> idx{i, j, k};
        EXPECT_EQ(s.offset(idx), expected);
        EXPECT_EQ(s.unravel(expected), idx);
        ++expected;
      }
    }
  }
  const std::vector<std::size_t> bad{2, 0, 0};
  EXPECT_THROW((void)s.offset(bad), std::out_of_range);
}

TEST(Hypermatrix, ConstructionChecksLength) {
  EXPECT_THROW(Hypermatrix(Shape({2, 2}), std::vector<Complex>(3)), std::invalid_argument);
  const Hypermatrix z(Shape({2, 2, 2}));
  for (const Complex& c : z.entries()) EXPECT_EQ(c, Complex(0.0));
}

TEST(Hypermatrix, MatrixRoundTrip) {
  Matrix m(2, 3);
  m << 1.0, 2.0, 3.0, Complex(0, 4), 5.0, 6.0;
  const Hypermatrix a = Hypermatrix::from_matrix(m);
  EXPECT_EQ(a.at({1, 0}), Complex(0, 4));
  EXPECT_EQ(a.at({0, 2}), Complex(3.0));
  EXPECT_EQ(a.to_matrix(), m);
  EXPECT_THROW((void)Hypermatrix(Shape({2, 2, 2})).to_matrix(), std::invalid_argument);
}

TEST(FrobeniusNorm, Examples) {
  EXPECT_EQ(frobenius_norm(Hypermatrix(Shape({2, 2, 2}))), 0.0);
  EXPECT_DOUBLE_EQ(frobenius_norm(Hypermatrix::from_matrix(Matrix::Identity(2, 2))), std::sqrt(2.0));
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
  EXPECT_NEAR(frobenius_norm(Hypermatrix::from_vector(v)), 1.0, 1e-15);
}

TEST(PiTranspose, IdentityLeavesUnchanged) {
  Rng rng(3);
  const Hypermatrix a = random_hypermatrix(Shape({2, 3, 2}), rng);
  const std::vector<std::size_t> id{0, 1, 2};
  EXPECT_EQ(max_abs_difference(pi_transpose(a, id), a), 0.0);
}

TEST(PiTranspose, SwapIsMatrixTranspose) {
  Rng rng(4);
  const Matrix m = complex_gaussian_matrix(2, 3, rng);
  const std::vector<std::size_t> swap{1, 0};
  const Hypermatrix t = pi_transpose(Hypermatrix::from_matrix(m), swap);
  EXPECT_EQ(t.shape(), Shape({3, 2}));
  EXPECT_EQ(t.to_matrix(), Matrix(m.transpose()));
}

TEST(PiTranspose, EntryRuleAndRoundTrip) {
  Rng rng(5);
  const Hypermatrix a = random_hypermatrix(Shape({2, 3, 4, 2}), rng);
  const std::vector<std::size_t> perm{2, 0, 3, 1};
  const Hypermatrix t = pi_transpose(a, perm);
  EXPECT_EQ(t.shape(), Shape({4, 2, 2, 3}));
  for (std::size_t off = 0; off < a.size(); ++off) {
    const auto i = a.shape().unravel(off);
    const std::vector<std::size_t> j{i[perm[0]], i[perm[1]], i[perm[2]], i[perm[3]]};
    EXPECT_EQ(t.at(j), a[off]);
  }
  const auto inv = inverse_permutation(perm);
  EXPECT_EQ(max_abs_difference(pi_transpose(t, inv), a), 0.0);

  const Hypermatrix b = random_hypermatrix(Shape::cuboid(4, 2), rng);
  const Hypermatrix back = pi_transpose(pi_transpose(b, perm), inverse_permutation(perm));
  for (std::size_t off = 0; off < b.size(); ++off) EXPECT_EQ(back[off], b[off]);
}

TEST(PiTranspose, RejectsInvalidPermutation) {
  const Hypermatrix a(Shape({2, 2, 2}));
  const std::vector<std::size_t> short_perm{0, 1};
  const std::vector<std::size_t> repeated{0, 0, 1};
  EXPECT_THROW((void)pi_transpose(a, short_perm), std::invalid_argument);
  EXPECT_THROW((void)pi_transpose(a, repeated), std::invalid_argument);
}

TEST(OuterProduct, BasisVectors) {
  const Vector e0 = Vector::Unit(2, 0);
  const Hypermatrix r = outer_product(Hypermatrix::from_vector(e0), Hypermatrix::from_vector(e0));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  EXPECT_EQ(r.to_matrix(), expected);
}

TEST(OuterProduct, RankOneExpansion) {
  const double s = 1.0 / std::sqrt(2.0);
  Vector plus(2), minus(2);
  plus << s, s;
  minus << s, -s;
  const Matrix r = outer_product(Hypermatrix::from_vector(plus), Hypermatrix::from_vector(minus)).to_matrix();
  Matrix expected(2, 2);
  expected << 0.5, -0.5, 0.5, -0.5;
  EXPECT_LT((r - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(OuterProduct, EntriesAndNorm) {
  Rng rng(6);
  const Hypermatrix a = random_hypermatrix(Shape({2, 3}), rng);
  const Hypermatrix b = random_hypermatrix(Shape({3, 2, 2}), rng);
  const Hypermatrix c = outer_product(a, b);
  EXPECT_EQ(c.shape(), Shape({2, 3, 3, 2, 2}));
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      EXPECT_EQ(c[i * b.size() + j], a[i] * b[j]);
      sum += std::norm(a[i] * b[j]);
    }
  }
  EXPECT_NEAR(frobenius_norm(c), std::sqrt(sum), 1e-13);
  EXPECT_NEAR(frobenius_norm(c), frobenius_norm(a) * frobenius_norm(b), 1e-12);
}

TEST(MultilinearMultiply, IdentityIsNoOp) {
  Rng rng(7);
  const Hypermatrix a = random_hypermatrix(Shape({2, 3, 4}), rng);
  const std::vector<Matrix> ids{Matrix::Identity(2, 2), Matrix::Identity(3, 3), Matrix::Identity(4, 4)};
  EXPECT_LT(max_abs_difference(multilinear_multiply(ids, a), a), 1e-15);
}

TEST(MultilinearMultiply, OrderTwoIsMatrixSandwich) {
  Rng rng(8);
  for (int t = 0; t < 10; ++t) {
    const Matrix x1 = complex_gaussian_matrix(2, 2, rng);
    const Matrix x2 = complex_gaussian_matrix(2, 2, rng);
    const Matrix m = complex_gaussian_matrix(2, 2, rng);
    const std::vector<Matrix> xs{x1, x2};
    const Matrix got = multilinear_multiply(xs, Hypermatrix::from_matrix(m)).to_matrix();
    EXPECT_LT((got - x1 * m * x2.transpose()).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(MultilinearMultiply, RectangularShapes) {
  Rng rng(9);
  const Hypermatrix a = random_hypermatrix(Shape({2, 3}), rng);
  const std::vector<Matrix> xs{complex_gaussian_matrix(4, 2, rng), complex_gaussian_matrix(1, 3, rng)};
  const Hypermatrix r = multilinear_multiply(xs, a);
  EXPECT_EQ(r.shape(), Shape({4, 1}));
  EXPECT_LT((r.to_matrix() - xs[0] * a.to_matrix() * xs[1].transpose()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(MultilinearMultiply, RejectsMismatch) {
  const Hypermatrix a(Shape({2, 3}));
  const std::vector<Matrix> wrong_cols{Matrix::Identity(2, 2), Matrix::Identity(2, 2)};
  const std::vector<Matrix> wrong_count{Matrix::Identity(2, 2)};
  EXPECT_THROW((void)multilinear_multiply(wrong_cols, a), std::invalid_argument);
  EXPECT_THROW((void)multilinear_multiply(wrong_count, a), std::invalid_argument);
  EXPECT_THROW((void)mode_multiply(a, 2, Matrix::Identity(2, 2)), std::invalid_argument);
}

TEST(MultilinearMultiply, RankOneFactorization) {
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    const std::size_t order = 1 + static_cast<std::size_t>(t % 4);
    std::vector<Matrix> xs;
    Hypermatrix chain = Hypermatrix::from_vector(Vector::Ones(1));
    Hypermatrix mapped_chain = chain;
    for (std::size_t k = 0; k < order; ++k) {
      const Vector v = complex_gaussian_vector(2 + k % 2, rng);
      xs.push_back(complex_gaussian_matrix(3, static_cast<std::size_t>(v.size()), rng));
      const Vector xv = xs.back() * v;
      chain = k == 0 ? Hypermatrix::from_vector(v) : outer_product(chain, Hypermatrix::from_vector(v));
      mapped_chain = k == 0 ? Hypermatrix::from_vector(xv) : outer_product(mapped_chain, Hypermatrix::from_vector(xv));
    }
    EXPECT_LT(max_abs_difference(multilinear_multiply(xs, chain), mapped_chain), 1e-12);
  }
}

TEST(MultilinearMultiply, Bilinearity) {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const Shape shape = Shape::cuboid(1 + static_cast<std::size_t>(t % 4), 2 + static_cast<std::size_t>(t % 2));
    const Hypermatrix a = random_hypermatrix(shape, rng);
    const Hypermatrix b = random_hypermatrix(shape, rng);
    std::vector<Matrix> xs;
    for (std::size_t k = 0; k < shape.order(); ++k) xs.push_back(complex_gaussian_matrix(shape.dim(k), shape.dim(k), rng));
    const Complex alpha(0.3, -1.2), beta(-0.7, 0.4);
    const Hypermatrix lhs = multilinear_multiply(xs, a * alpha + b * beta);
    const Hypermatrix rhs = multilinear_multiply(xs, a) * alpha + multilinear_multiply(xs, b) * beta;
    EXPECT_LT(max_abs_difference(lhs, rhs), 1e-12);
  }
}

TEST(MultilinearMultiply, Composition) {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const Shape shape = Shape::cuboid(2 + static_cast<std::size_t>(t % 3), 2 + static_cast<std::size_t>(t % 2));
    const Hypermatrix a = random_hypermatrix(shape, rng);
    std::vector<Matrix> xs, ys, products;
    for (std::size_t k = 0; k < shape.order(); ++k) {
      xs.push_back(complex_gaussian_matrix(shape.dim(k), shape.dim(k), rng));
      ys.push_back(complex_gaussian_matrix(shape.dim(k), shape.dim(k), rng));
      products.push_back(xs.back() * ys.back());
    }
    const Hypermatrix lhs = multilinear_multiply(xs, multilinear_multiply(ys, a));
    const Hypermatrix rhs = multilinear_multiply(products, a);
    EXPECT_LT(max_abs_difference(lhs, rhs) / frobenius_norm(rhs), 1e-12);
  }
}

}  // namespace
}  // namespace hdetent
