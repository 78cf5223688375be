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

#include "hdetent/hyperdet.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace hdetent {

namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

class ComplexAccumulator {
 public:
  void add(Complex z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  Complex value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

void require_cuboid(const Hypermatrix& a, const char* what) {
  if (!a.shape().is_cuboid()) {
    throw std::invalid_argument(std::string(what) + ": hypermatrix is not cuboid");
  }
}

void require_even(const Hypermatrix& a, const char* what) {
  if (a.order() % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": order " + std::to_string(a.order()) +
                                " is odd");
  }
}

void require_budget(std::size_t d, std::size_t free_axes, const HdetOptions& options,
                    const char* what) {
  const std::uint64_t terms = permutation_tuple_count(d, free_axes);
  if (terms > options.max_terms) {
    throw BudgetExceeded(std::string(what) + ": (" + std::to_string(d) + "!)^" +
                         std::to_string(free_axes) + " terms exceed the budget of " +
                         std::to_string(options.max_terms));
  }
}

// Visits every tuple of permutations acting on axes [first_free, N). Axes
// before first_free are pinned to the identity. For each tuple, visit receives
// the product of the signs and the d flat offsets of
// A[s_0(j), ..., s_{N-1}(j)], j = 0..d-1.
template <class Visit>
void for_each_permutation_tuple(const Hypermatrix& a, const std::vector<SignedPermutation>& perms,
                                std::size_t first_free, Visit&& visit) {
  const std::size_t order = a.order();
  const std::size_t d = a.shape().dim(0);
  const auto& strides = a.shape().strides();
  const std::size_t free_axes = order - first_free;

  std::vector<std::vector<std::size_t>> prefix(free_axes + 1, std::vector<std::size_t>(d, 0));
  std::vector<int> sign(free_axes + 1, 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < first_free; ++k) prefix[0][j] += j * strides[k];
  }

  std::vector<std::size_t> idx(free_axes, 0);
  std::size_t dirty = 0;
  while (true) {
    for (std::size_t k = dirty; k < free_axes; ++k) {
      const SignedPermutation& p = perms[idx[k]];
      const std::size_t stride = strides[first_free + k];
      for (std::size_t j = 0; j < d; ++j) prefix[k + 1][j] = prefix[k][j] + p.mapping[j] * stride;
      sign[k + 1] = sign[k] * p.parity;
    }
    visit(sign[free_axes], prefix[free_axes]);

    std::size_t k = free_axes;
    while (k > 0) {
      --k;
      if (++idx[k] < perms.size()) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (free_axes == 0) return;
    dirty = k;
  }
}

Complex signed_product(const Hypermatrix& a, int sign, const std::vector<std::size_t>& offsets) {
  Complex prod = a[offsets[0]];
  for (std::size_t j = 1; j < offsets.size(); ++j) prod *= a[offsets[j]];
  return sign > 0 ? prod : -prod;
}

Complex even_sum(const Hypermatrix& a, const HdetOptions& options) {
  const std::size_t d = a.shape().dim(0);
  require_budget(d, a.order() - 1, options, "hdet_even");
  const auto perms = enumerate_signed_permutations(d, options.permutation_guard);
  ComplexAccumulator acc;
  for_each_permutation_tuple(a, perms, 1, [&](int sign, const std::vector<std::size_t>& offsets) {
    acc.add(signed_product(a, sign, offsets));
  });
  return acc.value();
}

}  // namespace

std::uint64_t permutation_tuple_count(std::size_t d, std::size_t k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= d; ++i) {
    if (fact > kMax / i) return kMax;
    fact *= i;
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (fact != 0 && total > kMax / fact) return kMax;
    total *= fact;
  }
  return total;
}

Complex hdet_naive(const Hypermatrix& a, const HdetOptions& options) {
  require_cuboid(a, "hdet_naive");
  const std::size_t d = a.shape().dim(0);
  require_budget(d, a.order(), options, "hdet_naive");
  const auto perms = enumerate_signed_permutations(d, options.permutation_guard);
  ComplexAccumulator acc;
  for_each_permutation_tuple(a, perms, 0, [&](int sign, const std::vector<std::size_t>& offsets) {
    acc.add(signed_product(a, sign, offsets));
  });
  return acc.value() / static_cast<double>(perms.size());
}

Complex hdet_even_sum(const Hypermatrix& a, const HdetOptions& options) {
  require_cuboid(a, "hdet_even");
  require_even(a, "hdet_even");
  return even_sum(a, options);
}

Complex hdet_even(const Hypermatrix& a, const HdetOptions& options) {
  require_cuboid(a, "hdet_even");
  require_even(a, "hdet_even");
  if (a.order() == 2) return determinant(a.to_matrix());
  return even_sum(a, options);
}

Complex hdet(const Hypermatrix& a, const HdetOptions& options) {
  require_cuboid(a, "hdet");
  if (a.order() % 2 != 0) return {0.0, 0.0};
  return hdet_even(a, options);
}

Complex determinant(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("determinant: matrix is not square");
  }
  if (m.rows() == 0) return {1.0, 0.0};
  return m.partialPivLu().determinant();
}

HdetGradient hdet_with_gradient(const Hypermatrix& a, const HdetOptions& options) {
  require_cuboid(a, "hdet_with_gradient");
  require_even(a, "hdet_with_gradient");
  const std::size_t d = a.shape().dim(0);
  require_budget(d, a.order() - 1, options, "hdet_with_gradient");
  const auto perms = enumerate_signed_permutations(d, options.permutation_guard);

  ComplexAccumulator value;
  std::vector<Complex> grad(a.size(), Complex{0.0, 0.0});
  std::vector<Complex> left(d + 1), right(d + 1);
  for_each_permutation_tuple(a, perms, 1, [&](int sign, const std::vector<std::size_t>& offsets) {
    left[0] = Complex{static_cast<double>(sign), 0.0};
    right[d] = Complex{1.0, 0.0};
    for (std::size_t j = 0; j < d; ++j) left[j + 1] = left[j] * a[offsets[j]];
    for (std::size_t j = d; j-- > 0;) right[j] = right[j + 1] * a[offsets[j]];
    value.add(left[d]);
    for (std::size_t j = 0; j < d; ++j) grad[offsets[j]] += left[j] * right[j + 1];
  });
  return {value.value(), Hypermatrix(a.shape(), std::move(grad))};
}

}  // namespace hdetent
