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

#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "common.hpp"
#include "hdetent/hyperdet.hpp"
#include "hdetent/hypermatrix.hpp"
#include "hdetent/qstate.hpp"
#include "oracles.hpp"

namespace hdetent::verify {

using detail::at_most;
using detail::check_rng;
using detail::instances;
using detail::relative_error;
using detail::Stopwatch;

namespace {

struct Cuboid {
  std::size_t d;
  std::size_t order;
};

nlohmann::json cuboid_params(const Cuboid& c, std::size_t count) {
  return {{"d", c.d}, {"order", c.order}, {"instances", count}};
}

Hypermatrix random_hypermatrix(const Shape& shape, Rng& rng) {
  const Vector v = complex_gaussian_vector(shape.size(), rng);
  return Hypermatrix(shape, std::vector<Complex>(v.data(), v.data() + v.size()));
}

Hypermatrix random_cuboid(const Cuboid& c, Rng& rng) {
  return random_hypermatrix(Shape::cuboid(c.order, c.d), rng);
}

}  // namespace

void check_determinant_reduction(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 500);
  Rng rng = check_rng(options, 1);
  Stopwatch clock;
  double worst_lu = 0.0;
  double worst_sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t d = 1 + i % 6;
    const Matrix m = complex_gaussian_matrix(d, d, rng);
    const Complex expected = oracle::cofactor_determinant(m);
    const Hypermatrix a = Hypermatrix::from_matrix(m);
    worst_lu = std::max(worst_lu, relative_error(hdet_even(a, options.hdet), expected));
    worst_sum = std::max(worst_sum, relative_error(hdet_even_sum(a, options.hdet), expected));
  }
  const nlohmann::json params{{"max_d", 6}, {"instances", count}};
  report.add(at_most("determinant_reduction", params, worst_lu, 1e-10));
  report.add(at_most("determinant_permutation_sum", params, worst_sum, 1e-10));
  report.add(at_most("determinant_runtime_seconds", params, clock.seconds(), 5.0));
}

void check_even_against_naive(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 100);
  Rng rng = check_rng(options, 2);
  Stopwatch clock;
  for (const Cuboid c : {Cuboid{2, 4}, Cuboid{2, 6}, Cuboid{3, 4}}) {
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const Hypermatrix a = random_cuboid(c, rng);
      worst = std::max(worst, relative_error(hdet_even(a, options.hdet), hdet_naive(a, options.hdet)));
    }
    report.add(at_most("even_sum_matches_full_sum", cuboid_params(c, count), worst, 1e-10));
  }
  report.add(at_most("even_sum_runtime_seconds", {{"instances", count}}, clock.seconds(), 60.0));
}

void check_multiplicativity(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 100);
  Rng rng = check_rng(options, 3);
  for (const Cuboid c : {Cuboid{2, 4}, Cuboid{3, 4}}) {
    double worst_scaling = 0.0;
    double worst_outer = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const Hypermatrix a = random_cuboid(c, rng);
      std::vector<Matrix> xs;
      Complex det_product = 1.0;
      for (std::size_t k = 0; k < c.order; ++k) {
        xs.push_back(complex_gaussian_matrix(c.d, c.d, rng));
        det_product *= oracle::cofactor_determinant(xs.back());
      }
      const Complex lhs = hdet(multilinear_multiply(xs, a), options.hdet);
      worst_scaling = std::max(worst_scaling, relative_error(lhs, det_product * hdet(a, options.hdet)));

      const std::size_t split = 2;
      const Hypermatrix left = random_cuboid({c.d, c.order - split}, rng);
      const Hypermatrix right = random_cuboid({c.d, split}, rng);
      double factorial = 1.0;
      for (std::size_t k = 2; k <= c.d; ++k) factorial *= static_cast<double>(k);
      const Complex joined = hdet(outer_product(left, right), options.hdet);
      const Complex split_value = factorial * hdet(left, options.hdet) * hdet(right, options.hdet);
      worst_outer = std::max(worst_outer, relative_error(joined, split_value));
    }
    report.add(at_most("hdet_multilinear_scaling", cuboid_params(c, count), worst_scaling, 1e-9));
    report.add(at_most("hdet_outer_product", cuboid_params(c, count), worst_outer, 1e-9));
  }
}

void check_product_states(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 200);
  Rng rng = check_rng(options, 4);
  const std::vector<std::pair<std::size_t, std::size_t>> configs{{2, 2}, {2, 3}, {4, 2}};
  std::vector<double> worst(configs.size(), 0.0);
  std::vector<std::size_t> seen(configs.size(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t c = i % configs.size();
    const auto [n, d] = configs[c];
    const PureState psi = product_state(random_product_factors(n, d, rng));
    worst[c] = std::max(worst[c], measure_hdet(psi, options.hdet).value);
    ++seen[c];
  }
  for (std::size_t c = 0; c < configs.size(); ++c) {
    report.add(at_most("product_state_hdet",
                       {{"subsystems", configs[c].first}, {"d", configs[c].second}, {"instances", seen[c]}},
                       worst[c], 1e-12));
  }
}

void check_local_unitary_invariance(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 200);
  Rng rng = check_rng(options, 5);
  const std::vector<std::pair<std::size_t, std::size_t>> configs{{2, 2}, {2, 3}, {4, 2}, {4, 3}};
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto [n, d] = configs[i % configs.size()];
    const PureState psi = random_haar_state(n, d, rng);
    std::vector<Matrix> us;
    for (std::size_t k = 0; k < n; ++k) us.push_back(haar_unitary(d, rng));
    const double before = measure_hdet(psi, options.hdet).value;
    const double after = measure_hdet(apply_local(psi, us), options.hdet).value;
    worst = std::max(worst, std::abs(after - before));
  }
  report.add(at_most("local_unitary_invariance", {{"instances", count}}, worst, 1e-10));
}

void check_quadratic_form(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 100);
  Rng rng = check_rng(options, 6);
  std::vector<Matrix> forms;
  for (std::size_t n = 1; n <= 3; ++n) {
    forms.push_back(ent_hat_matrix(n));
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    const Matrix expected = (0.5 * sign) * oracle::pauli_y_tensor(2 * n);
    const double diff = (forms.back() - expected).cwiseAbs().maxCoeff();
    report.add(at_most("quadratic_form_matrix", {{"n", n}}, diff, 1e-14));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % 3;
    const PureState psi = random_haar_state(2 * n, 2, rng);
    const Vector& v = psi.amplitudes();
    const Complex form = (v.transpose() * forms[n - 1] * v)(0, 0);
    worst = std::max(worst, std::abs(form - hdet_even(to_hypermatrix(psi), options.hdet)));
  }
  report.add(at_most("quadratic_form_value", {{"instances", count}}, worst, 1e-12));
}

void check_qubit_identities(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 200);
  Rng rng = check_rng(options, 7);
  double worst_concurrence = 0.0;
  double worst_tangle = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t qubits = 2 * (1 + i % 3);
    const PureState psi = random_haar_state(qubits, 2, rng);
    const double c = concurrence_qubits(psi);
    worst_concurrence = std::max(worst_concurrence, std::abs(c - concurrence_from_hdet(psi, options.hdet)));
    worst_tangle = std::max(worst_tangle, std::abs(n_tangle_from_hdet(psi, options.hdet) - c * c));
  }
  report.add(at_most("concurrence_is_twice_hdet", {{"instances", count}}, worst_concurrence, 1e-10));
  report.add(at_most("tangle_is_concurrence_squared", {{"instances", count}}, worst_tangle, 1e-10));
  for (std::size_t n = 1; n <= 3; ++n) {
    const PureState ghz = ghz_state(2 * n, 2);
    const Hypermatrix a = to_hypermatrix(ghz);
    report.add(at_most("ghz_hdet", {{"qubits", 2 * n}},
                       std::abs(std::abs(hdet_even(a, options.hdet)) - 0.5), 1e-12));
    report.add(at_most("ghz_hdet_brute_force", {{"qubits", 2 * n}},
                       std::abs(std::abs(oracle::hyperdeterminant_brute_force(a)) - 0.5), 1e-12));
  }
}

void check_multilinear_structure(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 100);
  Rng rng = check_rng(options, 8);
  std::uniform_int_distribution<std::size_t> order_pick(1, 4), side_pick(2, 3), rows_pick(1, 3);

  double worst_outer = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t order = order_pick(rng);
    std::vector<Matrix> xs;
    std::vector<Vector> vs;
    Hypermatrix chain = Hypermatrix::from_vector(Vector::Ones(1));
    for (std::size_t k = 0; k < order; ++k) {
      const std::size_t side = side_pick(rng);
      xs.push_back(complex_gaussian_matrix(rows_pick(rng), side, rng));
      vs.push_back(complex_gaussian_vector(side, rng));
      const Hypermatrix factor = Hypermatrix::from_vector(vs.back());
      chain = k == 0 ? factor : outer_product(chain, factor);
    }
    const Hypermatrix mapped = multilinear_multiply(xs, chain);
    const std::vector<Complex> expected = oracle::mapped_outer_product(xs, vs);
    for (std::size_t j = 0; j < expected.size(); ++j) {
      worst_outer = std::max(worst_outer, std::abs(mapped[j] - expected[j]));
    }
  }
  report.add(at_most("multilinear_outer_factorization", {{"instances", count}}, worst_outer, 1e-12));

  double worst_kron = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + i % 3;
    const std::size_t d = 2 + (i / 3) % 2;
    const PureState psi = random_haar_state(n, d, rng);
    std::vector<Matrix> ms;
    for (std::size_t k = 0; k < n; ++k) ms.push_back(complex_gaussian_matrix(d, d, rng));
    const Vector expected = oracle::kronecker_apply(ms, psi.amplitudes());
    const Hypermatrix mapped = multilinear_multiply(ms, to_hypermatrix(psi));
    for (std::size_t j = 0; j < mapped.size(); ++j) {
      worst_kron = std::max(worst_kron, std::abs(mapped[j] - expected(static_cast<Eigen::Index>(j))));
    }
  }
  report.add(at_most("kronecker_matches_multilinear", {{"instances", count}}, worst_kron, 1e-12));

  double worst_transpose = 0.0;
  double worst_scale = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Cuboid c = std::vector<Cuboid>{{2, 4}, {3, 4}, {2, 6}}[i % 3];
    const Hypermatrix a = random_cuboid(c, rng);
    std::vector<std::size_t> perm(c.order);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const Complex base = hdet(a, options.hdet);
    worst_transpose = std::max(worst_transpose, relative_error(hdet(pi_transpose(a, perm), options.hdet), base));
    const Complex scale = complex_gaussian_vector(1, rng)(0);
    worst_scale = std::max(worst_scale, relative_error(hdet(a * scale, options.hdet),
                                                       std::pow(scale, static_cast<int>(c.d)) * base));
  }
  report.add(at_most("hdet_transpose_invariance", {{"instances", count}}, worst_transpose, 1e-10));
  report.add(at_most("hdet_homogeneity", {{"instances", count}}, worst_scale, 1e-10));
}

}  // namespace hdetent::verify
