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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "common.hpp"
#include "hdetent/locc.hpp"
#include "hdetent/qstate.hpp"

namespace hdetent::verify {

using detail::at_least;
using detail::at_most;
using detail::check_rng;
using detail::instances;
using detail::relative_error;
using detail::Stopwatch;

namespace {

struct TrialConfig {
  std::size_t n;
  std::size_t d;
  std::size_t trials;
};

Eigen::VectorXd sorted_eigenvalues(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian, Eigen::EigenvaluesOnly);
  Eigen::VectorXd values = solver.eigenvalues();
  std::sort(values.data(), values.data() + values.size());
  return values;
}

}  // namespace

void check_monotonicity(const SuiteOptions& options, Report& report) {
  const std::vector<TrialConfig> configs{{1, 2, 1000}, {2, 2, 1000}, {1, 3, 500}};
  Stopwatch clock;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const std::size_t trials = instances(options, configs[c].trials);
    const std::uint64_t stream = derive_seed(options.seed, 100 + c);
    for (const MeasureKind kind : {MeasureKind::kHdet, MeasureKind::kTangle}) {
      double worst = std::numeric_limits<double>::infinity();
      std::size_t failures = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        const TrialReport trial = monotonicity_trial(derive_seed(stream, t), configs[c].n, configs[c].d,
                                                     kind, options.hdet);
        if (options.on_trial) options.on_trial(trial);
        worst = std::min(worst, trial.margin);
        if (!trial.pass) ++failures;
      }
      report.add(at_least("monotonicity_margin",
                          {{"n", configs[c].n},
                           {"d", configs[c].d},
                           {"measure", std::string(to_string(kind))},
                           {"trials", trials},
                           {"failures", failures}},
                          trials == 0 ? 0.0 : worst, -kMonotonicityTolerance));
    }
  }
  report.add(at_most("monotonicity_runtime_seconds", nlohmann::json::object(), clock.seconds(), 300.0));
}

void check_povm_identities(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 100);
  Rng rng = check_rng(options, 9);
  for (const std::size_t d : {2, 3, 4}) {
    double completeness = 0.0;
    double pairing = 0.0;
    double two_path = 0.0;
    double total = 0.0;
    double scaling = 0.0;
    double unitary_case = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const TwoOutcomePovm povm = random_povm(d, rng);
      const PureState psi = random_haar_state(2, d, rng);
      completeness = std::max(completeness, povm.completeness_residual());

      const Matrix m1 = povm.m1();
      const Matrix m2 = povm.m2();
      const Eigen::VectorXd e1 = sorted_eigenvalues(m1.adjoint() * m1);
      const Eigen::VectorXd e2 = sorted_eigenvalues(m2.adjoint() * m2);
      pairing = std::max(pairing, (e2 - (Eigen::VectorXd::Ones(e1.size()) - e1).reverse()).cwiseAbs().maxCoeff());

      const auto outcomes = apply_povm(psi, povm);
      const auto predicted = predicted_probabilities(psi, povm);
      for (std::size_t k = 0; k < 2; ++k) {
        two_path = std::max(two_path, std::abs(outcomes[k].probability - predicted[k]));
        if (!outcomes[k].degenerate()) {
          const double actual = measure_hdet(*outcomes[k].state, options.hdet).value;
          const double expected = predicted_outcome_hdet(psi, povm, static_cast<int>(k), options.hdet);
          scaling = std::max(scaling, relative_error(actual, expected));
        }
      }
      total = std::max(total, std::abs(outcomes[0].probability + outcomes[1].probability - 1.0));

      const TwoOutcomePovm unitary(povm.u1(), povm.u2(), povm.v(), Eigen::VectorXd::Ones(static_cast<Eigen::Index>(d)));
      unitary_case = std::max(unitary_case, std::abs(expected_measure(psi, unitary, MeasureKind::kHdet, options.hdet) -
                                                     measure_hdet(psi, options.hdet).value));
    }
    const nlohmann::json params{{"d", d}, {"instances", count}};
    report.add(at_most("povm_completeness", params, completeness, 1e-10));
    report.add(at_most("povm_eigenvalue_pairing", params, pairing, 1e-10));
    report.add(at_most("outcome_probability_two_paths", params, two_path, 1e-10));
    report.add(at_most("outcome_probabilities_sum", params, total, 1e-10));
    report.add(at_most("outcome_hdet_scaling", params, scaling, 1e-9));
    report.add(at_most("unitary_povm_preserves_measure", params, unitary_case, 1e-10));
  }
}

}  // namespace hdetent::verify
