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
#include <vector>

#include "common.hpp"
#include "hdetent/convexroof.hpp"
#include "hdetent/qstate.hpp"

namespace hdetent::verify {

using detail::at_most;
using detail::check_rng;
using detail::instances;
using detail::Stopwatch;

namespace {

class RoofRunner {
 public:
  RoofRunner(const SuiteOptions& options, std::uint64_t stream) : options_(options), stream_(stream) {}

  double estimate(const DensityMatrix& rho, MeasureKind kind) {
    RoofOptions roof;
    roof.restarts = options_.roof_restarts;
    roof.iterations = options_.roof_iterations;
    roof.seed = derive_seed(stream_, calls_++);
    roof.hdet = options_.hdet;
    const RoofEstimate est = convex_roof_estimate(rho, kind, roof);
    worst_residual_ = std::max(worst_residual_, est.best.residual(rho));
    worst_excess_ = std::max(worst_excess_, est.value - est.eigen_value);
    return est.value;
  }

  double worst_residual() const { return worst_residual_; }
  double worst_excess() const { return worst_excess_; }
  std::size_t calls() const { return calls_; }

 private:
  const SuiteOptions& options_;
  std::uint64_t stream_;
  std::uint64_t calls_ = 0;
  double worst_residual_ = 0.0;
  double worst_excess_ = -1.0;
};

DensityMatrix random_separable(std::size_t members, Rng& rng) {
  std::vector<std::vector<Vector>> factors;
  for (std::size_t i = 0; i < members; ++i) factors.push_back(random_product_factors(2, 2, rng));
  const std::vector<double> weights = uniform_simplex(members, rng);
  return separable_mixture(factors, weights);
}

}  // namespace

void check_convex_roof(const SuiteOptions& options, Report& report) {
  Rng rng = check_rng(options, 12);
  RoofRunner runner(options, derive_seed(options.seed, 13));
  Stopwatch clock;
  const nlohmann::json budget{{"restarts", options.roof_restarts}, {"iterations", options.roof_iterations}};

  struct PureConfig {
    std::size_t n, d, count;
  };
  for (const MeasureKind kind : {MeasureKind::kHdet, MeasureKind::kTangle}) {
    double worst = 0.0;
    for (const PureConfig c : {PureConfig{2, 2, 3}, PureConfig{2, 3, 2}, PureConfig{4, 2, 2}}) {
      for (std::size_t i = 0; i < c.count; ++i) {
        const PureState psi = random_haar_state(c.n, c.d, rng);
        const double value = runner.estimate(DensityMatrix::from_pure(psi), kind);
        worst = std::max(worst, std::abs(value - measure(psi, kind, options.hdet).value));
      }
    }
    report.add(at_most("roof_pure_state_recovery", {{"measure", std::string(to_string(kind))}}, worst, 1e-8));
  }

  const std::size_t count = instances(options, 20);
  double worst_separable = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    worst_separable = std::max(worst_separable, runner.estimate(random_separable(4, rng), MeasureKind::kHdet));
  }
  nlohmann::json params = budget;
  params["instances"] = count;
  params["members"] = 4;
  report.add(at_most("roof_separable_mixture", params, worst_separable, 1e-6));

  const DensityMatrix maximally_mixed(2, 2, Matrix::Identity(4, 4) / 4.0);
  report.add(at_most("roof_maximally_mixed", budget, runner.estimate(maximally_mixed, MeasureKind::kHdet), 1e-6));

  constexpr std::size_t kConvexityDraws = 5;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_gap = -1.0;
  for (std::size_t i = 0; i < kConvexityDraws; ++i) {
    const DensityMatrix a = random_density_matrix(2, 2, 2, rng);
    const DensityMatrix b = random_density_matrix(2, 2, 2, rng);
    const double lambda = unit(rng);
    const double joint = runner.estimate(mix(a, b, lambda), MeasureKind::kHdet);
    const double split = lambda * runner.estimate(a, MeasureKind::kHdet) +
                         (1.0 - lambda) * runner.estimate(b, MeasureKind::kHdet);
    worst_gap = std::max(worst_gap, joint - split);
  }
  report.add(at_most("roof_convexity", {{"instances", kConvexityDraws}}, worst_gap, 2e-6));

  report.add(at_most("roof_decomposition_residual", {{"estimates", runner.calls()}}, runner.worst_residual(), 1e-8));
  report.add(at_most("roof_not_above_spectral_ensemble", {{"estimates", runner.calls()}}, runner.worst_excess(),
                     1e-12));
  report.add(at_most("roof_runtime_seconds", budget, clock.seconds(), 600.0));
}

}  // namespace hdetent::verify
