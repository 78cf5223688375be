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
#include <map>
#include <utility>
#include <vector>

#include "common.hpp"
#include "hdetent/locc.hpp"

namespace hdetent::verify {

using detail::at_most;
using detail::check_rng;
using detail::instances;

namespace {

constexpr double kBoundSlack = 1e-12;
constexpr std::size_t kGridPoints = 10'000;

std::vector<double> random_alphas(std::size_t d, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> alphas(d);
  for (double& a : alphas) a = unit(rng);
  return alphas;
}

// Largest f over P = (t, 1 - t) with t on an open midpoint grid.
double two_outcome_grid_max(const std::vector<double>& alphas, double eta) {
  double best = 0.0;
  for (std::size_t i = 0; i < kGridPoints; ++i) {
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(kGridPoints);
    const std::vector<double> p{t, 1.0 - t};
    best = std::max(best, lemma1_f(alphas, p, eta));
  }
  return best;
}

}  // namespace

void check_lemma1_bound(const SuiteOptions& options, Report& report) {
  const std::size_t count = instances(options, 100'000);
  Rng rng = check_rng(options, 10);
  const std::vector<double> etas{0.5, 1.0, 2.0};
  std::uniform_int_distribution<std::size_t> pick_d(2, 6);
  std::uniform_int_distribution<std::size_t> pick_eta(0, etas.size() - 1);

  struct Group {
    double worst = 0.0;
    std::size_t samples = 0;
    std::size_t violations = 0;
  };
  std::map<std::pair<std::size_t, std::size_t>, Group> groups;
  double overall = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t d = pick_d(rng);
    const std::size_t e = pick_eta(rng);
    const std::vector<double> alphas = random_alphas(d, rng);
    const std::vector<double> p = uniform_simplex(d, rng);
    const double f = lemma1_f(alphas, p, etas[e]);
    Group& g = groups[{d, e}];
    g.worst = std::max(g.worst, f);
    ++g.samples;
    if (f > 1.0 + kBoundSlack) ++g.violations;
    overall = std::max(overall, f);
  }
  for (const auto& [key, g] : groups) {
    report.add(at_most("ratio_bound",
                       {{"d", key.first}, {"eta", etas[key.second]}, {"samples", g.samples},
                        {"violations", g.violations}},
                       g.worst, 1.0 + kBoundSlack));
  }
  report.add(at_most("ratio_bound_overall", {{"samples", count}}, overall, 1.0 + kBoundSlack));
}

void check_critical_value(const SuiteOptions& options, Report& report) {
  Rng rng = check_rng(options, 11);

  const std::vector<double> fixed{0.9, 0.4};
  report.add(at_most("critical_value_dominance",
                     {{"d", 2}, {"eta", 2.0}, {"alphas", fixed}, {"grid", kGridPoints}},
                     two_outcome_grid_max(fixed, 2.0) - lemma1_critical_value(fixed, 2.0), 1e-9));

  constexpr std::size_t kAlphaDraws = 50;
  double worst_gap = -1.0;
  for (std::size_t i = 0; i < kAlphaDraws; ++i) {
    const std::vector<double> alphas = random_alphas(2, rng);
    worst_gap = std::max(worst_gap, two_outcome_grid_max(alphas, 2.0) - lemma1_critical_value(alphas, 2.0));
  }
  report.add(at_most("critical_value_dominance",
                     {{"d", 2}, {"eta", 2.0}, {"alpha_draws", kAlphaDraws}, {"grid", kGridPoints}},
                     worst_gap, 1e-9));

  double worst_stationary = 0.0;
  double worst_critical = 0.0;
  std::size_t feasible = 0;
  std::size_t drawn = 0;
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::size_t i = 0; i < 50; ++i, ++drawn) {
      const std::vector<double> alphas = random_alphas(d, rng);
      for (const double eta : {0.5, 1.0, 2.0}) {
        const double critical = lemma1_critical_value(alphas, eta);
        worst_critical = std::max(worst_critical, critical);
        if (const auto p = lemma1_stationary_point(alphas)) {
          worst_stationary = std::max(worst_stationary, std::abs(lemma1_f(alphas, *p, eta) - critical));
          ++feasible;
        }
      }
    }
  }
  report.add(at_most("critical_value_at_stationary_point",
                     {{"alpha_draws", drawn}, {"feasible", feasible}}, worst_stationary, 1e-10));
  report.add(at_most("critical_value_at_most_one", {{"alpha_draws", drawn}}, worst_critical,
                     1.0 + kBoundSlack));
}

}  // namespace hdetent::verify
