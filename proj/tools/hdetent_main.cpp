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

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hdetent/convexroof.hpp"
#include "hdetent/hyperdet.hpp"
#include "hdetent/locc.hpp"
#include "hdetent/qstate.hpp"
#include "hdetent/state_file.hpp"
#include "hdetent/verify.hpp"

namespace {

using namespace hdetent;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr std::uint64_t kDefaultSeed = 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultTermBudget;
  bool no_normalize_check = false;

  std::uint64_t resolved_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("HDE_SEED"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        const std::uint64_t value = std::stoull(env, &used, 10);
        if (used == std::string(env).size()) return value;
      } catch (const std::exception&) {
      }
      throw UsageError(std::string("HDE_SEED is not an unsigned integer: '") + env + "'");
    }
    return kDefaultSeed;
  }

  HdetOptions hdet() const {
    HdetOptions o;
    o.max_terms = budget;
    return o;
  }
};

double significant15(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

void emit(const nlohmann::json& j) { std::cout << j.dump() << '\n'; }

nlohmann::json matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_output(const std::string& path, const StateFile& file) {
  if (path.empty() || path == "-") {
    write_state_file(std::cout, file);
  } else {
    save_state_file(path, file);
  }
}

// hdet ------------------------------------------------------------------

struct HdetArgs {
  std::string path;
};

int run_hdet(const Globals& g, const HdetArgs& a) {
  const PureState psi = to_pure_state(load_state_file(a.path), !g.no_normalize_check);
  Complex value = 0.0;
  if (psi.subsystems() % 2 != 0) {
    std::cerr << "warning: odd number of subsystems (" << psi.subsystems()
              << "); the hyperdeterminant is identically 0\n";
  } else {
    value = hdet(to_hypermatrix(psi), g.hdet());
  }
  emit({{"hdet", {{"re", significant15(value.real())}, {"im", significant15(value.imag())}}},
        {"abs", significant15(std::abs(value))},
        {"odd_order", psi.subsystems() % 2 != 0}});
  return kExitOk;
}

// measure ---------------------------------------------------------------

struct MeasureArgs {
  std::string path;
  std::string which = "hdet";
};

int run_measure(const Globals& g, const MeasureArgs& a) {
  const PureState psi = to_pure_state(load_state_file(a.path), !g.no_normalize_check);
  nlohmann::json out{{"measure", a.which}};
  if (a.which == "concurrence" || a.which == "n-tangle") {
    if (psi.local_dim() != 2) throw UsageError(a.which + " needs qubits (d = 2)");
    if (psi.subsystems() % 2 != 0) throw UsageError(a.which + " needs an even number of qubits");
    out["value"] = a.which == "concurrence" ? concurrence_qubits(psi) : n_tangle_qubits(psi);
  } else {
    const MeasureResult r = measure(psi, parse_measure_kind(a.which), g.hdet());
    if (r.odd_order) std::cerr << "warning: odd number of subsystems; the measure is 0\n";
    out["value"] = r.value;
    out["odd_order"] = r.odd_order;
  }
  emit(out);
  return kExitOk;
}

// verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::optional<std::size_t> trials;
  std::size_t restarts = RoofOptions{}.restarts;
  std::size_t iterations = RoofOptions{}.iterations;
  std::string trial_log;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  verify::SuiteOptions options;
  options.seed = g.resolved_seed();
  options.trials = a.trials;
  options.hdet = g.hdet();
  options.roof_restarts = a.restarts;
  options.roof_iterations = a.iterations;
  std::ofstream log;
  if (!a.trial_log.empty()) {
    log.open(a.trial_log);
    if (!log) throw UsageError("cannot write '" + a.trial_log + "'");
    options.on_trial = [&log](const TrialReport& t) { log << t.to_json() << '\n'; };
  }
  verify::Report report([](const verify::CheckRecord& r) { std::cout << r.to_json().dump() << std::endl; });
  try {
    verify::run_suite(a.suite, options, report);
  } catch (const std::invalid_argument& e) {
    if (std::string(e.what()).rfind("unknown suite", 0) == 0) throw UsageError(e.what());
    throw;
  }
  emit({{"suite", a.suite},
        {"seed", options.seed},
        {"checks", report.records().size()},
        {"failures", report.failures()},
        {"pass", report.passed()}});
  return report.passed() ? kExitOk : kExitCheckFailed;
}

// roof ------------------------------------------------------------------

struct RoofArgs {
  std::string path;
  std::string which = "hdet";
  std::size_t restarts = RoofOptions{}.restarts;
  std::size_t iterations = RoofOptions{}.iterations;
  std::size_t members = 0;
};

int run_roof(const Globals& g, const RoofArgs& a) {
  const StateFile file = load_state_file(a.path);
  const DensityMatrix rho = file.kind == StateKind::kPure
                                ? DensityMatrix::from_pure(to_pure_state(file, !g.no_normalize_check))
                                : to_density_matrix(file, !g.no_normalize_check);
  if (a.restarts == 0 || a.iterations == 0) throw UsageError("roof: restarts and iterations must be positive");
  RoofOptions options;
  options.restarts = a.restarts;
  options.iterations = a.iterations;
  options.max_members = a.members;
  options.seed = g.resolved_seed();
  options.hdet = g.hdet();
  const MeasureKind kind = parse_measure_kind(a.which);
  const RoofEstimate est = convex_roof_estimate(rho, kind, options);
  emit({{"measure", std::string(to_string(kind))},
        {"upper_bound", est.value},
        {"spectral_ensemble_value", est.eigen_value},
        {"rank", est.rank},
        {"ensemble_size", est.best.size()},
        {"reconstruction_residual", est.best.residual(rho)},
        {"restarts", a.restarts},
        {"iterations", a.iterations},
        {"seed", options.seed}});
  return kExitOk;
}

// random-state / random-povm ----------------------------------------------

struct RandomStateArgs {
  std::string kind = "pure";
  std::size_t n = 2;
  std::size_t d = 2;
  std::size_t rank = 2;
  std::size_t members = 4;
  std::string output;
};

int run_random_state(const Globals& g, const RandomStateArgs& a) {
  Rng rng(g.resolved_seed());
  if (a.kind == "pure") {
    write_output(a.output, to_state_file(random_haar_state(a.n, a.d, rng)));
  } else if (a.kind == "product") {
    write_output(a.output, to_state_file(product_state(random_product_factors(a.n, a.d, rng))));
  } else if (a.kind == "ghz") {
    write_output(a.output, to_state_file(ghz_state(a.n, a.d)));
  } else if (a.kind == "separable") {
    if (a.members == 0) throw UsageError("--members must be positive");
    std::vector<std::vector<Vector>> factors;
    for (std::size_t i = 0; i < a.members; ++i) factors.push_back(random_product_factors(a.n, a.d, rng));
    const std::vector<double> weights = uniform_simplex(a.members, rng);
    write_output(a.output, to_state_file(separable_mixture(factors, weights)));
  } else if (a.kind == "mixed") {
    write_output(a.output, to_state_file(random_density_matrix(a.n, a.d, a.rank, rng)));
  } else {
    throw UsageError("unknown state kind '" + a.kind + "'");
  }
  return kExitOk;
}

struct RandomPovmArgs {
  std::size_t d = 2;
};

int run_random_povm(const Globals& g, const RandomPovmArgs& a) {
  const TwoOutcomePovm povm = random_povm(a.d, g.resolved_seed());
  emit({{"d", a.d},
        {"seed", g.resolved_seed()},
        {"sigma", std::vector<double>(povm.sigma().data(), povm.sigma().data() + povm.sigma().size())},
        {"u1", matrix_json(povm.u1())},
        {"u2", matrix_json(povm.u2())},
        {"v", matrix_json(povm.v())},
        {"completeness_residual", povm.completeness_residual()}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperdeterminant entanglement toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed (falls back to HDE_SEED, then 1)");
  app.add_option("--budget", g.budget, "Maximum number of hyperdeterminant terms")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-normalize-check", g.no_normalize_check, "Skip normalization checks on loaded states");

  HdetArgs hdet_args;
  auto* hdet_cmd = app.add_subcommand("hdet", "Print the hyperdeterminant of a pure state");
  hdet_cmd->add_option("path", hdet_args.path, "State file")->required();

  MeasureArgs measure_args;
  auto* measure_cmd = app.add_subcommand("measure", "Evaluate an entanglement measure of a pure state");
  measure_cmd->add_option("path", measure_args.path, "State file")->required();
  measure_cmd->add_option("--which", measure_args.which, "hdet, tangle, concurrence or n-tangle")
      ->check(CLI::IsMember({"hdet", "tangle", "e1", "e2", "concurrence", "n-tangle"}));

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded verification suite");
  verify_cmd->add_option("suite", verify_args.suite, "props, locc, lemma1 or roof")->required();
  verify_cmd->add_option("--trials", verify_args.trials, "Override the sampled instance counts");
  verify_cmd->add_option("--restarts", verify_args.restarts, "Roof restarts")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--iters", verify_args.iterations, "Roof iterations per restart")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trial-log", verify_args.trial_log, "Write every monotonicity trial to this file");
  verify_cmd->add_option("--seed", g.seed, "Random seed");

  RoofArgs roof_args;
  auto* roof_cmd = app.add_subcommand("roof", "Upper-bound the convex roof of a mixed state");
  roof_cmd->add_option("path", roof_args.path, "State file")->required();
  roof_cmd->add_option("--which", roof_args.which, "hdet or tangle")
      ->check(CLI::IsMember({"hdet", "tangle", "e1", "e2"}));
  roof_cmd->add_option("--restarts", roof_args.restarts, "Number of restarts");
  roof_cmd->add_option("--iters", roof_args.iterations, "Iterations per restart");
  roof_cmd->add_option("--members", roof_args.members, "Ensemble size (0 selects rank squared)");
  roof_cmd->add_option("--seed", g.seed, "Random seed");

  RandomStateArgs state_args;
  auto* state_cmd = app.add_subcommand("random-state", "Write a random state file");
  state_cmd->add_option("--kind", state_args.kind, "pure, product, ghz, separable or mixed")
      ->check(CLI::IsMember({"pure", "product", "ghz", "separable", "mixed"}));
  state_cmd->add_option("-n,--subsystems", state_args.n, "Number of subsystems")->check(CLI::PositiveNumber);
  state_cmd->add_option("-d,--local-dim", state_args.d, "Local dimension")->check(CLI::Range(2, 64));
  state_cmd->add_option("--rank", state_args.rank, "Rank of a mixed state")->check(CLI::PositiveNumber);
  state_cmd->add_option("--members", state_args.members, "Members of a separable mixture");
  state_cmd->add_option("-o,--output", state_args.output, "Output path (default stdout)");
  state_cmd->add_option("--seed", g.seed, "Random seed");

  RandomPovmArgs povm_args;
  auto* povm_cmd = app.add_subcommand("random-povm", "Print a random two-outcome local POVM");
  povm_cmd->add_option("-d,--local-dim", povm_args.d, "Local dimension")->check(CLI::Range(2, 64));
  povm_cmd->add_option("--seed", g.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*hdet_cmd) return run_hdet(g, hdet_args);
    if (*measure_cmd) return run_measure(g, measure_args);
    if (*verify_cmd) return run_verify(g, verify_args);
    if (*roof_cmd) return run_roof(g, roof_args);
    if (*state_cmd) return run_random_state(g, state_args);
    if (*povm_cmd) return run_random_povm(g, povm_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
