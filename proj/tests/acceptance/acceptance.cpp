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

// Acceptance runner. Prints one line per criterion:
//   criterion <k> <PASS|FAIL> <checks> checks, <failures> failures, <seconds> s  <title>
// and exits 1 if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <CLI11.hpp>

#include "hdetent/verify.hpp"

namespace {

using hdetent::verify::Report;
using hdetent::verify::SuiteOptions;
using Check = void (*)(const SuiteOptions&, Report&);

struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome(bool verbose)> run;
};

Outcome run_checks(std::vector<Check> checks, bool verbose) {
  Report report([verbose](const hdetent::verify::CheckRecord& r) {
    if (verbose || !r.pass) std::cout << "  " << r.to_json().dump() << "\n";
  });
  SuiteOptions options;
  for (Check c : checks) c(options, report);
  return {report.records().size(), report.failures()};
}

int run_command(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

Outcome run_cli(const std::string& cli, bool verbose) {
  Outcome out;
  for (const auto suite : hdetent::verify::suite_names()) {
    const std::string command =
        "'" + cli + "' --seed 1 verify " + std::string(suite) + (verbose ? "" : " > /dev/null");
    const int code = run_command(command);
    ++out.checks;
    if (code != 0) ++out.failures;
    std::cout << "  verify " << suite << " exit " << code << "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  namespace v = hdetent::verify;
  CLI::App app{"hdetent acceptance runner"};
  std::vector<int> selected;
  std::string cli = HDETENT_CLI_PATH;
  bool verbose = false;
  app.add_option("--criterion", selected, "Criteria to run (default: all)")->check(CLI::Range(1, 11));
  app.add_option("--cli", cli, "Path to the hdetent executable");
  app.add_flag("-v,--verbose", verbose, "Print every check record");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "determinant reduction", [](bool vb) { return run_checks({v::check_determinant_reduction}, vb); }},
      {2, "even sum against full sum", [](bool vb) { return run_checks({v::check_even_against_naive}, vb); }},
      {3, "multiplicativity",
       [](bool vb) { return run_checks({v::check_multiplicativity, v::check_multilinear_structure}, vb); }},
      {4, "product states", [](bool vb) { return run_checks({v::check_product_states}, vb); }},
      {5, "local unitary invariance", [](bool vb) { return run_checks({v::check_local_unitary_invariance}, vb); }},
      {6, "quadratic form", [](bool vb) { return run_checks({v::check_quadratic_form}, vb); }},
      {7, "qubit identities", [](bool vb) { return run_checks({v::check_qubit_identities}, vb); }},
      {8, "monotonicity under two-outcome measurements",
       [](bool vb) { return run_checks({v::check_monotonicity, v::check_povm_identities}, vb); }},
      {9, "scalar ratio bound",
       [](bool vb) { return run_checks({v::check_lemma1_bound, v::check_critical_value}, vb); }},
      {10, "convex roof", [](bool vb) { return run_checks({v::check_convex_roof}, vb); }},
      {11, "command-line verify suites", [&cli](bool vb) { return run_cli(cli, vb); }},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run(verbose);
    } catch (const std::exception& e) {
      std::cout << "  error: " << e.what() << "\n";
      out.failures = out.checks = std::max<std::size_t>(out.checks, 1);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.failures == 0 && out.checks > 0;
    all_pass = all_pass && pass;
    std::printf("criterion %d %s %zu checks, %zu failures, %.2f s  %s\n", c.id, pass ? "PASS" : "FAIL", out.checks,
                out.failures, seconds, c.title.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
