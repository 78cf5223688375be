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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hdetent/convexroof.hpp"
#include "hdetent/hyperdet.hpp"
#include "hdetent/locc.hpp"
#include "hdetent/qstate.hpp"
#include "hdetent/state_file.hpp"
#include "hdetent/verify.hpp"

namespace py = pybind11;
using namespace hdetent;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

Hypermatrix to_hypermatrix(const ComplexArray& a) {
  std::vector<std::size_t> dims(a.shape(), a.shape() + a.ndim());
  return Hypermatrix(Shape(dims), std::vector<Complex>(a.data(), a.data() + a.size()));
}

HdetOptions budget(std::uint64_t max_terms) {
  HdetOptions o;
  o.max_terms = max_terms;
  return o;
}

PureState to_state(const Vector& amps, std::size_t n, std::size_t d) { return PureState(n, d, amps); }

py::dict decomposition_dict(const Decomposition& dec) {
  py::dict out;
  out["weights"] = dec.weights;
  std::vector<Vector> states;
  for (const auto& s : dec.states) states.push_back(s.amplitudes());
  out["states"] = states;
  return out;
}

}  // namespace

PYBIND11_MODULE(_hdetent, m) {
  m.doc() = "Combinatorial hyperdeterminant and entanglement measures";
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<StateFileError>(m, "StateFileError", PyExc_ValueError);

  const std::uint64_t default_budget = kDefaultTermBudget;

  m.def("hdet", [](const ComplexArray& a, std::uint64_t max_terms) { return hdet(to_hypermatrix(a), budget(max_terms)); },
        py::arg("a"), py::arg("max_terms") = default_budget);
  m.def("hdet_even",
        [](const ComplexArray& a, std::uint64_t max_terms) { return hdet_even(to_hypermatrix(a), budget(max_terms)); },
        py::arg("a"), py::arg("max_terms") = default_budget);
  m.def("hdet_naive",
        [](const ComplexArray& a, std::uint64_t max_terms) { return hdet_naive(to_hypermatrix(a), budget(max_terms)); },
        py::arg("a"), py::arg("max_terms") = default_budget);

  m.def("measure",
        [](const Vector& amps, std::size_t n, std::size_t d, const std::string& which) {
          return measure(to_state(amps, n, d), parse_measure_kind(which)).value;
        },
        py::arg("amplitudes"), py::arg("n"), py::arg("d"), py::arg("which") = "hdet");
  m.def("concurrence", [](const Vector& amps, std::size_t n) { return concurrence_qubits(to_state(amps, n, 2)); },
        py::arg("amplitudes"), py::arg("n"));
  m.def("ent_hat_matrix", [](std::size_t n) { return ent_hat_matrix(n); }, py::arg("n"));
  m.def("ghz_state", [](std::size_t n, std::size_t d) { return ghz_state(n, d).amplitudes(); }, py::arg("n"),
        py::arg("d"));
  m.def("random_state",
        [](std::size_t n, std::size_t d, std::uint64_t seed) { return random_haar_state(n, d, seed).amplitudes(); },
        py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("random_density_matrix",
        [](std::size_t n, std::size_t d, std::size_t rank, std::uint64_t seed) {
          Rng rng(seed);
          return random_density_matrix(n, d, rank, rng).matrix();
        },
        py::arg("n"), py::arg("d"), py::arg("rank"), py::arg("seed"));

  m.def("monotonicity_trial",
        [](std::uint64_t seed, std::size_t n, std::size_t d, const std::string& which) {
          const TrialReport r = monotonicity_trial(seed, n, d, parse_measure_kind(which));
          py::dict out;
          out["before"] = r.measure_before;
          out["after"] = r.expected_after;
          out["margin"] = r.margin;
          out["pass"] = r.pass;
          return out;
        },
        py::arg("seed"), py::arg("n"), py::arg("d"), py::arg("which") = "hdet");

  m.def("lemma1_f",
        [](const std::vector<double>& alphas, const std::vector<double>& p, double eta) {
          return lemma1_f(alphas, p, eta);
        },
        py::arg("alphas"), py::arg("p"), py::arg("eta"));
  m.def("lemma1_critical_value",
        [](const std::vector<double>& alphas, double eta) { return lemma1_critical_value(alphas, eta); },
        py::arg("alphas"), py::arg("eta"));

  m.def("convex_roof",
        [](const Matrix& rho, std::size_t n, std::size_t d, const std::string& which, std::size_t restarts,
           std::size_t iterations, std::uint64_t seed) {
          RoofOptions o;
          o.restarts = restarts;
          o.iterations = iterations;
          o.seed = seed;
          const RoofEstimate r = convex_roof_estimate(DensityMatrix(n, d, rho), parse_measure_kind(which), o);
          py::dict out;
          out["value"] = r.value;
          out["eigen_value"] = r.eigen_value;
          out["rank"] = r.rank;
          out["decomposition"] = decomposition_dict(r.best);
          return out;
        },
        py::arg("rho"), py::arg("n"), py::arg("d"), py::arg("which") = "hdet", py::arg("restarts") = 32,
        py::arg("iterations") = 500, py::arg("seed") = 0);

  m.def("suite_names", [] {
    std::vector<std::string> out;
    for (auto s : verify::suite_names()) out.emplace_back(s);
    return out;
  });
  m.def("run_suite",
        [](const std::string& name, std::uint64_t seed, std::optional<std::size_t> trials) {
          verify::SuiteOptions o;
          o.seed = seed;
          o.trials = trials;
          verify::Report report;
          {
            py::gil_scoped_release release;
            verify::run_suite(name, o, report);
          }
          py::list out;
          for (const auto& r : report.records()) {
            py::dict d;
            d["check"] = r.check;
            d["params"] = r.params.dump();
            d["observed"] = r.observed;
            d["bound"] = r.bound;
            d["pass"] = r.pass;
            out.append(d);
          }
          return out;
        },
        py::arg("name"), py::arg("seed") = 1, py::arg("trials") = py::none());
}
