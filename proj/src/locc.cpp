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

#include "hdetent/locc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hdetent {

namespace {

constexpr double kUnitaryTolerance = 1e-10;

void require_unitary(const Matrix& u, std::size_t d, const char* name) {
  if (static_cast<std::size_t>(u.rows()) != d || static_cast<std::size_t>(u.cols()) != d) {
    throw std::invalid_argument(std::string("TwoOutcomePovm: ") + name + " has wrong size");
  }
  const double residual =
      (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (residual > kUnitaryTolerance) {
    throw std::invalid_argument(std::string("TwoOutcomePovm: ") + name + " is not unitary");
  }
}

void require_matching_dim(const PureState& psi, const TwoOutcomePovm& povm) {
  if (psi.local_dim() != povm.dim()) {
    throw std::invalid_argument("POVM acts on dimension " + std::to_string(povm.dim()) +
                                " but the state has local dimension " +
                                std::to_string(psi.local_dim()));
  }
}

// numerator / base^exponent with the zero-base convention of lemma1_f.
double ratio_term(double numerator, double base, double exponent) {
  if (base > 0.0) return numerator / std::pow(base, exponent);
  if (exponent < 0.0) return 0.0;
  if (exponent == 0.0) return numerator;
  if (numerator == 0.0) return 0.0;
  throw std::domain_error("lemma1: zero denominator with a nonzero numerator");
}

void require_alphas(std::span<const double> alphas) {
  if (alphas.empty()) throw std::invalid_argument("lemma1: empty alpha vector");
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("lemma1: alpha outside [0, 1]");
  }
}

void require_eta(double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw std::invalid_argument("lemma1: eta must be > 0");
}

struct Products {
  double alpha = 1.0;
  double complement = 1.0;
};

Products products(std::span<const double> alphas) {
  Products p;
  for (double a : alphas) {
    p.alpha *= a;
    p.complement *= 1.0 - a;
  }
  return p;
}

}  // namespace

TwoOutcomePovm::TwoOutcomePovm(Matrix u1, Matrix u2, Matrix v, Eigen::VectorXd sigma)
    : u1_(std::move(u1)), u2_(std::move(u2)), v_(std::move(v)), sigma_(std::move(sigma)) {
  const std::size_t d = dim();
  if (d == 0) throw std::invalid_argument("TwoOutcomePovm: empty sigma");
  require_unitary(u1_, d, "U1");
  require_unitary(u2_, d, "U2");
  require_unitary(v_, d, "V");
  for (Eigen::Index k = 0; k < sigma_.size(); ++k) {
    if (!(sigma_[k] >= 0.0 && sigma_[k] <= 1.0)) {
      throw std::invalid_argument("TwoOutcomePovm: singular value outside [0, 1]");
    }
  }
}

Eigen::VectorXd TwoOutcomePovm::sigma_complement() const {
  return (1.0 - sigma_.array().square()).max(0.0).sqrt().matrix();
}

Matrix TwoOutcomePovm::m1() const {
  return u1_ * sigma_.cast<Complex>().asDiagonal() * v_.adjoint();
}

Matrix TwoOutcomePovm::m2() const {
  return u2_ * sigma_complement().cast<Complex>().asDiagonal() * v_.adjoint();
}

double TwoOutcomePovm::completeness_residual() const {
  const Matrix a = m1();
  const Matrix b = m2();
  const Matrix sum = a.adjoint() * a + b.adjoint() * b;
  return (sum - Matrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
}

TwoOutcomePovm random_povm(std::size_t d, Rng& rng) {
  if (d < 2) throw std::invalid_argument("random_povm: d must be at least 2");
  Matrix u1 = haar_unitary(d, rng);
  Matrix u2 = haar_unitary(d, rng);
  Matrix v = haar_unitary(d, rng);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  Eigen::VectorXd sigma(static_cast<Eigen::Index>(d));
  for (Eigen::Index k = 0; k < sigma.size(); ++k) sigma[k] = uniform(rng);
  return TwoOutcomePovm(std::move(u1), std::move(u2), std::move(v), std::move(sigma));
}

TwoOutcomePovm random_povm(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_povm(d, rng);
}

std::array<PovmOutcome, 2> apply_povm(const PureState& psi, const TwoOutcomePovm& povm,
                                      double degenerate_below) {
  require_matching_dim(psi, povm);
  const Hypermatrix h = to_hypermatrix(psi);
  std::array<PovmOutcome, 2> out;
  const std::array<Matrix, 2> ops{povm.m1(), povm.m2()};
  for (std::size_t i = 0; i < 2; ++i) {
    const Vector phi = mode_multiply(h, 0, ops[i]).to_vector();
    out[i].probability = phi.squaredNorm();
    if (out[i].probability >= degenerate_below) {
      out[i].state = PureState::normalized(psi.subsystems(), psi.local_dim(), phi);
    }
  }
  return out;
}

std::array<double, 2> predicted_probabilities(const PureState& psi, const TwoOutcomePovm& povm) {
  require_matching_dim(psi, povm);
  const Hypermatrix rotated = mode_multiply(to_hypermatrix(psi), 0, povm.v().adjoint());
  const MarginalWeights w =
      marginal_weights(PureState::unchecked(psi.subsystems(), psi.local_dim(), rotated.to_vector()));
  std::array<double, 2> p{0.0, 0.0};
  for (std::size_t k = 0; k < w.p.size(); ++k) {
    const double s2 = povm.sigma()[static_cast<Eigen::Index>(k)] *
                      povm.sigma()[static_cast<Eigen::Index>(k)];
    p[0] += s2 * w.p[k];
    p[1] += (1.0 - s2) * w.p[k];
  }
  return p;
}

double predicted_outcome_hdet(const PureState& psi, const TwoOutcomePovm& povm, int outcome,
                              const HdetOptions& options) {
  if (outcome != 0 && outcome != 1) {
    throw std::invalid_argument("predicted_outcome_hdet: outcome must be 0 or 1");
  }
  const auto p = predicted_probabilities(psi, povm);
  const double pi = p[static_cast<std::size_t>(outcome)];
  if (pi < kDegenerateProbability) {
    throw std::domain_error("predicted_outcome_hdet: outcome is degenerate");
  }
  const Eigen::VectorXd singular = outcome == 0 ? povm.sigma() : povm.sigma_complement();
  const double det_sigma = singular.prod();
  const double d = static_cast<double>(psi.local_dim());
  return det_sigma / std::pow(pi, d / 2.0) * measure_hdet(psi, options).value;
}

double expected_measure(const PureState& psi, const TwoOutcomePovm& povm, MeasureKind kind,
                        const HdetOptions& options) {
  if (psi.subsystems() % 2 != 0) {
    throw std::invalid_argument("expected_measure: needs an even number of subsystems");
  }
  double total = 0.0;
  for (const PovmOutcome& o : apply_povm(psi, povm)) {
    if (o.degenerate()) continue;
    total += o.probability * measure(*o.state, kind, options).value;
  }
  return total;
}

std::string TrialReport::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["n"] = n;
  j["d"] = d;
  j["measure"] = std::string(to_string(kind));
  j["measure_before"] = measure_before;
  j["expected_after"] = expected_after;
  j["margin"] = margin;
  j["pass"] = pass;
  return j.dump();
}

TrialReport monotonicity_trial(const PureState& psi, const TwoOutcomePovm& povm, MeasureKind kind,
                               const HdetOptions& options, double tolerance) {
  TrialReport r;
  r.n = psi.subsystems() / 2;
  r.d = psi.local_dim();
  r.kind = kind;
  r.measure_before = measure(psi, kind, options).value;
  r.expected_after = expected_measure(psi, povm, kind, options);
  r.margin = r.measure_before - r.expected_after;
  r.pass = r.margin >= -tolerance;
  return r;
}

TrialReport monotonicity_trial(std::uint64_t seed, std::size_t n, std::size_t d, MeasureKind kind,
                               const HdetOptions& options, double tolerance) {
  if (n == 0) throw std::invalid_argument("monotonicity_trial: n must be positive");
  Rng rng(seed);
  const PureState psi = random_haar_state(2 * n, d, rng);
  const TwoOutcomePovm povm = random_povm(d, rng);
  TrialReport r = monotonicity_trial(psi, povm, kind, options, tolerance);
  r.seed = seed;
  return r;
}

double lemma1_f(std::span<const double> alphas, std::span<const double> p, double eta) {
  require_alphas(alphas);
  require_eta(eta);
  if (p.size() != alphas.size()) {
    throw std::invalid_argument("lemma1_f: alpha and P have different lengths");
  }
  double total = 0.0;
  std::size_t nonzero = 0;
  for (double pk : p) {
    if (!(pk >= 0.0 && pk < 1.0)) throw std::invalid_argument("lemma1_f: P_k outside [0, 1)");
    total += pk;
    if (pk > 0.0) ++nonzero;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw std::invalid_argument("lemma1_f: P does not sum to 1");
  }
  if (nonzero < 2) throw std::invalid_argument("lemma1_f: need at least two nonzero P_k");

  const Products prod = products(alphas);
  double mean = 0.0;
  double complement_mean = 0.0;
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    mean += alphas[k] * p[k];
    complement_mean += (1.0 - alphas[k]) * p[k];
  }
  const double exponent = static_cast<double>(alphas.size()) / eta - 1.0;
  return ratio_term(std::pow(prod.alpha, 1.0 / eta), mean, exponent) +
         ratio_term(std::pow(prod.complement, 1.0 / eta), complement_mean, exponent);
}

double lemma1_critical_value(std::span<const double> alphas, double eta) {
  require_alphas(alphas);
  require_eta(eta);
  const double d = static_cast<double>(alphas.size());
  const Products prod = products(alphas);
  return std::pow(std::pow(prod.alpha, 1.0 / d) + std::pow(prod.complement, 1.0 / d), d / eta);
}

std::optional<double> lemma1_stationary_mean(std::span<const double> alphas) {
  require_alphas(alphas);
  const double d = static_cast<double>(alphas.size());
  const Products prod = products(alphas);
  const double g1 = std::pow(prod.alpha, 1.0 / d);
  const double g0 = std::pow(prod.complement, 1.0 / d);
  if (g1 + g0 <= 0.0) return std::nullopt;
  return g1 / (g1 + g0);
}

std::optional<std::vector<double>> lemma1_stationary_point(std::span<const double> alphas) {
  const auto target = lemma1_stationary_mean(alphas);
  if (!target || alphas.size() < 2) return std::nullopt;
  const auto [lo_it, hi_it] = std::minmax_element(alphas.begin(), alphas.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const std::size_t d = alphas.size();
  std::vector<double> p(d, 0.0);

  if (hi - lo <= 0.0) {
    std::fill(p.begin(), p.end(), 1.0 / static_cast<double>(d));
    return p;
  }
  if (*target < lo || *target > hi) return std::nullopt;

  // Put weight t on the maximal alphas and 1 - t on the minimal ones.
  const double t = (*target - lo) / (hi - lo);
  std::vector<std::size_t> low_idx, high_idx;
  for (std::size_t k = 0; k < d; ++k) {
    if (alphas[k] == lo) low_idx.push_back(k);
    if (alphas[k] == hi) high_idx.push_back(k);
  }
  for (std::size_t k : high_idx) p[k] += t / static_cast<double>(high_idx.size());
  for (std::size_t k : low_idx) p[k] += (1.0 - t) / static_cast<double>(low_idx.size());

  const auto nonzero = std::count_if(p.begin(), p.end(), [](double x) { return x > 0.0; });
  if (nonzero < 2 || *std::max_element(p.begin(), p.end()) >= 1.0) return std::nullopt;
  return p;
}

double lemma1_vertex_supremum(std::span<const double> alphas, double eta) {
  require_alphas(alphas);
  require_eta(eta);
  const double exponent = static_cast<double>(alphas.size()) / eta - 1.0;
  if (exponent < 0.0) {
    throw std::invalid_argument("lemma1_vertex_supremum: requires d / eta >= 1");
  }
  const Products prod = products(alphas);
  const double a_num = std::pow(prod.alpha, 1.0 / eta);
  const double c_num = std::pow(prod.complement, 1.0 / eta);
  double best = 0.0;
  for (double a : alphas) {
    best = std::max(best, ratio_term(a_num, a, exponent) + ratio_term(c_num, 1.0 - a, exponent));
  }
  return best;
}

}  // namespace hdetent
