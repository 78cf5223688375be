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

#ifndef HDETENT_LOCC_HPP_
#define HDETENT_LOCC_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdetent/qstate.hpp"

namespace hdetent {

inline constexpr double kDegenerateProbability = 1e-12;
inline constexpr double kMonotonicityTolerance = 1e-9;

/// Two-outcome local POVM in shared-right-singular-vector form:
///
///   M1 = U1 diag(sigma) V^dagger,  M2 = U2 diag(sqrt(1 - sigma^2)) V^dagger
///
/// so that M1^dagger M1 + M2^dagger M2 = I holds by construction.
class TwoOutcomePovm {
 public:
  /// Throws unless U1, U2, V are d x d unitaries (1e-10) and every sigma_k is
  /// in [0, 1].
  TwoOutcomePovm(Matrix u1, Matrix u2, Matrix v, Eigen::VectorXd sigma);

  std::size_t dim() const { return static_cast<std::size_t>(sigma_.size()); }
  const Matrix& u1() const { return u1_; }
  const Matrix& u2() const { return u2_; }
  const Matrix& v() const { return v_; }
  const Eigen::VectorXd& sigma() const { return sigma_; }
  /// sqrt(1 - sigma_k^2).
  Eigen::VectorXd sigma_complement() const;

  Matrix m1() const;
  Matrix m2() const;
  /// Largest entry of |M1^dagger M1 + M2^dagger M2 - I|.
  double completeness_residual() const;

 private:
  Matrix u1_, u2_, v_;
  Eigen::VectorXd sigma_;
};

/// Haar U1, U2, V and i.i.d. Uniform[0, 1] singular values.
TwoOutcomePovm random_povm(std::size_t d, std::uint64_t seed);
TwoOutcomePovm random_povm(std::size_t d, Rng& rng);

struct PovmOutcome {
  double probability = 0.0;
  /// Normalized post-measurement state; empty when the outcome is degenerate
  /// (probability below the threshold).
  std::optional<PureState> state;

  bool degenerate() const { return !state.has_value(); }
};

/// Applies {M1, M2} to subsystem 1 of psi:
/// p_i = ||(M_i (x) I) psi||^2, state_i = (M_i (x) I) psi / sqrt(p_i).
std::array<PovmOutcome, 2> apply_povm(const PureState& psi, const TwoOutcomePovm& povm,
                                      double degenerate_below = kDegenerateProbability);

/// Outcome probabilities from the singular values alone:
/// p_1 = sum_k sigma_k^2 P_k, p_2 = sum_k (1 - sigma_k^2) P_k, where P are the
/// marginal weights of (V^dagger (x) I) psi.
std::array<double, 2> predicted_probabilities(const PureState& psi, const TwoOutcomePovm& povm);

/// Predicted |hdet| of the normalized outcome i (0 or 1):
/// det(Sigma_i) / p_i^{d/2} * |hdet(psi)|.
double predicted_outcome_hdet(const PureState& psi, const TwoOutcomePovm& povm, int outcome,
                              const HdetOptions& options = {});

/// p_1 E(state_1) + p_2 E(state_2); degenerate outcomes contribute 0.
double expected_measure(const PureState& psi, const TwoOutcomePovm& povm, MeasureKind kind,
                        const HdetOptions& options = {});

struct TrialReport {
  std::uint64_t seed = 0;
  std::size_t n = 0;  // the state has 2n subsystems
  std::size_t d = 0;
  MeasureKind kind = MeasureKind::kHdet;
  double measure_before = 0.0;
  double expected_after = 0.0;
  double margin = 0.0;  // measure_before - expected_after
  bool pass = false;    // margin >= -tolerance

  /// One-line JSON record.
  std::string to_json() const;
};

/// Samples a Haar 2n-qudit state and a random POVM from `seed`, measures
/// before and on average after.
TrialReport monotonicity_trial(std::uint64_t seed, std::size_t n, std::size_t d, MeasureKind kind,
                               const HdetOptions& options = {},
                               double tolerance = kMonotonicityTolerance);

/// Same, for a caller-provided state and POVM.
TrialReport monotonicity_trial(const PureState& psi, const TwoOutcomePovm& povm, MeasureKind kind,
                               const HdetOptions& options = {},
                               double tolerance = kMonotonicityTolerance);

// Scalar inequality used to bound the average after a two-outcome POVM:
//
//   f_eta(P) = (prod a_k)^{1/eta} / (sum a_k P_k)^{d/eta - 1}
//            + (prod (1 - a_k))^{1/eta} / (sum (1 - a_k) P_k)^{d/eta - 1}
//
// with a_k in [0, 1], P a probability vector with every P_k < 1, eta > 0.
// With a_k = sigma_k^2 and eta = 2 (resp. 1), f is the ratio of the average
// |hdet| (resp. |hdet|^2) after the POVM to its value before.
//
// f depends on P only through x = sum a_k P_k, and for d/eta > 1 it is convex
// in x, so its stationary point is a minimum and its supremum sits at the
// simplex vertices.

/// f_eta(P). A term whose denominator base is 0 under a positive exponent is
/// 0 when its numerator is 0 and rejected otherwise.
double lemma1_f(std::span<const double> alphas, std::span<const double> p, double eta);

/// ((prod a_k)^{1/d} + (prod (1 - a_k))^{1/d})^{d/eta}.
double lemma1_critical_value(std::span<const double> alphas, double eta);

/// Stationary value of x = sum a_k P_k:
/// x* = G1 / (G1 + G0), G1 = (prod a_k)^{1/d}, G0 = (prod (1 - a_k))^{1/d}.
/// Empty when G1 + G0 = 0.
std::optional<double> lemma1_stationary_mean(std::span<const double> alphas);

/// A probability vector P* (every entry < 1, at least two nonzero) with
/// sum a_k P*_k = x*, when one exists.
std::optional<std::vector<double>> lemma1_stationary_point(std::span<const double> alphas);

/// sup of f_eta over the simplex, i.e. the largest vertex limit
/// (prod a)^{1/eta} / a_k^{d/eta - 1} + (prod (1-a))^{1/eta} / (1-a_k)^{d/eta - 1}
/// (terms with a zero base follow the lemma1_f convention). Valid for d/eta >= 1.
double lemma1_vertex_supremum(std::span<const double> alphas, double eta);

}  // namespace hdetent

#endif  // HDETENT_LOCC_HPP_
