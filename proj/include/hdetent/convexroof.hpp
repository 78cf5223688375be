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

#ifndef HDETENT_CONVEXROOF_HPP_
#define HDETENT_CONVEXROOF_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "hdetent/qstate.hpp"

namespace hdetent {

inline constexpr double kDensityTolerance = 1e-10;
inline constexpr double kEigenCutoff = 1e-10;

/// Mixed state of n qudits: Hermitian, unit trace, positive semi-definite,
/// each within kDensityTolerance.
class DensityMatrix {
 public:
  DensityMatrix(std::size_t n, std::size_t d, Matrix rho);
  /// Shape checks only.
  static DensityMatrix unchecked(std::size_t n, std::size_t d, Matrix rho);
  static DensityMatrix from_pure(const PureState& psi);

  std::size_t subsystems() const { return n_; }
  std::size_t local_dim() const { return d_; }
  std::size_t dim() const { return static_cast<std::size_t>(rho_.rows()); }
  const Matrix& matrix() const { return rho_; }

  struct Residuals {
    double hermiticity = 0.0;   // max |rho - rho^dagger|
    double trace = 0.0;         // |tr rho - 1|
    double min_eigenvalue = 0.0;
  };
  Residuals residuals() const;

 private:
  struct NoCheck {};
  DensityMatrix(std::size_t n, std::size_t d, Matrix rho, NoCheck);

  std::size_t n_;
  std::size_t d_;
  Matrix rho_;
};

/// Probability-weighted pure-state ensemble.
struct Decomposition {
  std::vector<double> weights;
  std::vector<PureState> states;

  std::size_t size() const { return weights.size(); }
  /// sum_i p_i |psi_i><psi_i|.
  Matrix reconstruct() const;
  /// Largest entry of |reconstruct() - rho|.
  double residual(const DensityMatrix& rho) const;
  /// sum_i p_i E(psi_i).
  double average(MeasureKind kind, const HdetOptions& options = {}) const;
};

/// Spectral decomposition, dropping eigenvalues at or below `cutoff`.
Decomposition eigen_ensemble(const DensityMatrix& rho, double cutoff = kEigenCutoff);

/// Ensemble steering: for an m x r isometry W (m >= r), member j is
/// proportional to sum_i W(j, i) sqrt(p_i) psi_i, weighted by its squared
/// norm. Members with zero weight are dropped. The density matrix is unchanged.
Decomposition steer_ensemble(const Decomposition& base, const Matrix& w);

struct RoofOptions {
  std::size_t restarts = 32;
  std::size_t iterations = 500;
  /// Ensemble size; 0 selects rank^2.
  std::size_t max_members = 0;
  std::uint64_t seed = 0;
  HdetOptions hdet;
  /// Keep the objective value after every accepted step on the requested
  /// measure (warm-up steps are not recorded).
  bool record_trace = false;
};

struct RoofEstimate {
  /// Ensemble average of `best`. Always an upper bound on the convex roof.
  double value = 0.0;
  Decomposition best;
  /// Average over the spectral ensemble, the starting point.
  double eigen_value = 0.0;
  std::size_t rank = 0;
  std::size_t members = 0;
  std::vector<double> restart_values;
  std::vector<std::vector<double>> traces;
};

/// Upper bound on min sum_i p_i E(psi_i) over decompositions of rho.
///
/// Decompositions are parametrized by isometries W acting on the spectral
/// ensemble. Each restart starts from a Haar-random W (restart 0 from the
/// spectral ensemble itself) and runs `iterations` Polak-Ribiere conjugate
/// gradient steps on the Stiefel manifold with Armijo backtracking, so
/// accepted steps never increase the objective. For |hdet| every restart is
/// preceded by `iterations` warm-up steps on |hdet|^2, which is smooth where
/// |hdet| has kinks. The smallest value over all restarts and the spectral
/// ensemble is returned.
RoofEstimate convex_roof_estimate(const DensityMatrix& rho, MeasureKind kind,
                                  const RoofOptions& options = {});

/// sum_i p_i (psi_i^1 (x) ... (x) psi_i^n)(...)^dagger. Each factor set is a
/// list of unit vectors, one per subsystem.
DensityMatrix separable_mixture(std::span<const std::vector<Vector>> factor_sets,
                                std::span<const double> weights);

/// Mixture of `rank` Haar states with uniform-simplex weights.
DensityMatrix random_density_matrix(std::size_t n, std::size_t d, std::size_t rank, Rng& rng);

/// lambda a + (1 - lambda) b.
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double lambda);

}  // namespace hdetent

#endif  // HDETENT_CONVEXROOF_HPP_
