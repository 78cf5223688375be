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

#include "hdetent/convexroof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace hdetent {

namespace {

constexpr double kIsometryTolerance = 1e-10;
constexpr double kWeightFloor = 1e-300;
constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-20;

std::size_t power(std::size_t d, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= d;
  return total;
}

// Objective over unnormalized ensemble vectors y_j (rows of Y):
//   E1: sum_j |hdet(y_j)| q_j^{1 - d/2}
//   E2: sum_j |hdet(y_j)|^2 q_j^{1 - d}
// with q_j = ||y_j||^2, which equals sum_j p_j E(y_j / sqrt(q_j)).
class EnsembleObjective {
 public:
  EnsembleObjective(Matrix x, std::size_t n, std::size_t d, MeasureKind kind, HdetOptions options)
      : x_(std::move(x)), n_(n), d_(d), kind_(kind), options_(options) {}

  double value(const Matrix& w) const {
    const Matrix y = w * x_;
    double total = 0.0;
    for (Eigen::Index j = 0; j < y.rows(); ++j) {
      const Vector row = y.row(j).transpose();
      const double q = row.squaredNorm();
      if (q < kWeightFloor) continue;
      const double h = std::abs(hdet_even(row_hypermatrix(row), options_));
      total += term(h, q);
    }
    return total;
  }

  // Wirtinger derivative d objective / d conj(W).
  Matrix gradient(const Matrix& w) const {
    const Matrix y = w * x_;
    Matrix dy = Matrix::Zero(y.rows(), y.cols());
    const double dd = static_cast<double>(d_);
    for (Eigen::Index j = 0; j < y.rows(); ++j) {
      const Vector row = y.row(j).transpose();
      const double q = row.squaredNorm();
      if (q < kWeightFloor) continue;
      const HdetGradient hg = hdet_with_gradient(row_hypermatrix(row), options_);
      const double h = std::abs(hg.value);
      const Vector g = hg.gradient.to_vector().conjugate();
      Vector dj;
      if (kind_ == MeasureKind::kHdet) {
        dj = h * (1.0 - dd / 2.0) * std::pow(q, -dd / 2.0) * row;
        if (h > 0.0) dj += std::pow(q, 1.0 - dd / 2.0) * hg.value / (2.0 * h) * g;
      } else {
        dj = h * h * (1.0 - dd) * std::pow(q, -dd) * row + std::pow(q, 1.0 - dd) * hg.value * g;
      }
      dy.row(j) = dj.transpose();
    }
    return dy * x_.adjoint();
  }

 private:
  Hypermatrix row_hypermatrix(const Vector& row) const {
    return Hypermatrix(Shape::cuboid(n_, d_), std::vector<Complex>(row.data(), row.data() + row.size()));
  }

  double term(double h, double q) const {
    const double dd = static_cast<double>(d_);
    return kind_ == MeasureKind::kHdet ? h * std::pow(q, 1.0 - dd / 2.0)
                                       : h * h * std::pow(q, 1.0 - dd);
  }

  Matrix x_;
  std::size_t n_;
  std::size_t d_;
  MeasureKind kind_;
  HdetOptions options_;
};

// Closest isometry (polar factor).
Matrix retract(const Matrix& z) {
  Eigen::JacobiSVD<Matrix> svd(z, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

struct RefineResult {
  Matrix w;
  double value;
};

// Tangent projection at the isometry w: z - w sym(w^dagger z).
Matrix project_tangent(const Matrix& w, const Matrix& z) {
  const Matrix wz = w.adjoint() * z;
  return z - w * ((wz + wz.adjoint()) / 2.0);
}

double inner(const Matrix& a, const Matrix& b) { return (a.adjoint() * b).trace().real(); }

// Polak-Ribiere conjugate gradients with Armijo backtracking. Directions are
// carried between iterates by tangent projection and reset to steepest
// descent whenever they stop being descent directions.
RefineResult refine(const EnsembleObjective& objective, Matrix w, std::size_t iterations,
                    std::vector<double>* trace) {
  double f = objective.value(w);
  double step = 1.0;
  if (trace) trace->push_back(f);
  Matrix xi_prev;
  Matrix dir;
  for (std::size_t it = 0; it < iterations && f > 0.0; ++it) {
    const Matrix xi = project_tangent(w, objective.gradient(w));
    const double xi_norm = xi.squaredNorm();
    if (!(xi_norm > 0.0) || !std::isfinite(xi_norm)) break;
    if (dir.size() == 0) {
      dir = -xi;
    } else {
      const Matrix carried = project_tangent(w, dir);
      const double beta = std::max(0.0, inner(xi, xi - project_tangent(w, xi_prev)) / xi_prev.squaredNorm());
      dir = -xi + beta * carried;
    }
    double slope = -inner(xi, dir);
    if (!(slope > 0.0)) {
      dir = -xi;
      slope = xi_norm;
    }

    step *= 2.0;
    bool accepted = false;
    while (step > kMinStep) {
      Matrix candidate = retract(w + step * dir);
      const double fc = objective.value(candidate);
      if (fc <= f - kArmijo * step * slope) {
        w = std::move(candidate);
        f = fc;
        accepted = true;
        break;
      }
      step /= 2.0;
    }
    if (!accepted) {
      if (dir.isApprox(-xi)) break;
      // Retry from steepest descent before giving up.
      dir.resize(0, 0);
      step = 1.0;
      continue;
    }
    xi_prev = xi;
    if (trace) trace->push_back(f);
  }
  return {std::move(w), f};
}

}  // namespace

DensityMatrix::DensityMatrix(std::size_t n, std::size_t d, Matrix rho, NoCheck)
    : n_(n), d_(d), rho_(std::move(rho)) {
  if (n == 0 || d < 2) throw std::invalid_argument("DensityMatrix: need n >= 1, d >= 2");
  const std::size_t dim = power(d, n);
  if (static_cast<std::size_t>(rho_.rows()) != dim || static_cast<std::size_t>(rho_.cols()) != dim) {
    throw std::invalid_argument("DensityMatrix: expected a " + std::to_string(dim) + " x " +
                                std::to_string(dim) + " matrix");
  }
}

DensityMatrix::DensityMatrix(std::size_t n, std::size_t d, Matrix rho)
    : DensityMatrix(n, d, std::move(rho), NoCheck{}) {
  const Residuals r = residuals();
  if (r.hermiticity > kDensityTolerance) {
    throw std::invalid_argument("DensityMatrix: not Hermitian (residual " +
                                std::to_string(r.hermiticity) + ")");
  }
  if (r.trace > kDensityTolerance) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1 by " + std::to_string(r.trace));
  }
  if (r.min_eigenvalue < -kDensityTolerance) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(r.min_eigenvalue));
  }
}

DensityMatrix DensityMatrix::unchecked(std::size_t n, std::size_t d, Matrix rho) {
  return DensityMatrix(n, d, std::move(rho), NoCheck{});
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.subsystems(), psi.local_dim(),
                       psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix::Residuals DensityMatrix::residuals() const {
  Residuals r;
  r.hermiticity = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  r.trace = std::abs(rho_.trace() - Complex{1.0, 0.0});
  const Matrix herm = (rho_ + rho_.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = eig.eigenvalues().minCoeff();
  return r;
}

Matrix Decomposition::reconstruct() const {
  if (states.empty()) throw std::invalid_argument("Decomposition: empty ensemble");
  const auto dim = static_cast<Eigen::Index>(states[0].dimension());
  Matrix rho = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < states.size(); ++i) {
    rho.noalias() += weights[i] * states[i].amplitudes() * states[i].amplitudes().adjoint();
  }
  return rho;
}

double Decomposition::residual(const DensityMatrix& rho) const {
  return (reconstruct() - rho.matrix()).cwiseAbs().maxCoeff();
}

double Decomposition::average(MeasureKind kind, const HdetOptions& options) const {
  double total = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    total += weights[i] * measure(states[i], kind, options).value;
  }
  return total;
}

Decomposition eigen_ensemble(const DensityMatrix& rho, double cutoff) {
  const Matrix herm = (rho.matrix() + rho.matrix().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(herm);
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigen_ensemble: eigensolver failed");
  Decomposition out;
  // Largest eigenvalues first.
  for (Eigen::Index k = eig.eigenvalues().size(); k-- > 0;) {
    const double lambda = eig.eigenvalues()[k];
    if (lambda <= cutoff) continue;
    out.weights.push_back(lambda);
    out.states.push_back(
        PureState::normalized(rho.subsystems(), rho.local_dim(), eig.eigenvectors().col(k)));
  }
  if (out.states.empty()) throw std::invalid_argument("eigen_ensemble: density matrix has rank 0");
  return out;
}

Decomposition steer_ensemble(const Decomposition& base, const Matrix& w) {
  const auto r = static_cast<Eigen::Index>(base.size());
  if (r == 0) throw std::invalid_argument("steer_ensemble: empty base ensemble");
  if (w.cols() != r || w.rows() < r) {
    throw std::invalid_argument("steer_ensemble: W must be m x r with m >= r");
  }
  const double residual = (w.adjoint() * w - Matrix::Identity(r, r)).cwiseAbs().maxCoeff();
  if (residual > kIsometryTolerance) {
    throw std::invalid_argument("steer_ensemble: W is not an isometry (residual " +
                                std::to_string(residual) + ")");
  }
  const std::size_t n = base.states[0].subsystems();
  const std::size_t d = base.states[0].local_dim();
  Matrix x(r, static_cast<Eigen::Index>(base.states[0].dimension()));
  for (Eigen::Index i = 0; i < r; ++i) {
    x.row(i) = std::sqrt(base.weights[static_cast<std::size_t>(i)]) *
               base.states[static_cast<std::size_t>(i)].amplitudes().transpose();
  }
  const Matrix y = w * x;
  Decomposition out;
  for (Eigen::Index j = 0; j < y.rows(); ++j) {
    const double q = y.row(j).squaredNorm();
    if (q < kWeightFloor) continue;
    out.weights.push_back(q);
    out.states.push_back(PureState::normalized(n, d, y.row(j).transpose()));
  }
  return out;
}

RoofEstimate convex_roof_estimate(const DensityMatrix& rho, MeasureKind kind,
                                  const RoofOptions& options) {
  if (options.restarts == 0 || options.iterations == 0) {
    throw std::invalid_argument("convex_roof_estimate: restart and iteration budgets must be positive");
  }
  if (rho.subsystems() % 2 != 0) {
    throw std::invalid_argument("convex_roof_estimate: needs an even number of subsystems");
  }
  const Decomposition base = eigen_ensemble(rho);
  const std::size_t r = base.size();
  const std::size_t m = options.max_members == 0 ? r * r : options.max_members;
  if (m < r) throw std::invalid_argument("convex_roof_estimate: max_members is below the rank");

  Matrix x(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(rho.dim()));
  for (std::size_t i = 0; i < r; ++i) {
    x.row(static_cast<Eigen::Index>(i)) =
        std::sqrt(base.weights[i]) * base.states[i].amplitudes().transpose();
  }
  const EnsembleObjective objective(x, rho.subsystems(), rho.local_dim(), kind, options.hdet);
  // |hdet| is not differentiable where it vanishes; its restarts first descend
  // on the smooth squared measure.
  const EnsembleObjective warmup(x, rho.subsystems(), rho.local_dim(), MeasureKind::kTangle, options.hdet);
  const std::size_t warmup_iterations = kind == MeasureKind::kHdet ? options.iterations : 0;

  RoofEstimate est;
  est.rank = r;
  est.members = m;
  est.eigen_value = base.average(kind, options.hdet);

  const auto em = static_cast<Eigen::Index>(m);
  const auto er = static_cast<Eigen::Index>(r);
  Matrix best_w = Matrix::Identity(em, er);
  double best_value = objective.value(best_w);

  for (std::size_t k = 0; k < options.restarts; ++k) {
    Matrix start;
    if (k == 0) {
      start = Matrix::Identity(em, er);
    } else {
      Rng rng(derive_seed(options.seed, k));
      start = haar_isometry(m, r, rng);
    }
    std::vector<double>* trace = nullptr;
    if (options.record_trace) trace = &est.traces.emplace_back();
    if (warmup_iterations > 0) start = refine(warmup, std::move(start), warmup_iterations, nullptr).w;
    RefineResult res = refine(objective, std::move(start), options.iterations, trace);
    est.restart_values.push_back(res.value);
    if (res.value < best_value) {
      best_value = res.value;
      best_w = std::move(res.w);
    }
  }

  est.best = steer_ensemble(base, best_w);
  est.value = est.best.average(kind, options.hdet);
  if (est.value > est.eigen_value) {
    // Rounding in the re-evaluation can nudge past the start; fall back.
    est.best = base;
    est.value = est.eigen_value;
  }
  return est;
}

DensityMatrix separable_mixture(std::span<const std::vector<Vector>> factor_sets,
                                std::span<const double> weights) {
  if (factor_sets.empty() || factor_sets.size() != weights.size()) {
    throw std::invalid_argument("separable_mixture: need one weight per factor set");
  }
  double total = 0.0;
  for (double p : weights) {
    if (!(p >= 0.0)) throw std::invalid_argument("separable_mixture: negative weight");
    total += p;
  }
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw std::invalid_argument("separable_mixture: weights do not sum to 1");
  }
  std::optional<Matrix> rho;
  std::size_t n = 0, d = 0;
  for (std::size_t i = 0; i < factor_sets.size(); ++i) {
    const PureState psi = product_state(factor_sets[i]);
    if (!rho) {
      n = psi.subsystems();
      d = psi.local_dim();
      rho = Matrix::Zero(static_cast<Eigen::Index>(psi.dimension()),
                         static_cast<Eigen::Index>(psi.dimension()));
    } else if (psi.subsystems() != n || psi.local_dim() != d) {
      throw std::invalid_argument("separable_mixture: factor sets describe different systems");
    }
    rho->noalias() += weights[i] * psi.amplitudes() * psi.amplitudes().adjoint();
  }
  return DensityMatrix(n, d, std::move(*rho));
}

DensityMatrix random_density_matrix(std::size_t n, std::size_t d, std::size_t rank, Rng& rng) {
  if (rank == 0) throw std::invalid_argument("random_density_matrix: rank must be positive");
  const std::vector<double> p = uniform_simplex(rank, rng);
  Matrix rho;
  for (std::size_t i = 0; i < rank; ++i) {
    const PureState psi = random_haar_state(n, d, rng);
    if (i == 0) rho = Matrix::Zero(static_cast<Eigen::Index>(psi.dimension()),
                                   static_cast<Eigen::Index>(psi.dimension()));
    rho.noalias() += p[i] * psi.amplitudes() * psi.amplitudes().adjoint();
  }
  return DensityMatrix(n, d, std::move(rho));
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw std::invalid_argument("mix: lambda outside [0, 1]");
  if (a.subsystems() != b.subsystems() || a.local_dim() != b.local_dim()) {
    throw std::invalid_argument("mix: density matrices describe different systems");
  }
  return DensityMatrix(a.subsystems(), a.local_dim(),
                       lambda * a.matrix() + (1.0 - lambda) * b.matrix());
}

}  // namespace hdetent
