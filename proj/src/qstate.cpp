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

#include "hdetent/qstate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hdetent {

namespace {

std::size_t checked_power(std::size_t d, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (total > std::numeric_limits<std::size_t>::max() / d) {
      throw std::overflow_error("d^n overflows");
    }
    total *= d;
  }
  return total;
}

void require_qubits(const PureState& psi, const char* what) {
  if (psi.local_dim() != 2) {
    throw std::invalid_argument(std::string(what) + ": requires qubits (d = 2), got d = " +
                                std::to_string(psi.local_dim()));
  }
}

}  // namespace

PureState::PureState(std::size_t n, std::size_t d, Vector amplitudes, NoCheck)
    : n_(n), d_(d), amplitudes_(std::move(amplitudes)) {
  if (n == 0) throw std::invalid_argument("PureState: need at least one subsystem");
  if (d < 2) throw std::invalid_argument("PureState: local dimension must be at least 2");
  if (static_cast<std::size_t>(amplitudes_.size()) != checked_power(d, n)) {
    throw std::invalid_argument("PureState: expected " + std::to_string(checked_power(d, n)) +
                                " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
}

PureState::PureState(std::size_t n, std::size_t d, Vector amplitudes)
    : PureState(n, d, std::move(amplitudes), NoCheck{}) {
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw std::invalid_argument("PureState: squared norm " + std::to_string(norm2) +
                                " is not 1");
  }
}

PureState PureState::unchecked(std::size_t n, std::size_t d, Vector amplitudes) {
  return PureState(n, d, std::move(amplitudes), NoCheck{});
}

PureState PureState::normalized(std::size_t n, std::size_t d, Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("PureState::normalized: vector has zero or non-finite norm");
  }
  amplitudes /= norm;
  return PureState(n, d, std::move(amplitudes), NoCheck{});
}

Hypermatrix to_hypermatrix(const PureState& psi) {
  const Vector& amps = psi.amplitudes();
  return Hypermatrix(Shape::cuboid(psi.subsystems(), psi.local_dim()),
                     std::vector<Complex>(amps.data(), amps.data() + amps.size()));
}

PureState from_hypermatrix(const Hypermatrix& a) {
  if (!a.shape().is_cuboid()) {
    throw std::invalid_argument("from_hypermatrix: hypermatrix is not cuboid");
  }
  return PureState(a.order(), a.shape().dim(0), a.to_vector());
}

PureState product_state(std::span<const Vector> factors) {
  if (factors.empty()) throw std::invalid_argument("product_state: no factors");
  const auto d = static_cast<std::size_t>(factors[0].size());
  Vector amps = Vector::Ones(1);
  for (const Vector& f : factors) {
    if (static_cast<std::size_t>(f.size()) != d) {
      throw std::invalid_argument("product_state: factors have different dimensions");
    }
    if (std::abs(f.squaredNorm() - 1.0) > kNormTolerance) {
      throw std::invalid_argument("product_state: factor is not a unit vector");
    }
    Vector next(amps.size() * f.size());
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      next.segment(i * f.size(), f.size()) = amps[i] * f;
    }
    amps = std::move(next);
  }
  return PureState(factors.size(), d, std::move(amps));
}

Matrix kronecker(std::span<const Matrix> factors) {
  Matrix out = Matrix::Identity(1, 1);
  for (const Matrix& f : factors) {
    Matrix next(out.rows() * f.rows(), out.cols() * f.cols());
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block(r * f.rows(), c * f.cols(), f.rows(), f.cols()) = out(r, c) * f;
      }
    }
    out = std::move(next);
  }
  return out;
}

PureState apply_local(const PureState& psi, std::span<const Matrix> ops) {
  const Hypermatrix out = multilinear_multiply(ops, to_hypermatrix(psi));
  if (!out.shape().is_cuboid()) {
    throw std::invalid_argument("apply_local: operators change the local dimensions unevenly");
  }
  return PureState::normalized(out.order(), out.shape().dim(0), out.to_vector());
}

std::string_view to_string(MeasureKind kind) {
  return kind == MeasureKind::kHdet ? "hdet" : "tangle";
}

MeasureKind parse_measure_kind(std::string_view name) {
  if (name == "hdet" || name == "e1" || name == "E1") return MeasureKind::kHdet;
  if (name == "tangle" || name == "e2" || name == "E2") return MeasureKind::kTangle;
  throw std::invalid_argument("unknown measure '" + std::string(name) +
                              "' (expected hdet|tangle)");
}

MeasureResult measure_hdet(const PureState& psi, const HdetOptions& options) {
  if (psi.subsystems() % 2 != 0) return {0.0, true};
  return {std::abs(hdet_even(to_hypermatrix(psi), options)), false};
}

MeasureResult measure_tangle(const PureState& psi, const HdetOptions& options) {
  MeasureResult r = measure_hdet(psi, options);
  r.value *= r.value;
  return r;
}

MeasureResult measure(const PureState& psi, MeasureKind kind, const HdetOptions& options) {
  return kind == MeasureKind::kHdet ? measure_hdet(psi, options) : measure_tangle(psi, options);
}

double concurrence_qubits(const PureState& psi) {
  require_qubits(psi, "concurrence_qubits");
  if (psi.subsystems() % 2 != 0) {
    throw std::invalid_argument("concurrence_qubits: needs an even number of qubits");
  }
  const std::size_t n = psi.subsystems();
  const std::size_t mask = psi.dimension() - 1;
  const Vector& a = psi.amplitudes();
  // (sigma_y^{(x)n})_{x, ~x} = prod_k (x_k == 0 ? -i : +i); every other entry is 0.
  Complex total{0.0, 0.0};
  for (std::size_t x = 0; x <= mask; ++x) {
    Complex factor{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      factor *= ((x >> k) & 1U) ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
    }
    total += a[static_cast<Eigen::Index>(x)] * factor * a[static_cast<Eigen::Index>(x ^ mask)];
  }
  return std::abs(total);
}

double n_tangle_qubits(const PureState& psi) {
  const double c = concurrence_qubits(psi);
  return c * c;
}

double concurrence_from_hdet(const PureState& psi, const HdetOptions& options) {
  require_qubits(psi, "concurrence_from_hdet");
  return 2.0 * measure_hdet(psi, options).value;
}

double n_tangle_from_hdet(const PureState& psi, const HdetOptions& options) {
  require_qubits(psi, "n_tangle_from_hdet");
  return 4.0 * measure_tangle(psi, options).value;
}

Matrix pauli_y_power(std::size_t count) {
  Matrix sy(2, 2);
  sy << Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0};
  const std::vector<Matrix> factors(count, sy);
  return kronecker(factors);
}

Matrix ent_hat_matrix(std::size_t n, std::size_t guard) {
  if (n == 0) throw std::invalid_argument("ent_hat_matrix: n must be positive");
  if (n > guard) {
    throw std::invalid_argument("ent_hat_matrix: n = " + std::to_string(n) +
                                " exceeds the size guard " + std::to_string(guard));
  }
  const std::size_t order = 2 * n;
  const Shape shape = Shape::cuboid(order, 2);
  const auto perms = enumerate_signed_permutations(2);
  const auto dim = static_cast<Eigen::Index>(shape.size());
  Matrix m = Matrix::Zero(dim, dim);

  // Each term of the even-order sum with d = 2 is sign * A[x] * A[y] where x
  // and y are the index tuples for j = 0 and j = 1. Splitting the coefficient
  // evenly between (x, y) and (y, x) gives the symmetric form.
  std::vector<std::size_t> choice(order - 1, 0);
  std::vector<std::size_t> x(order), y(order);
  while (true) {
    int sign = 1;
    x[0] = 0;
    y[0] = 1;
    for (std::size_t k = 1; k < order; ++k) {
      const SignedPermutation& p = perms[choice[k - 1]];
      x[k] = p.mapping[0];
      y[k] = p.mapping[1];
      sign *= p.parity;
    }
    const auto ox = static_cast<Eigen::Index>(shape.offset(x));
    const auto oy = static_cast<Eigen::Index>(shape.offset(y));
    m(ox, oy) += 0.5 * sign;
    m(oy, ox) += 0.5 * sign;

    std::size_t k = choice.size();
    while (k > 0 && ++choice[k - 1] == perms.size()) {
      choice[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return m;
}

MarginalWeights marginal_weights(const PureState& psi) {
  const std::size_t d = psi.local_dim();
  const std::size_t block = psi.dimension() / d;
  MarginalWeights w;
  w.p.assign(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    w.p[k] = psi.amplitudes()
                 .segment(static_cast<Eigen::Index>(k * block), static_cast<Eigen::Index>(block))
                 .squaredNorm();
  }
  return w;
}

PureState random_haar_state(std::size_t n, std::size_t d, Rng& rng, std::size_t max_amplitudes) {
  if (n == 0 || d < 2) throw std::invalid_argument("random_haar_state: need n >= 1, d >= 2");
  std::size_t size = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (size > max_amplitudes / d) {
      throw std::invalid_argument("random_haar_state: d^n exceeds the amplitude budget of " +
                                  std::to_string(max_amplitudes));
    }
    size *= d;
  }
  return PureState::normalized(n, d, complex_gaussian_vector(size, rng));
}

PureState random_haar_state(std::size_t n, std::size_t d, std::uint64_t seed,
                            std::size_t max_amplitudes) {
  Rng rng(seed);
  return random_haar_state(n, d, rng, max_amplitudes);
}

std::vector<Vector> random_product_factors(std::size_t n, std::size_t d, Rng& rng) {
  std::vector<Vector> factors;
  factors.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Vector v = complex_gaussian_vector(d, rng);
    factors.push_back(v / v.norm());
  }
  return factors;
}

PureState ghz_state(std::size_t n, std::size_t d) {
  if (n == 0 || d < 2) throw std::invalid_argument("ghz_state: need n >= 1, d >= 2");
  const std::size_t size = checked_power(d, n);
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(size));
  // Offset of (k, k, ..., k) is k * (d^n - 1) / (d - 1).
  const std::size_t step = (size - 1) / (d - 1);
  for (std::size_t k = 0; k < d; ++k) {
    amps[static_cast<Eigen::Index>(k * step)] = 1.0 / std::sqrt(static_cast<double>(d));
  }
  return PureState(n, d, std::move(amps));
}

}  // namespace hdetent
