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

#ifndef HDETENT_QSTATE_HPP_
#define HDETENT_QSTATE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hdetent/hyperdet.hpp"
#include "hdetent/hypermatrix.hpp"
#include "hdetent/random.hpp"

namespace hdetent {

inline constexpr double kNormTolerance = 1e-9;

/// Pure state of n qudits of local dimension d. Amplitude (i_1, ..., i_n) is
/// stored at the row-major offset of that multi-index, i.e. the usual
/// Kronecker ordering with subsystem 1 most significant.
class PureState {
 public:
  /// Throws if the amplitude count is not d^n or the squared norm is off by more than
  /// kNormTolerance.
  PureState(std::size_t n, std::size_t d, Vector amplitudes);

  /// Same size checks, no normalization check. Used for file input with the
  /// check disabled.
  static PureState unchecked(std::size_t n, std::size_t d, Vector amplitudes);
  /// Rescales to unit norm; throws on the zero vector.
  static PureState normalized(std::size_t n, std::size_t d, Vector amplitudes);

  std::size_t subsystems() const { return n_; }
  std::size_t local_dim() const { return d_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  struct NoCheck {};
  PureState(std::size_t n, std::size_t d, Vector amplitudes, NoCheck);

  std::size_t n_;
  std::size_t d_;
  Vector amplitudes_;
};

/// H: order-n cuboid hypermatrix with side d holding the amplitudes.
Hypermatrix to_hypermatrix(const PureState& psi);
/// Inverse of H. Requires a cuboid with side >= 2 and unit Frobenius norm.
PureState from_hypermatrix(const Hypermatrix& a);

/// psi^1 (x) ... (x) psi^k. Each factor must have the same dimension and unit norm.
PureState product_state(std::span<const Vector> factors);

/// Kronecker product M_1 (x) ... (x) M_k.
Matrix kronecker(std::span<const Matrix> factors);

/// (M_1 (x) ... (x) M_n) psi computed through the hypermatrix route
/// (M_1, ..., M_n) * H(psi). The result is renormalized and must be nonzero.
PureState apply_local(const PureState& psi, std::span<const Matrix> ops);

enum class MeasureKind {
  kHdet,    // |hdet|
  kTangle,  // |hdet|^2
};

std::string_view to_string(MeasureKind kind);
/// Accepts "hdet"/"e1" and "tangle"/"e2".
MeasureKind parse_measure_kind(std::string_view name);

struct MeasureResult {
  double value = 0.0;
  /// Set when the state has an odd number of subsystems; value is then 0.
  bool odd_order = false;
};

MeasureResult measure_hdet(const PureState& psi, const HdetOptions& options = {});
MeasureResult measure_tangle(const PureState& psi, const HdetOptions& options = {});
MeasureResult measure(const PureState& psi, MeasureKind kind, const HdetOptions& options = {});

/// |psi^T sigma_y^{(x)N} psi| for N qubits (N even), evaluated without
/// forming the 2^N x 2^N operator.
double concurrence_qubits(const PureState& psi);
/// Square of concurrence_qubits.
double n_tangle_qubits(const PureState& psi);

/// Qubit normalizations of the raw measures: 2|hdet| and 4|hdet|^2.
double concurrence_from_hdet(const PureState& psi, const HdetOptions& options = {});
double n_tangle_from_hdet(const PureState& psi, const HdetOptions& options = {});

/// sigma_y (x) ... (x) sigma_y with `count` factors.
Matrix pauli_y_power(std::size_t count);

inline constexpr std::size_t kDefaultEntHatGuard = 4;

/// Symmetric matrix M of the quadratic form psi^T M psi = hdet(H(psi)) on 2n
/// qubits, assembled term by term from the even-order hdet sum.
Matrix ent_hat_matrix(std::size_t n, std::size_t guard = kDefaultEntHatGuard);

struct MarginalWeights {
  /// p[k] = squared norm of the k-th slice along subsystem 1.
  std::vector<double> p;
};

MarginalWeights marginal_weights(const PureState& psi);

inline constexpr std::size_t kDefaultAmplitudeBudget = std::size_t{1} << 24;

PureState random_haar_state(std::size_t n, std::size_t d, std::uint64_t seed,
                            std::size_t max_amplitudes = kDefaultAmplitudeBudget);
PureState random_haar_state(std::size_t n, std::size_t d, Rng& rng,
                            std::size_t max_amplitudes = kDefaultAmplitudeBudget);

/// n Haar-random unit vectors of dimension d, suitable for product_state.
std::vector<Vector> random_product_factors(std::size_t n, std::size_t d, Rng& rng);

/// GHZ state (|0...0> + ... + |d-1...d-1>)/sqrt(d) on n subsystems.
PureState ghz_state(std::size_t n, std::size_t d);

}  // namespace hdetent

#endif  // HDETENT_QSTATE_HPP_
