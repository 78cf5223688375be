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

// Text state files.
//
//   # comment lines are ignored
//   hdetent-state 1
//   n 4
//   d 2
//   kind pure
//   data
//   0.70710678118654757 0
//   ...
//
// `n` is the number of subsystems and `d` the local dimension. The payload
// has one "re im" pair per line in row-major order: d^n amplitudes for a pure
// state, d^n x d^n matrix entries for a mixed one. Values are written with 17
// significant digits so that every finite double reads back bit-for-bit.

#ifndef HDETENT_STATE_FILE_HPP_
#define HDETENT_STATE_FILE_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "hdetent/convexroof.hpp"
#include "hdetent/qstate.hpp"

namespace hdetent {

class StateFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class StateKind { kPure, kMixed };

struct StateFile {
  std::size_t n = 0;
  std::size_t d = 0;
  StateKind kind = StateKind::kPure;
  std::vector<Complex> payload;
};

/// Parses and checks the payload length. Throws StateFileError.
StateFile read_state_file(std::istream& in);
StateFile load_state_file(const std::filesystem::path& path);

void write_state_file(std::ostream& out, const StateFile& file);
void save_state_file(const std::filesystem::path& path, const StateFile& file);

inline constexpr double kFileTolerance = 1e-9;

/// Converts to a PureState. With `check` the squared norm must be within
/// kFileTolerance of 1.
PureState to_pure_state(const StateFile& file, bool check = true);
/// Converts to a DensityMatrix. With `check` Hermiticity, unit trace and
/// positivity are enforced to kFileTolerance.
DensityMatrix to_density_matrix(const StateFile& file, bool check = true);

StateFile to_state_file(const PureState& psi);
StateFile to_state_file(const DensityMatrix& rho);

}  // namespace hdetent

#endif  // HDETENT_STATE_FILE_HPP_
