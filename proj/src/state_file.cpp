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

#include "hdetent/state_file.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace hdetent {

namespace {

constexpr const char* kMagic = "hdetent-state";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw StateFileError("line " + std::to_string(line) + ": cannot parse number '" +
                         std::string(token) + "'");
  }
  return value;
}

std::size_t parse_size(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
    throw StateFileError("line " + std::to_string(line) + ": expected a positive integer, got '" +
                         token + "'");
  }
  return value;
}

std::size_t expected_payload(const StateFile& f) {
  std::size_t dim = 1;
  for (std::size_t k = 0; k < f.n; ++k) {
    if (dim > (std::size_t{1} << 30) / f.d) throw StateFileError("state dimension is too large");
    dim *= f.d;
  }
  return f.kind == StateKind::kPure ? dim : dim * dim;
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general,
                                       std::numeric_limits<double>::max_digits10);
  return std::string(buf, ptr);
}

}  // namespace

StateFile read_state_file(std::istream& in) {
  StateFile f;
  bool magic = false, have_n = false, have_d = false, have_kind = false, in_data = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream tokens(line);
    if (in_data) {
      std::string re, im, extra;
      if (!(tokens >> re >> im) || (tokens >> extra)) {
        throw StateFileError("line " + std::to_string(line_no) + ": expected 're im'");
      }
      f.payload.emplace_back(parse_double(re, line_no), parse_double(im, line_no));
      continue;
    }
    std::string key, value;
    tokens >> key;
    tokens >> value;
    if (key == kMagic) {
      if (value != "1") throw StateFileError("unsupported state file version '" + value + "'");
      magic = true;
    } else if (key == "n") {
      f.n = parse_size(value, line_no);
      have_n = true;
    } else if (key == "d") {
      f.d = parse_size(value, line_no);
      have_d = true;
    } else if (key == "kind") {
      if (value == "pure") {
        f.kind = StateKind::kPure;
      } else if (value == "mixed") {
        f.kind = StateKind::kMixed;
      } else {
        throw StateFileError("line " + std::to_string(line_no) + ": unknown kind '" + value + "'");
      }
      have_kind = true;
    } else if (key == "data") {
      in_data = true;
    } else {
      throw StateFileError("line " + std::to_string(line_no) + ": unknown header key '" + key + "'");
    }
  }
  if (!magic) throw StateFileError("missing 'hdetent-state 1' header");
  if (!have_n || !have_d || !have_kind) throw StateFileError("header must define n, d and kind");
  if (!in_data) throw StateFileError("missing 'data' section");
  if (f.d < 2) throw StateFileError("local dimension d must be at least 2");
  const std::size_t expected = expected_payload(f);
  if (f.payload.size() != expected) {
    throw StateFileError("payload has " + std::to_string(f.payload.size()) + " entries, expected " +
                         std::to_string(expected));
  }
  return f;
}

StateFile load_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StateFileError("cannot open '" + path.string() + "'");
  return read_state_file(in);
}

void write_state_file(std::ostream& out, const StateFile& file) {
  out << kMagic << " 1\n"
      << "n " << file.n << "\n"
      << "d " << file.d << "\n"
      << "kind " << (file.kind == StateKind::kPure ? "pure" : "mixed") << "\n"
      << "data\n";
  for (const Complex& z : file.payload) {
    out << format_double(z.real()) << ' ' << format_double(z.imag()) << '\n';
  }
}

void save_state_file(const std::filesystem::path& path, const StateFile& file) {
  std::ofstream out(path);
  if (!out) throw StateFileError("cannot write '" + path.string() + "'");
  write_state_file(out, file);
  if (!out) throw StateFileError("write to '" + path.string() + "' failed");
}

PureState to_pure_state(const StateFile& file, bool check) {
  if (file.kind != StateKind::kPure) throw StateFileError("expected a pure state file");
  Vector amps = Eigen::Map<const Vector>(file.payload.data(),
                                         static_cast<Eigen::Index>(file.payload.size()));
  if (check && std::abs(amps.squaredNorm() - 1.0) > kFileTolerance) {
    throw StateFileError("amplitudes are not normalized (squared norm " +
                         format_double(amps.squaredNorm()) + ")");
  }
  return PureState::unchecked(file.n, file.d, std::move(amps));
}

DensityMatrix to_density_matrix(const StateFile& file, bool check) {
  if (file.kind != StateKind::kMixed) throw StateFileError("expected a mixed state file");
  const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(file.payload.size())));
  Matrix rho(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      rho(r, c) = file.payload[static_cast<std::size_t>(r * dim + c)];
    }
  }
  DensityMatrix out = DensityMatrix::unchecked(file.n, file.d, std::move(rho));
  if (check) {
    const auto res = out.residuals();
    if (res.hermiticity > kFileTolerance) throw StateFileError("density matrix is not Hermitian");
    if (res.trace > kFileTolerance) throw StateFileError("density matrix trace is not 1");
    if (res.min_eigenvalue < -kFileTolerance) {
      throw StateFileError("density matrix has a negative eigenvalue");
    }
  }
  return out;
}

StateFile to_state_file(const PureState& psi) {
  StateFile f;
  f.n = psi.subsystems();
  f.d = psi.local_dim();
  f.kind = StateKind::kPure;
  f.payload.assign(psi.amplitudes().data(), psi.amplitudes().data() + psi.amplitudes().size());
  return f;
}

StateFile to_state_file(const DensityMatrix& rho) {
  StateFile f;
  f.n = rho.subsystems();
  f.d = rho.local_dim();
  f.kind = StateKind::kMixed;
  const Matrix& m = rho.matrix();
  f.payload.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) f.payload.push_back(m(r, c));
  }
  return f;
}

}  // namespace hdetent
