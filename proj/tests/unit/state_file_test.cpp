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

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

namespace hdetent {
namespace {

StateFile parse(const std::string& text) {
  std::istringstream in(text);
  return read_state_file(in);
}

std::string write(const StateFile& f) {
  std::ostringstream out;
  write_state_file(out, f);
  return out.str();
}

TEST(StateFile, PureRoundTripIsExact) {
  Rng rng(1);
  const PureState psi = random_haar_state(4, 2, rng);
  const StateFile back = parse(write(to_state_file(psi)));
  EXPECT_EQ(back.n, 4u);
  EXPECT_EQ(back.d, 2u);
  EXPECT_EQ(back.kind, StateKind::kPure);
  const PureState again = to_pure_state(back);
  EXPECT_EQ(again.amplitudes(), psi.amplitudes());
}

TEST(StateFile, MixedRoundTripIsExact) {
  Rng rng(2);
  const DensityMatrix rho = random_density_matrix(2, 3, 4, rng);
  const StateFile back = parse(write(to_state_file(rho)));
  EXPECT_EQ(back.kind, StateKind::kMixed);
  EXPECT_EQ(back.payload.size(), 81u);
  EXPECT_EQ(to_density_matrix(back).matrix(), rho.matrix());
}

TEST(StateFile, ExtremeValuesRoundTrip) {
  StateFile f{2, 2, StateKind::kPure, {{1e-300, -0.0}, {0.1, 1.0 / 3.0}, {5e-324, 1e300}, {-2.5, 0.0}}};
  const StateFile back = parse(write(f));
  for (std::size_t k = 0; k < f.payload.size(); ++k) EXPECT_EQ(back.payload[k], f.payload[k]);
}

TEST(StateFile, CommentsAndBlankLines) {
  const StateFile f = parse(
      "# example\n\nhdetent-state 1\n n 2\nd 2\nkind pure\ndata\n"
      "0.70710678118654757 0\n# middle\n0 0\n0 0\n0.70710678118654757 0\n");
  EXPECT_NEAR(to_pure_state(f).norm(), 1.0, 1e-15);
}

TEST(StateFile, MalformedInput) {
  const std::string header = "hdetent-state 1\nn 2\nd 2\nkind pure\ndata\n";
  const std::string body = "1 0\n0 0\n0 0\n0 0\n";
  EXPECT_NO_THROW(parse(header + body));
  EXPECT_THROW(parse("n 2\nd 2\nkind pure\ndata\n" + body), StateFileError);
  EXPECT_THROW(parse("hdetent-state 2\nn 2\nd 2\nkind pure\ndata\n" + body), StateFileError);
  EXPECT_THROW(parse(header + "1 0\n0 0\n0 0\n"), StateFileError);
  EXPECT_THROW(parse(header + body + "0 0\n"), StateFileError);
  EXPECT_THROW(parse(header + "1 0\n0 x\n0 0\n0 0\n"), StateFileError);
  EXPECT_THROW(parse(header + "1\n0 0\n0 0\n0 0\n"), StateFileError);
  EXPECT_THROW(parse(header + "1 0 0\n0 0\n0 0\n0 0\n"), StateFileError);
  EXPECT_THROW(parse("hdetent-state 1\nn 2\nd 1\nkind pure\ndata\n1 0\n"), StateFileError);
  EXPECT_THROW(parse("hdetent-state 1\nn 0\nd 2\nkind pure\ndata\n1 0\n"), StateFileError);
  EXPECT_THROW(parse("hdetent-state 1\nn 2\nd 2\nkind bogus\ndata\n" + body), StateFileError);
  EXPECT_THROW(parse("hdetent-state 1\nn 2\nd 2\nkind pure\nextra 1\ndata\n" + body), StateFileError);
  EXPECT_THROW(parse("hdetent-state 1\nn 2\nd 2\nkind pure\n"), StateFileError);
  EXPECT_THROW(parse("hdetent-state 1\nn 2\nkind pure\ndata\n" + body), StateFileError);
}

TEST(StateFile, NormalizationCheck) {
  const StateFile f = parse("hdetent-state 1\nn 2\nd 2\nkind pure\ndata\n1 0\n1 0\n0 0\n0 0\n");
  EXPECT_THROW((void)to_pure_state(f), StateFileError);
  const PureState psi = to_pure_state(f, false);
  EXPECT_NEAR(psi.norm(), std::sqrt(2.0), 1e-15);
  EXPECT_THROW((void)to_density_matrix(f), StateFileError);
}

TEST(StateFile, DensityChecks) {
  const std::string header = "hdetent-state 1\nn 1\nd 2\nkind mixed\ndata\n";
  EXPECT_NO_THROW((void)to_density_matrix(parse(header + "0.5 0\n0 0\n0 0\n0.5 0\n")));
  EXPECT_THROW((void)to_density_matrix(parse(header + "0.5 0\n0.1 0\n0 0\n0.5 0\n")), StateFileError);
  EXPECT_THROW((void)to_density_matrix(parse(header + "0.6 0\n0 0\n0 0\n0.5 0\n")), StateFileError);
  EXPECT_THROW((void)to_density_matrix(parse(header + "1.5 0\n0 0\n0 0\n-0.5 0\n")), StateFileError);
  EXPECT_NO_THROW((void)to_density_matrix(parse(header + "1.5 0\n0 0\n0 0\n-0.5 0\n"), false));
  EXPECT_THROW((void)to_pure_state(parse(header + "0.5 0\n0 0\n0 0\n0.5 0\n")), StateFileError);
}

TEST(StateFile, Files) {
  const auto path = std::filesystem::temp_directory_path() / "hdetent_state_file_test.txt";
  const StateFile f = to_state_file(ghz_state(2, 3));
  save_state_file(path, f);
  EXPECT_EQ(load_state_file(path).payload, f.payload);
  std::filesystem::remove(path);
  EXPECT_THROW((void)load_state_file(path), StateFileError);
}

}  // namespace
}  // namespace hdetent
