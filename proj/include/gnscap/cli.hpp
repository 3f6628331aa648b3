// Copyright 2026 The gnscap Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "gnscap/bounds.hpp"
#include "gnscap/pauli.hpp"

namespace gnscap::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitDomain = 2;

struct AnalyzeCommand {
  std::filesystem::path channel_file;
  std::optional<std::filesystem::path> sigma_file;
  std::optional<std::filesystem::path> json_out;
  Tolerances tol;
  std::uint64_t seed = kDefaultSeed;
};

struct ScenarioCommand {
  pauli::PauliChannel p = pauli::PauliChannel::identity();
  long t_max = 20000;
  long stride = 1;
  std::optional<double> delta;
  std::vector<int> levels = {1, 2};
  bounds::TimeMode mode = bounds::TimeMode::Discrete;
  std::filesystem::path out;
  bool gnuplot = false;
};

struct CodeLogicalCommand {
  pauli::PauliChannel p = pauli::PauliChannel::identity();
  int level = 1;
  bool json = false;
};

struct ZeroErrorCommand {
  std::optional<pauli::PauliChannel> p;
  std::optional<std::filesystem::path> channel_file;
  int n_copies = 1;
  Tolerances tol;
  std::uint64_t seed = kDefaultSeed;
};

/// Parses "p0,px,py,pz". A sum within 1e-9 of 1 is renormalized; anything
/// else is rejected with InvalidProbabilities.
pauli::PauliChannel parse_pauli_vector(std::string_view text);

int run_analyze(const AnalyzeCommand& cmd, std::ostream& out, std::ostream& err);
int run_scenario(const ScenarioCommand& cmd, std::ostream& out, std::ostream& err);
int run_code_logical(const CodeLogicalCommand& cmd, std::ostream& out, std::ostream& err);
int run_zero_error(const ZeroErrorCommand& cmd, std::ostream& out, std::ostream& err);

/// Full command-line entry point: parses arguments and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gnscap::cli
