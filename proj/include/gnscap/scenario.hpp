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

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnscap/bounds.hpp"
#include "gnscap/pauli.hpp"
#include "gnscap/stabilizer.hpp"

namespace gnscap::scenario {

struct ScenarioConfig {
  pauli::PauliChannel p = pauli::PauliChannel::identity();
  long t_max = 20000;
  long t_stride = 1;
  std::optional<double> delta;
  std::vector<int> levels = {1, 2};
  bounds::TimeMode mode = bounds::TimeMode::Discrete;

  void validate() const;
};

struct Series {
  std::string name;
  std::vector<double> values;
};

/// Tabulated bounds over a grid of iteration counts tau. In discrete mode
/// the passive upper bounds at odd tau repeat the value of tau - 1 and the
/// corresponding entries of `held` are set.
struct BoundCurve {
  std::vector<long> grid;
  std::vector<Series> columns;
  std::vector<bool> held;
  bounds::EntropicConstants constants;
  std::map<std::string, std::string> conventions;

  const std::vector<double>* find(std::string_view name) const;
  const std::vector<double>& at(std::string_view name) const;
  void add(std::string name, std::vector<double> values);
};

std::string active_series_name(int level);

/// Closed-form evaluation of every scenario series at arbitrary tau. The
/// noise is a Pauli channel, so sigma = I/2 and Lambda_c <= 4 exactly.
class PauliScenario {
 public:
  explicit PauliScenario(ScenarioConfig cfg);

  const ScenarioConfig& config() const { return cfg_; }
  const bounds::EntropicConstants& constants() const { return constants_; }
  const std::vector<int>& block_dims() const { return dims_; }
  const stabilizer::LogicalChannelResult& logical(int level) const;

  double passive_q_ub(long tau) const;
  double passive_c_ub(long tau) const;
  double passive_q_lb_hashing(long tau) const;
  double active_q_lb(int level, long tau) const;
  bounds::CapacityBounds one_shot(long tau) const;
  bool held(long tau) const;

  /// Dispatches on a column name; throws SeriesMissing for unknown names.
  double evaluate(std::string_view series, long tau) const;

 private:
  double bound_time(long tau) const;

  ScenarioConfig cfg_;
  bounds::EntropicConstants constants_;
  std::vector<int> dims_;
  std::map<int, stabilizer::LogicalChannelResult> logical_;
};

std::vector<long> make_grid(const ScenarioConfig& cfg);

BoundCurve passive_curves(const ScenarioConfig& cfg);
BoundCurve active_curves(const ScenarioConfig& cfg);
/// Passive and active series on one grid, plus one-shot columns when delta is set.
BoundCurve full_curve(const ScenarioConfig& cfg);

using SeriesEvaluator = std::function<double(std::string_view, long)>;

/// Smallest grid tau with ub(tau) < lb(tau). When an evaluator is supplied
/// and the bracketing grid points are more than one step apart, the result
/// is refined by bisection on direct evaluations.
std::optional<long> find_crossover(const BoundCurve& curve, std::string_view lb_series,
                                   std::string_view ub_series,
                                   const SeriesEvaluator& refine = {});

std::string to_csv(const BoundCurve& curve);
void emit_csv(const BoundCurve& curve, const std::filesystem::path& path);
std::string gnuplot_script(const BoundCurve& curve, const std::filesystem::path& csv_path);

}  // namespace gnscap::scenario
