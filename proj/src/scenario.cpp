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

#include "gnscap/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gnscap::scenario {

namespace {

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

double physical_cost(int level) { return std::pow(5.0, level); }

}  // namespace

void ScenarioConfig::validate() const {
  if (t_max < 1) throw Error(ErrorCode::InvalidArgument, "t_max must be >= 1");
  if (t_stride < 1) throw Error(ErrorCode::InvalidArgument, "t_stride must be >= 1");
  if (levels.empty()) throw Error(ErrorCode::InvalidArgument, "at least one code level required");
  for (int l : levels)
    if (l < 1) throw Error(ErrorCode::InvalidArgument, "code levels must be >= 1");
  if (delta && !(*delta >= 0.0 && *delta < 0.5)) {
    throw Error(ErrorCode::DeltaOutOfRange, "delta must lie in [0, 1/2)");
  }
}

const std::vector<double>* BoundCurve::find(std::string_view name) const {
  for (const auto& s : columns)
    if (s.name == name) return &s.values;
  return nullptr;
}

const std::vector<double>& BoundCurve::at(std::string_view name) const {
  const auto* v = find(name);
  if (!v) throw Error(ErrorCode::SeriesMissing, "no series named " + std::string(name));
  return *v;
}

void BoundCurve::add(std::string name, std::vector<double> values) {
  if (values.size() != grid.size()) {
    throw Error(ErrorCode::DimensionMismatch, "series length differs from grid length");
  }
  columns.push_back({std::move(name), std::move(values)});
}

std::string active_series_name(int level) { return "active_q_lb_l" + std::to_string(level); }

PauliScenario::PauliScenario(ScenarioConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  const DensityMatrix sigma = DensityMatrix::maximally_mixed(2);
  const auto pp = bounds::pimsner_popa(sigma);
  const Tolerances tol;
  constants_ = bounds::entropic_constants(pauli::lambda_gap(cfg_.p, tol.peripheral, tol.eq), pp);
  dims_ = pauli::peripheral_block_dims(cfg_.p, tol.peripheral);
  for (int level : cfg_.levels) {
    logical_.emplace(level, stabilizer::concatenated_logical_channel(
                                stabilizer::five_qubit_code(), cfg_.p, level));
  }
}

const stabilizer::LogicalChannelResult& PauliScenario::logical(int level) const {
  const auto it = logical_.find(level);
  if (it == logical_.end()) {
    throw Error(ErrorCode::SeriesMissing, "level " + std::to_string(level) + " not configured");
  }
  return it->second;
}

bool PauliScenario::held(long tau) const {
  return cfg_.mode == bounds::TimeMode::Discrete && (tau % 2) != 0;
}

double PauliScenario::bound_time(long tau) const {
  // The bounds govern Phi^{2t}; odd tau hold the value of tau - 1.
  if (cfg_.mode == bounds::TimeMode::Discrete) return static_cast<double>(tau - tau % 2) / 2.0;
  return static_cast<double>(tau) / 2.0;
}

double PauliScenario::passive_q_ub(long tau) const {
  return bounds::asymptotic_bounds(dims_, constants_, bound_time(tau), cfg_.mode).quantum_ub;
}

double PauliScenario::passive_c_ub(long tau) const {
  return bounds::asymptotic_bounds(dims_, constants_, bound_time(tau), cfg_.mode).classical_ub;
}

double PauliScenario::passive_q_lb_hashing(long tau) const {
  return pauli::hashing_lb(pauli::power(cfg_.p, static_cast<double>(tau)));
}

double PauliScenario::active_q_lb(int level, long tau) const {
  return pauli::hashing_lb(pauli::power(logical(level).q, static_cast<double>(tau))) /
         physical_cost(level);
}

bounds::CapacityBounds PauliScenario::one_shot(long tau) const {
  if (!cfg_.delta) throw Error(ErrorCode::SeriesMissing, "one-shot series need delta");
  return bounds::one_shot_bounds(dims_, constants_, bound_time(tau), *cfg_.delta, cfg_.mode);
}

double PauliScenario::evaluate(std::string_view series, long tau) const {
  if (series == "passive_q_ub") return passive_q_ub(tau);
  if (series == "passive_c_ub") return passive_c_ub(tau);
  if (series == "passive_q_lb_hashing") return passive_q_lb_hashing(tau);
  if (series == "passive_c_ub_oneshot") return one_shot(tau).classical_ub;
  if (series == "passive_q_ub_oneshot") return one_shot(tau).quantum_ub;
  for (int level : cfg_.levels)
    if (series == active_series_name(level)) return active_q_lb(level, tau);
  throw Error(ErrorCode::SeriesMissing, "no series named " + std::string(series));
}

std::vector<long> make_grid(const ScenarioConfig& cfg) {
  cfg.validate();
  std::vector<long> grid;
  for (long tau = 0; tau <= cfg.t_max; tau += cfg.t_stride) grid.push_back(tau);
  return grid;
}

namespace {

BoundCurve empty_curve(const PauliScenario& model) {
  BoundCurve curve;
  curve.grid = make_grid(model.config());
  curve.constants = model.constants();
  for (long tau : curve.grid) curve.held.push_back(model.held(tau));
  curve.conventions = {
      {"capacity_units", "bits"},
      {"rate_units", "nats per iteration"},
      {"lambda_c", "upper bound ||sigma^-1||^2"},
      {"passive_ub", "asymptotic, tau = 2t"},
      {"odd_tau", model.config().mode == bounds::TimeMode::Discrete ? "held" : "evaluated"},
      {"one_shot_entropy_placement", "inside the delta ratio"},
  };
  return curve;
}

std::vector<double> tabulate(const PauliScenario& model, const std::vector<long>& grid,
                             std::string_view name) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (long tau : grid) out.push_back(model.evaluate(name, tau));
  return out;
}

void add_passive(const PauliScenario& model, BoundCurve& curve) {
  for (const char* name : {"passive_c_ub", "passive_q_ub", "passive_q_lb_hashing"}) {
    curve.add(name, tabulate(model, curve.grid, name));
  }
}

void add_active(const PauliScenario& model, BoundCurve& curve) {
  for (int level : model.config().levels) {
    const auto name = active_series_name(level);
    curve.add(name, tabulate(model, curve.grid, name));
  }
}

}  // namespace

BoundCurve passive_curves(const ScenarioConfig& cfg) {
  ScenarioConfig passive_only = cfg;
  passive_only.levels = {1};
  const PauliScenario model(passive_only);
  BoundCurve curve = empty_curve(model);
  add_passive(model, curve);
  return curve;
}

BoundCurve active_curves(const ScenarioConfig& cfg) {
  const PauliScenario model(cfg);
  BoundCurve curve = empty_curve(model);
  add_active(model, curve);
  return curve;
}

BoundCurve full_curve(const ScenarioConfig& cfg) {
  const PauliScenario model(cfg);
  BoundCurve curve = empty_curve(model);
  add_passive(model, curve);
  add_active(model, curve);
  if (cfg.delta) {
    for (const char* name : {"passive_c_ub_oneshot", "passive_q_ub_oneshot"}) {
      curve.add(name, tabulate(model, curve.grid, name));
    }
  }
  return curve;
}

std::optional<long> find_crossover(const BoundCurve& curve, std::string_view lb_series,
                                   std::string_view ub_series, const SeriesEvaluator& refine) {
  const auto& lb = curve.at(lb_series);
  const auto& ub = curve.at(ub_series);
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    if (!(ub[i] < lb[i])) continue;
    if (i == 0 || !refine) return curve.grid[i];
    long lo = curve.grid[i - 1];
    long hi = curve.grid[i];
    while (hi - lo > 1) {
      const long mid = lo + (hi - lo) / 2;
      if (refine(ub_series, mid) < refine(lb_series, mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return hi;
  }
  return std::nullopt;
}

std::string to_csv(const BoundCurve& curve) {
  std::ostringstream os;
  os << 't';
  for (const auto& s : curve.columns) os << ',' << s.name;
  os << '\n';
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    os << curve.grid[i];
    for (const auto& s : curve.columns) os << ',' << format_value(s.values[i]);
    os << '\n';
  }
  return os.str();
}

void emit_csv(const BoundCurve& curve, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << to_csv(curve);
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

std::string gnuplot_script(const BoundCurve& curve, const std::filesystem::path& csv_path) {
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set key autotitle columnhead\n"
     << "set xlabel 'Channel iteration t'\n"
     << "set ylabel 'Capacity (bits)'\n"
     << "set yrange [0:0.2]\n"
     << "set xrange [0:10000]\n"
     << "plot ";
  for (std::size_t i = 0; i < curve.columns.size(); ++i) {
    if (i) os << ", \\\n     ";
    os << "'" << csv_path.filename().string() << "' using 1:" << (i + 2) << " with lines";
  }
  os << '\n';
  return os.str();
}

}  // namespace gnscap::scenario
