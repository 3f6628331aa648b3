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

#include "gnscap/cli.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gnscap/io.hpp"
#include "gnscap/scenario.hpp"
#include "gnscap/spectral.hpp"
#include "gnscap/stabilizer.hpp"

namespace gnscap::cli {

using nlohmann::json;

namespace {

std::string num(double v, int digits = 12) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

json json_num(double v) {
  if (std::isfinite(v)) return v;
  return num(v);
}

int exit_code_for(const Error& e) { return is_io_error(e.code()) ? kExitIo : kExitDomain; }

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  return exit_code_for(e);
}

void print_constants(const bounds::EntropicConstants& k, std::ostream& out) {
  out << "lambda = " << num(k.lambda_gap) << '\n'
      << "Lambda = " << num(k.Lambda) << '\n'
      << "Lambda_c_ub = " << num(k.Lambda_c_ub) << '\n'
      << "alpha_c_lb = " << num(k.alpha_c_lb) << '\n';
}

json constants_json(const bounds::EntropicConstants& k) {
  return {{"lambda", json_num(k.lambda_gap)},
          {"Lambda", json_num(k.Lambda)},
          {"Lambda_c_ub", json_num(k.Lambda_c_ub)},
          {"alpha_c_lb", json_num(k.alpha_c_lb)}};
}

struct ChannelAnalysis {
  PeripheralStructure structure;
  bounds::EntropicConstants constants;
};

ChannelAnalysis analyze_channel(const ChannelDense& c, const DensityMatrix& sigma,
                                const Tolerances& tol, std::uint64_t seed) {
  const ComplexMatrix projector = peripheral_projection(c, sigma, tol);
  ExtractOptions opts;
  opts.seed = seed;
  ChannelAnalysis a{extract_structure(c, projector, sigma, tol, opts), {}};
  const double lambda = bounds::lambda_gap(c, projector, sigma, tol);
  a.constants = bounds::entropic_constants(lambda, bounds::pimsner_popa(sigma, tol));
  return a;
}

}  // namespace

pauli::PauliChannel parse_pauli_vector(std::string_view text) {
  std::array<double, 4> p{};
  std::stringstream ss{std::string(text)};
  std::string field;
  std::size_t count = 0;
  while (std::getline(ss, field, ',')) {
    if (count == 4) throw Error(ErrorCode::ParseError, "expected four comma-separated numbers");
    try {
      std::size_t used = 0;
      p[count] = std::stod(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not a number: '" + field + "'");
    }
    ++count;
  }
  if (count != 4) throw Error(ErrorCode::ParseError, "expected four comma-separated numbers");
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::InvalidProbabilities, "Pauli probabilities must be finite and >= 0");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidProbabilities, "Pauli probabilities sum to " + num(sum));
  }
  for (double& v : p) v /= sum;
  return pauli::PauliChannel::from_probabilities(p);
}

int run_analyze(const AnalyzeCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    cmd.tol.validate();
    const ChannelDense c = io::read_channel(cmd.channel_file, cmd.tol);
    out << "channel: dim=" << c.dim() << ", kraus operators=" << c.kraus().size() << '\n';

    const DensityMatrix sigma = cmd.sigma_file ? io::read_state(*cmd.sigma_file, cmd.tol)
                                               : find_invariant_state(c, cmd.tol);
    out << "sigma: " << (cmd.sigma_file ? "from file" : "invariant state of the channel")
        << ", min eigenvalue " << num(sigma.min_eigenvalue()) << '\n';

    json report;
    report["dim"] = c.dim();

    GnsCheck check;
    try {
      check = check_gns_symmetric(c, sigma, cmd.tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SigmaNotFullRank) throw;
      out << "GNS-symmetric: not applicable (" << e.what() << ")\n"
          << "bounds: inapplicable\n";
      err << "error: " << e.what() << '\n';
      if (cmd.json_out) {
        report["gns"] = {{"symmetric", false}, {"error", to_string(e.code())}};
        io::write_file(*cmd.json_out, report.dump(2));
      }
      return kExitDomain;
    }
    out << "GNS-symmetric: " << (check.symmetric ? "yes" : "no") << " (max deviation "
        << num(check.max_deviation, 3) << ", invariance deviation "
        << num(check.invariance_deviation, 3) << ")\n";
    report["gns"] = {{"symmetric", check.symmetric},
                     {"max_deviation", check.max_deviation},
                     {"invariance_deviation", check.invariance_deviation}};
    if (!check.symmetric) {
      out << "bounds: inapplicable\n";
      err << "error: NotGnsSymmetric\n";
      if (cmd.json_out) io::write_file(*cmd.json_out, report.dump(2));
      return kExitDomain;
    }

    const ChannelAnalysis a = analyze_channel(c, sigma, cmd.tol, cmd.seed);
    const auto caps = bounds::peripheral_capacities(a.structure);
    out << "peripheral structure: K=" << a.structure.K() << ", h0_dim=" << a.structure.h0_dim
        << '\n';
    for (int k = 0; k < a.structure.K(); ++k) {
      const auto& b = a.structure.blocks[static_cast<std::size_t>(k)];
      out << "  block " << k + 1 << ": d=" << b.d << ", m=" << b.m << '\n';
    }
    out << "chi(P) = " << num(caps.chi) << " bits\n"
        << "I_c(P) = " << num(caps.ic) << " bits\n";
    print_constants(a.constants, out);

    report["structure"] = io::structure_to_json(a.structure);
    report["chi_P"] = caps.chi;
    report["ic_P"] = caps.ic;
    report["constants"] = constants_json(a.constants);
    if (a.constants.lambda_gap > 0.0) {
      const double threshold = bounds::zero_error_threshold(a.constants, 1);
      out << "zero-error threshold = " << num(threshold) << '\n';
      report["zero_error_threshold"] = json_num(threshold);
    } else {
      out << "zero-error threshold = none (zero spectral gap)\n";
      report["zero_error_threshold"] = nullptr;
    }
    if (cmd.json_out) io::write_file(*cmd.json_out, report.dump(2));
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int run_scenario(const ScenarioCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    scenario::ScenarioConfig cfg;
    cfg.p = cmd.p;
    cfg.t_max = cmd.t_max;
    cfg.t_stride = cmd.stride;
    cfg.delta = cmd.delta;
    cfg.levels = cmd.levels;
    cfg.mode = cmd.mode;
    const scenario::PauliScenario model(cfg);
    const scenario::BoundCurve curve = scenario::full_curve(cfg);
    scenario::emit_csv(curve, cmd.out);
    if (cmd.gnuplot) {
      auto script_path = cmd.out;
      script_path.replace_extension(".gp");
      io::write_file(script_path, scenario::gnuplot_script(curve, cmd.out));
    }

    out << "wrote " << curve.grid.size() << " rows to " << cmd.out.string() << '\n';
    print_constants(model.constants(), out);
    const auto evaluator = [&model](std::string_view name, long tau) {
      return model.evaluate(name, tau);
    };
    out << "crossover vs passive_q_ub:\n";
    for (int level : cfg.levels) {
      const auto name = scenario::active_series_name(level);
      const auto cross = scenario::find_crossover(curve, name, "passive_q_ub", evaluator);
      out << "  level " << level << " (" << static_cast<long>(std::lround(std::pow(5.0, level)))
          << " qubits): ";
      if (cross) {
        out << "t* = " << *cross << '\n';
      } else {
        out << "none within grid\n";
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int run_code_logical(const CodeLogicalCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const auto result = stabilizer::concatenated_logical_channel(stabilizer::five_qubit_code(),
                                                                 cmd.p, cmd.level);
    const auto& q = result.q.probabilities();
    if (cmd.json) {
      json doc = {{"level", cmd.level},
                  {"qubits", static_cast<long>(std::lround(std::pow(5.0, cmd.level)))},
                  {"q", {q[0], q[1], q[2], q[3]}}};
      out << doc.dump() << '\n';
    } else {
      out << num(q[0]) << ' ' << num(q[1]) << ' ' << num(q[2]) << ' ' << num(q[3]) << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int run_zero_error(const ZeroErrorCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    bounds::EntropicConstants k;
    if (cmd.p) {
      k = bounds::entropic_constants(
          pauli::lambda_gap(*cmd.p, cmd.tol.peripheral, cmd.tol.eq),
          bounds::pimsner_popa(DensityMatrix::maximally_mixed(2), cmd.tol));
    } else if (cmd.channel_file) {
      const ChannelDense c = io::read_channel(*cmd.channel_file, cmd.tol);
      const DensityMatrix sigma = find_invariant_state(c, cmd.tol);
      k = analyze_channel(c, sigma, cmd.tol, cmd.seed).constants;
    } else {
      throw Error(ErrorCode::InvalidArgument, "zero-error needs --p or --channel");
    }
    const double threshold = bounds::zero_error_threshold(k, cmd.n_copies);
    print_constants(k, out);
    out << "threshold(n=" << cmd.n_copies << ") = " << num(threshold) << '\n'
        << "formula: (n ln Lambda_c + ln 10) / lambda = (" << cmd.n_copies << " * "
        << num(std::log(k.Lambda_c_ub)) << " + " << num(std::log(10.0)) << ") / "
        << num(k.lambda_gap) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity bounds for iterated GNS-symmetric quantum channels"};
  app.require_subcommand(1);
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "Seed for the random central element in structure extraction");

  AnalyzeCommand analyze;
  std::string sigma_file, json_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Peripheral structure and entropic constants");
  analyze_cmd->add_option("--channel,channel", analyze.channel_file, "Channel JSON file")->required();
  analyze_cmd->add_option("--sigma", sigma_file, "Reference state JSON file");
  analyze_cmd->add_option("--json", json_out, "Write the report as JSON to this path");
  analyze_cmd->add_option("--tol-eq", analyze.tol.eq);
  analyze_cmd->add_option("--tol-peripheral", analyze.tol.peripheral);
  analyze_cmd->add_option("--tol-psd", analyze.tol.psd);
  analyze_cmd->add_option("--tol-cptp", analyze.tol.cptp);

  ScenarioCommand scen;
  std::string scen_p, mode = "discrete";
  double delta = -1.0;
  auto* scen_cmd = app.add_subcommand("pauli-crossover", "Active vs passive bounds for Pauli noise");
  scen_cmd->add_option("--p", scen_p, "p0,px,py,pz")->required();
  scen_cmd->add_option("--t-max", scen.t_max, "Largest iteration count")->capture_default_str();
  scen_cmd->add_option("--stride", scen.stride, "Grid stride")->capture_default_str();
  scen_cmd->add_option("--delta", delta, "One-shot error for extra one-shot columns");
  scen_cmd->add_option("--levels", scen.levels, "Code concatenation levels")->delimiter(',');
  scen_cmd->add_option("--mode", mode, "discrete or semigroup")
      ->check(CLI::IsMember({"discrete", "semigroup"}));
  scen_cmd->add_option("--out", scen.out, "CSV output path")->required();
  scen_cmd->add_flag("--gnuplot", scen.gnuplot, "Also write a gnuplot script next to the CSV");

  CodeLogicalCommand code;
  std::string code_p;
  auto* code_cmd = app.add_subcommand("code-logical", "Logical channel of the 5-qubit code");
  code_cmd->add_option("--p", code_p, "p0,px,py,pz")->required();
  code_cmd->add_option("--level", code.level, "Concatenation level")->capture_default_str();
  code_cmd->add_flag("--json", code.json, "Print JSON");

  ZeroErrorCommand zero;
  std::string zero_p, zero_channel;
  auto* zero_cmd = app.add_subcommand("zero-error", "Zero-error stabilization threshold");
  auto* zp = zero_cmd->add_option("--p", zero_p, "p0,px,py,pz");
  auto* zc = zero_cmd->add_option("--channel", zero_channel, "Channel JSON file");
  zp->excludes(zc);
  zero_cmd->add_option("--n-copies,-n", zero.n_copies, "Number of parallel copies")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_out = app.exit(e, out, err);
    return code_out == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*analyze_cmd) {
      if (!sigma_file.empty()) analyze.sigma_file = sigma_file;
      if (!json_out.empty()) analyze.json_out = json_out;
      analyze.seed = seed;
      return run_analyze(analyze, out, err);
    }
    if (*scen_cmd) {
      scen.p = parse_pauli_vector(scen_p);
      if (delta >= 0.0 || scen_cmd->count("--delta")) scen.delta = delta;
      scen.mode = mode == "semigroup" ? bounds::TimeMode::Semigroup : bounds::TimeMode::Discrete;
      return run_scenario(scen, out, err);
    }
    if (*code_cmd) {
      code.p = parse_pauli_vector(code_p);
      return run_code_logical(code, out, err);
    }
    if (*zero_cmd) {
      if (!zero_p.empty()) zero.p = parse_pauli_vector(zero_p);
      if (!zero_channel.empty()) zero.channel_file = zero_channel;
      zero.seed = seed;
      return run_zero_error(zero, out, err);
    }
  } catch (const Error& e) {
    return report_error(e, err);
  }
  return kExitIo;
}

}  // namespace gnscap::cli
