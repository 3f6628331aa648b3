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

#include <optional>
#include <span>
#include <vector>

#include "gnscap/channel.hpp"
#include "gnscap/spectral.hpp"

namespace gnscap::bounds {

/// Decay rates (lambda_gap, alpha_c_lb) are in nats per step; every capacity
/// and every log(Lambda) correction is in bits.
struct EntropicConstants {
  double lambda_gap = 0.0;
  double Lambda = 1.0;
  double Lambda_c_ub = 1.0;
  double alpha_c_lb = 0.0;
};

enum class TimeMode { Discrete, Semigroup };

/// Where the binary-entropy term of the one-shot classical bound sits.
/// Inside: [log sum d + e^{-2 alpha t} log Lambda_c + h(delta)] / (1 - delta).
/// Outside: [log sum d + e^{-2 alpha t} log Lambda_c] / (1 - delta) + h(delta).
enum class EntropyPlacement { Inside, Outside };

struct CapacityBounds {
  double t = 0.0;
  double classical_ub = 0.0;
  double quantum_ub = 0.0;
  double classical_lb = 0.0;
  double quantum_lb = 0.0;
  std::optional<double> delta;
};

/// -ln of the largest modulus of Phi* restricted to the non-peripheral part,
/// measured in the sigma-GNS norm. Returns +inf when that part is empty or
/// its spectral radius is at most tol.eq.
double lambda_gap(const ChannelDense& c, const ComplexMatrix& projector, const DensityMatrix& sigma,
                  const Tolerances& tol = {});

struct PimsnerPopa {
  double Lambda;
  double Lambda_c_ub;
};
PimsnerPopa pimsner_popa(const DensityMatrix& sigma, const Tolerances& tol = {});

double alpha_c_lower(double lambda_gap, double Lambda_c_ub);

/// Assembles all constants for a channel and its invariant state.
EntropicConstants entropic_constants(double lambda_gap, const PimsnerPopa& pp);

struct PeripheralCapacities {
  double chi;  // log2(sum d_k)
  double ic;   // log2(max d_k)
};
PeripheralCapacities peripheral_capacities(std::span<const int> block_dims);
inline PeripheralCapacities peripheral_capacities(const PeripheralStructure& s) {
  const auto dims = s.block_dims();
  return peripheral_capacities(dims);
}

/// e^{-2 alpha t} log2(Lambda_c), with alpha = +inf giving 0 for t > 0.
double decay_correction(const EntropicConstants& k, double t);

CapacityBounds asymptotic_bounds(std::span<const int> block_dims, const EntropicConstants& k,
                                 double t, TimeMode mode = TimeMode::Discrete);

CapacityBounds one_shot_bounds(std::span<const int> block_dims, const EntropicConstants& k,
                               double t, double delta, TimeMode mode = TimeMode::Discrete,
                               EntropyPlacement placement = EntropyPlacement::Inside);

/// Iteration count beyond which zero-error capacities of n_copies parallel
/// uses equal those of the peripheral projection: (n ln Lambda_c + ln 10) / lambda.
double zero_error_threshold(const EntropicConstants& k, int n_copies = 1);

/// Binary entropy in bits.
double binary_entropy(double x);

/// Brute-force estimate of inf{C : X <= C P(X)} over random PSD inputs, a
/// diagnostic for the closed form ||sigma^{-1}||_inf.
double pimsner_popa_estimate(const ComplexMatrix& projector, Index dim, int samples,
                             std::uint64_t seed = kDefaultSeed);

}  // namespace gnscap::bounds
