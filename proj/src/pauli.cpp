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

#include "gnscap/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gnscap::pauli {

namespace {

constexpr double kSumTol = 1e-12;
constexpr double kNegTol = 1e-12;

bool is_integer(double t) { return std::floor(t) == t; }

}  // namespace

PauliChannel PauliChannel::from_probabilities(const std::array<double, 4>& p) {
  double sum = 0.0;
  for (double v : p) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::InvalidProbabilities, "Pauli probabilities must be finite and >= 0");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSumTol) {
    throw Error(ErrorCode::InvalidProbabilities,
                "Pauli probabilities sum to " + std::to_string(sum));
  }
  return PauliChannel(p);
}

PauliEigenvalues eigenvalues(const PauliChannel& p) {
  return {{1.0 - 2.0 * (p.py() + p.pz()), 1.0 - 2.0 * (p.px() + p.pz()),
           1.0 - 2.0 * (p.px() + p.py())}};
}

PauliChannel from_eigenvalues(const PauliEigenvalues& e) {
  const auto [ex, ey, ez] = e.eta;
  std::array<double, 4> p = {(1.0 + ex + ey + ez) / 4.0, (1.0 + ex - ey - ez) / 4.0,
                             (1.0 - ex + ey - ez) / 4.0, (1.0 - ex - ey + ez) / 4.0};
  for (double& v : p) {
    if (!(v >= -kNegTol)) {
      throw Error(ErrorCode::InvalidEigenvalues, "eigenvalues outside the valid channel region");
    }
    v = std::max(v, 0.0);
  }
  return PauliChannel(p);
}

PauliChannel power(const PauliChannel& p, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::InvalidArgument, "power requires finite t >= 0");
  }
  if (t == 0.0) return PauliChannel::identity();
  auto e = eigenvalues(p);
  const bool integral = is_integer(t);
  for (double& v : e.eta) {
    if (!integral && v < 0.0) {
      throw Error(ErrorCode::FractionalPowerOfNegative,
                  "non-integer power of a channel with a negative eigenvalue");
    }
    v = std::pow(v, t);
  }
  return from_eigenvalues(e);
}

double shannon_entropy(const PauliChannel& p) {
  double h = 0.0;
  for (double v : p.probabilities())
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

double hashing_lb(const PauliChannel& p) { return std::max(0.0, 1.0 - shannon_entropy(p)); }

ComplexMatrix pauli_matrix(int which) {
  ComplexMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (which) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: throw Error(ErrorCode::InvalidArgument, "Pauli index must be in 0..3");
  }
  return m;
}

ChannelDense to_dense(const PauliChannel& p) {
  std::vector<ComplexMatrix> kraus;
  for (int k = 0; k < 4; ++k) {
    if (p[k] > 0.0) kraus.push_back(std::sqrt(p[k]) * pauli_matrix(k));
  }
  return channel_from_kraus(std::move(kraus));
}

std::vector<int> peripheral_block_dims(const PauliChannel& p, double tol_peripheral) {
  int unimodular = 0;
  for (double v : eigenvalues(p).eta)
    if (std::abs(v) >= 1.0 - tol_peripheral) ++unimodular;
  if (unimodular == 0) return {1};
  if (unimodular == 3) return {2};
  return {1, 1};
}

double lambda_gap(const PauliChannel& p, double tol_peripheral, double zero_cutoff) {
  double radius = 0.0;
  for (double v : eigenvalues(p).eta)
    if (std::abs(v) < 1.0 - tol_peripheral) radius = std::max(radius, std::abs(v));
  if (radius <= zero_cutoff) return std::numeric_limits<double>::infinity();
  return -std::log(radius);
}

}  // namespace gnscap::pauli
