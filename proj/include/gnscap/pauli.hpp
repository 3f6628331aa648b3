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

#include <array>
#include <vector>

#include "gnscap/channel.hpp"

namespace gnscap::pauli {

struct PauliEigenvalues;

/// Single-qubit Pauli channel rho -> p0 rho + px X rho X + py Y rho Y + pz Z rho Z.
class PauliChannel {
 public:
  /// Requires nonnegative entries summing to 1 within 1e-12.
  static PauliChannel from_probabilities(const std::array<double, 4>& p);
  static PauliChannel identity() { return PauliChannel({1.0, 0.0, 0.0, 0.0}); }

  const std::array<double, 4>& probabilities() const { return p_; }
  double p0() const { return p_[0]; }
  double px() const { return p_[1]; }
  double py() const { return p_[2]; }
  double pz() const { return p_[3]; }
  double operator[](std::size_t i) const { return p_[i]; }

  bool operator==(const PauliChannel&) const = default;

 private:
  explicit PauliChannel(const std::array<double, 4>& p) : p_(p) {}
  friend PauliChannel from_eigenvalues(const PauliEigenvalues&);
  std::array<double, 4> p_;
};

/// Eigenvalues of the channel on X, Y, Z (the identity always has eigenvalue 1).
struct PauliEigenvalues {
  std::array<double, 3> eta;
};

PauliEigenvalues eigenvalues(const PauliChannel& p);
PauliChannel from_eigenvalues(const PauliEigenvalues& eta);

/// t-fold composition. Non-integer t needs every eigenvalue nonnegative.
PauliChannel power(const PauliChannel& p, double t);

/// Shannon entropy of the error distribution, in bits.
double shannon_entropy(const PauliChannel& p);

/// max(0, 1 - H(p)).
double hashing_lb(const PauliChannel& p);

/// 0 = I, 1 = X, 2 = Y, 3 = Z.
ComplexMatrix pauli_matrix(int which);

ChannelDense to_dense(const PauliChannel& p);

/// Block sizes of the peripheral algebra: {1} when no eigenvalue is
/// unimodular, {1, 1} when exactly one is, {2} when all three are.
std::vector<int> peripheral_block_dims(const PauliChannel& p, double tol_peripheral = 1e-8);

/// Closed-form spectral gap: -ln of the largest non-peripheral |eta|, +inf
/// when that modulus is below zero_cutoff or no such eigenvalue exists.
double lambda_gap(const PauliChannel& p, double tol_peripheral = 1e-8, double zero_cutoff = 1e-10);

}  // namespace gnscap::pauli
