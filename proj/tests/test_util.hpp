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

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/QR>

#include "gnscap/channel.hpp"
#include "gnscap/pauli.hpp"

namespace gnscap::testutil {

inline ComplexMatrix random_gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return m;
}

/// Random CPTP map with `rank` Kraus operators, cut from a random isometry.
inline ChannelDense random_channel(Index dim, Index rank, std::mt19937_64& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_gaussian(dim * rank, dim, rng));
  const ComplexMatrix v = qr.householderQ() * ComplexMatrix::Identity(dim * rank, dim);
  std::vector<ComplexMatrix> kraus;
  for (Index r = 0; r < rank; ++r) kraus.push_back(v.middleRows(r * dim, dim));
  return channel_from_kraus(std::move(kraus));
}

inline ComplexMatrix random_state(Index dim, std::mt19937_64& rng) {
  const ComplexMatrix g = random_gaussian(dim, dim, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

/// Random Pauli vector with p0 in [p0_min, 1] and the remainder split at random.
inline pauli::PauliChannel random_pauli(std::mt19937_64& rng, double p0_min = 0.0) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double p0 = p0_min + (1.0 - p0_min) * unif(rng);
  std::array<double, 3> w = {unif(rng), unif(rng), unif(rng)};
  const double total = w[0] + w[1] + w[2];
  const double rest = 1.0 - p0;
  std::array<double, 4> p = {0.0, rest * w[0] / total, rest * w[1] / total, rest * w[2] / total};
  p[0] = 1.0 - p[1] - p[2] - p[3];
  return pauli::PauliChannel::from_probabilities(p);
}

inline ChannelDense amplitude_damping(double gamma) {
  ComplexMatrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return channel_from_kraus({k0, k1});
}

/// rho -> tr(rho) |0><0| on C^dim.
inline ChannelDense reset_channel(Index dim) {
  std::vector<ComplexMatrix> kraus;
  for (Index j = 0; j < dim; ++j) {
    ComplexMatrix k = ComplexMatrix::Zero(dim, dim);
    k(0, j) = 1.0;
    kraus.push_back(k);
  }
  return channel_from_kraus(std::move(kraus));
}

/// Pauli-basis eigenvalues tr(P Phi(P)) / 2 read directly off a dense qubit channel.
inline std::array<double, 3> dense_pauli_eigenvalues(const ChannelDense& c) {
  std::array<double, 3> eta{};
  for (int a = 1; a <= 3; ++a) {
    const ComplexMatrix s = pauli::pauli_matrix(a);
    eta[a - 1] = (s * c.apply(s)).trace().real() / 2.0;
  }
  return eta;
}

inline const pauli::PauliChannel& reference_channel() {
  // Benchmark error rates; p0 is fixed by normalization.
  static const pauli::PauliChannel p = pauli::PauliChannel::from_probabilities(
      {1.0 - 3 * 0.00047, 0.00047, 0.00047, 0.00047});
  return p;
}

}  // namespace gnscap::testutil
