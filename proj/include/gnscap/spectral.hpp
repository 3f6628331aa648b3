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
#include <vector>

#include "gnscap/channel.hpp"

namespace gnscap {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

/// One summand M_d kron omega of the peripheral algebra. The isometry maps
/// C^d kron C^m (index a*m + j) into the full Hilbert space.
struct PeripheralBlock {
  int d = 1;
  int m = 1;
  ComplexMatrix omega;
  ComplexMatrix isometry;
};

struct PeripheralStructure {
  std::vector<PeripheralBlock> blocks;
  ComplexMatrix projector;  // superoperator of the peripheral projection
  int h0_dim = 0;

  int K() const { return static_cast<int>(blocks.size()); }
  std::vector<int> block_dims() const;
  /// Applies the projection through the block data: rho -> sum_k tr_2(rho_kk) kron omega_k.
  ComplexMatrix apply_from_blocks(const ComplexMatrix& rho) const;
};

/// Change of coordinates in which a channel that is GNS-symmetric with
/// respect to sigma becomes Hermitian: H = G^{1/2} S^dag G^{-1/2} with
/// G = sigma^T kron I the Gram matrix of <X, Y> = tr(X^dag Y sigma).
struct GnsFrame {
  ComplexMatrix sqrt_gram;
  ComplexMatrix inv_sqrt_gram;

  static GnsFrame from_sigma(const DensityMatrix& sigma);
  /// Heisenberg-picture superoperator (S^dag) in GNS coordinates.
  ComplexMatrix to_frame(const ComplexMatrix& dual_superop) const;
  ComplexMatrix from_frame(const ComplexMatrix& m) const;
};

/// Real spectrum of a GNS-symmetric channel, ascending.
Eigen::VectorXd gns_spectrum(const ChannelDense& c, const DensityMatrix& sigma,
                             const Tolerances& tol = {});

/// Spectral projector onto the eigenvectors with |eigenvalue| >= 1 - tol.peripheral.
/// Throws NotGnsSymmetric if c fails check_gns_symmetric against sigma.
ComplexMatrix peripheral_projection(const ChannelDense& c, const DensityMatrix& sigma,
                                    const Tolerances& tol = {});

struct ExtractOptions {
  std::uint64_t seed = kDefaultSeed;
  int reconstruction_probes = 20;
};

PeripheralStructure extract_structure(const ChannelDense& c, const ComplexMatrix& projector,
                                      const DensityMatrix& sigma, const Tolerances& tol = {},
                                      const ExtractOptions& opts = {});

/// ||superop(c^{2 t_check}) - P||_max.
double verify_limit(const ChannelDense& c, const ComplexMatrix& projector, int t_check);

}  // namespace gnscap
