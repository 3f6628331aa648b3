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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "gnscap/errors.hpp"

namespace gnscap {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Numerical tolerances shared by every module. All values must lie in
/// [0, 1e-2].
struct Tolerances {
  double herm = 1e-10;
  double trace = 1e-10;
  double psd = 1e-9;
  double cptp = 1e-9;
  double peripheral = 1e-8;
  double eq = 1e-10;

  void validate() const;
};

/// Largest Hilbert-space dimension for which a dense superoperator is built.
inline constexpr Index kDefaultMaxDim = 64;

// Vectorization is column-stacking throughout: vec(X)[i + d*j] = X(i, j), so
// vec(A X B) = (B^T kron A) vec(X).
ComplexVector vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexVector& v, Index dim);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);

/// A validated quantum state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(const ComplexMatrix& m, const Tolerances& tol = {});
  static DensityMatrix maximally_mixed(Index dim);

  Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  double min_eigenvalue() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

/// A completely positive map on M_d stored both as Kraus operators and as
/// its d^2 x d^2 superoperator. Channels produced by channel_from_kraus,
/// compose, iterate and tensor are trace preserving; adjoint() yields a
/// unital CP map that is flagged as not trace preserving.
class ChannelDense {
 public:
  Index dim() const { return dim_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ComplexMatrix& superop() const { return superop_; }
  bool trace_preserving() const { return trace_preserving_; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  /// Heisenberg-picture action X -> sum_i K_i^dag X K_i.
  ComplexMatrix apply_adjoint(const ComplexMatrix& x) const;
  ComplexMatrix choi() const;

 private:
  ChannelDense(Index dim, std::vector<ComplexMatrix> kraus, ComplexMatrix superop,
               bool trace_preserving)
      : dim_(dim),
        kraus_(std::move(kraus)),
        superop_(std::move(superop)),
        trace_preserving_(trace_preserving) {}

  friend ChannelDense channel_from_kraus(std::vector<ComplexMatrix>, const Tolerances&, Index);
  friend ChannelDense compose(const ChannelDense&, const ChannelDense&);
  friend ChannelDense iterate(const ChannelDense&, int);
  friend ChannelDense tensor(const ChannelDense&, const ChannelDense&, Index);
  friend ChannelDense adjoint(const ChannelDense&);

  Index dim_;
  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix superop_;
  bool trace_preserving_;
};

ComplexMatrix superop_from_kraus(const std::vector<ComplexMatrix>& kraus);
/// Choi matrix sum_ij E_ij kron Phi(E_ij) read off a column-stacked superoperator.
ComplexMatrix choi_from_superop(const ComplexMatrix& superop, Index dim);
/// Canonical Kraus operators from the eigendecomposition of the Choi matrix.
std::vector<ComplexMatrix> kraus_from_superop(const ComplexMatrix& superop, Index dim,
                                              double cutoff = 1e-14);

ChannelDense channel_from_kraus(std::vector<ComplexMatrix> kraus, const Tolerances& tol = {},
                                Index max_dim = kDefaultMaxDim);
ChannelDense identity_channel(Index dim);

/// a after b: superop(result) = superop(a) * superop(b).
ChannelDense compose(const ChannelDense& a, const ChannelDense& b);
/// t-fold composition by repeated squaring of the superoperator. Kraus
/// operators of the result are recomputed from its Choi matrix.
ChannelDense iterate(const ChannelDense& c, int t);
ChannelDense tensor(const ChannelDense& a, const ChannelDense& b, Index max_dim = kDefaultMaxDim);
ChannelDense adjoint(const ChannelDense& c);

struct GnsCheck {
  bool symmetric = false;
  double max_deviation = 0.0;
  bool invariant = false;
  double invariance_deviation = 0.0;
};

/// Evaluates tr(X Phi*(Y) sigma) - tr(Phi*(X) Y sigma) on every pair of
/// matrix units and, separately, ||Phi(sigma) - sigma||_max.
GnsCheck check_gns_symmetric(const ChannelDense& c, const DensityMatrix& sigma,
                             const Tolerances& tol = {});

/// Spectral projection of the maximally mixed state onto the fixed-point
/// space of the channel, returned as a state.
DensityMatrix find_invariant_state(const ChannelDense& c, const Tolerances& tol = {});

}  // namespace gnscap
