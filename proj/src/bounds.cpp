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

#include "gnscap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gnscap::bounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_time(double t, TimeMode mode) {
  if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, "t must be >= 0");
  if (mode == TimeMode::Discrete && std::floor(t) != t) {
    throw Error(ErrorCode::InvalidArgument, "discrete mode requires an integer t");
  }
}

void check_dims(std::span<const int> dims) {
  if (dims.empty()) throw Error(ErrorCode::InvalidArgument, "no peripheral blocks");
  for (int d : dims)
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "block dimension must be >= 1");
}

}  // namespace

double lambda_gap(const ChannelDense& c, const ComplexMatrix& projector, const DensityMatrix& sigma,
                  const Tolerances& tol) {
  const GnsCheck check = check_gns_symmetric(c, sigma, tol);
  if (!check.symmetric) {
    throw Error(ErrorCode::NotGnsSymmetric,
                "GNS-symmetry deviation " + std::to_string(check.max_deviation));
  }
  const Index n = c.superop().rows();
  if (projector.rows() != n || projector.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "projector does not match the channel");
  }
  const GnsFrame frame = GnsFrame::from_sigma(sigma);
  const ComplexMatrix residual =
      c.superop().adjoint() * (ComplexMatrix::Identity(n, n) - projector.adjoint());
  Eigen::JacobiSVD<ComplexMatrix> svd(frame.to_frame(residual));
  const double radius = svd.singularValues()(0);
  if (radius <= tol.eq) return kInf;
  return std::max(0.0, -std::log(radius));
}

PimsnerPopa pimsner_popa(const DensityMatrix& sigma, const Tolerances& tol) {
  const double min_eig = sigma.min_eigenvalue();
  if (min_eig <= tol.psd) {
    throw Error(ErrorCode::SigmaNotFullRank,
                "minimum eigenvalue of sigma is " + std::to_string(min_eig));
  }
  const double lambda = 1.0 / min_eig;
  return {lambda, lambda * lambda};
}

double alpha_c_lower(double lambda_gap, double Lambda_c_ub) {
  if (!(Lambda_c_ub >= 1.0)) throw Error(ErrorCode::InvalidArgument, "Lambda_c must be >= 1");
  if (!(lambda_gap >= 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be >= 0");
  if (lambda_gap == 0.0) return 0.0;
  if (std::isinf(lambda_gap)) return kInf;
  return lambda_gap / std::log(10.0 * Lambda_c_ub);
}

EntropicConstants entropic_constants(double lambda_gap, const PimsnerPopa& pp) {
  return {lambda_gap, pp.Lambda, pp.Lambda_c_ub, alpha_c_lower(lambda_gap, pp.Lambda_c_ub)};
}

PeripheralCapacities peripheral_capacities(std::span<const int> block_dims) {
  check_dims(block_dims);
  int sum = 0;
  int largest = 0;
  for (int d : block_dims) {
    sum += d;
    largest = std::max(largest, d);
  }
  return {std::log2(static_cast<double>(sum)), std::log2(static_cast<double>(largest))};
}

double decay_correction(const EntropicConstants& k, double t) {
  const double magnitude = std::log2(k.Lambda_c_ub);
  if (std::isinf(k.alpha_c_lb)) return t > 0.0 ? 0.0 : magnitude;
  return std::exp(-2.0 * k.alpha_c_lb * t) * magnitude;
}

CapacityBounds asymptotic_bounds(std::span<const int> block_dims, const EntropicConstants& k,
                                 double t, TimeMode mode) {
  check_time(t, mode);
  const auto cap = peripheral_capacities(block_dims);
  const double corr = decay_correction(k, t);
  CapacityBounds out;
  out.t = t;
  out.classical_lb = cap.chi;
  out.quantum_lb = cap.ic;
  out.classical_ub = cap.chi + corr;
  out.quantum_ub = cap.ic + corr;
  return out;
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

CapacityBounds one_shot_bounds(std::span<const int> block_dims, const EntropicConstants& k,
                               double t, double delta, TimeMode mode, EntropyPlacement placement) {
  if (!(delta >= 0.0 && delta < 0.5)) {
    throw Error(ErrorCode::DeltaOutOfRange, "delta must lie in [0, 1/2)");
  }
  check_time(t, mode);
  const auto cap = peripheral_capacities(block_dims);
  const double corr = decay_correction(k, t);
  const double h = binary_entropy(delta);

  CapacityBounds out;
  out.t = t;
  out.delta = delta;
  out.classical_lb = cap.chi;
  out.quantum_lb = cap.ic;
  if (placement == EntropyPlacement::Inside) {
    out.classical_ub = (cap.chi + corr + h) / (1.0 - delta);
  } else {
    out.classical_ub = (cap.chi + corr) / (1.0 - delta) + h;
  }
  out.quantum_ub = delta < 0.25 ? (cap.ic + corr + 2.0 * h) / (1.0 - 4.0 * delta) : kInf;
  return out;
}

double zero_error_threshold(const EntropicConstants& k, int n_copies) {
  if (n_copies < 1) throw Error(ErrorCode::InvalidArgument, "n_copies must be >= 1");
  if (std::isinf(k.lambda_gap)) return 0.0;
  if (!(k.lambda_gap > 0.0)) throw Error(ErrorCode::ZeroGap, "spectral gap is zero");
  return (n_copies * std::log(k.Lambda_c_ub) + std::log(10.0)) / k.lambda_gap;
}

double pimsner_popa_estimate(const ComplexMatrix& projector, Index dim, int samples,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  double best = 0.0;
  for (int s = 0; s < samples; ++s) {
    ComplexVector psi(dim);
    for (Index i = 0; i < dim; ++i) psi(i) = Complex(normal(rng), normal(rng));
    psi.normalize();
    const ComplexMatrix x = psi * psi.adjoint();
    ComplexMatrix px = unvec(projector * vec(x), dim);
    px = (px + px.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(px);
    if (es.eigenvalues().minCoeff() <= 0.0) return kInf;
    const ComplexMatrix inv_root = es.eigenvectors() *
                                   es.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
                                   es.eigenvectors().adjoint();
    // X <= C P(X)  iff  C >= lambda_max(P(X)^{-1/2} X P(X)^{-1/2})
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ratio(inv_root * x * inv_root,
                                                       Eigen::EigenvaluesOnly);
    best = std::max(best, ratio.eigenvalues().maxCoeff());
  }
  return best;
}

}  // namespace gnscap::bounds
