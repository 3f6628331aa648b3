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

#include "gnscap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gnscap {

namespace {

// Relative singular-value cutoff when extracting the span of a set of matrices.
constexpr double kRankTol = 1e-7;
constexpr int kMatrixUnitAttempts = 8;

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return (m + m.adjoint()) / 2.0; }

/// Orthonormal basis (as columns) of the column space of `cols`.
ComplexMatrix column_basis(const ComplexMatrix& cols) {
  if (cols.cols() == 0) return ComplexMatrix(cols.rows(), 0);
  Eigen::BDCSVD<ComplexMatrix> svd(cols, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double top = s.size() > 0 ? s(0) : 0.0;
  Index rank = 0;
  while (rank < s.size() && s(rank) > kRankTol * std::max(top, 1.0)) ++rank;
  return svd.matrixU().leftCols(rank);
}

/// Splits ascending eigenvalues into runs whose consecutive gaps are <= gap.
std::vector<std::vector<Index>> group_eigenvalues(const Eigen::VectorXd& values, double gap) {
  std::vector<std::vector<Index>> groups;
  for (Index i = 0; i < values.size(); ++i) {
    if (groups.empty() || values(i) - values(i - 1) > gap) groups.emplace_back();
    groups.back().push_back(i);
  }
  return groups;
}

ComplexMatrix select_columns(const ComplexMatrix& m, const std::vector<Index>& idx) {
  ComplexMatrix out(m.rows(), static_cast<Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out.col(static_cast<Index>(i)) = m.col(idx[i]);
  return out;
}

/// Random Hermitian element of the real span of {b, b^dag} over a basis.
ComplexMatrix random_hermitian(const std::vector<ComplexMatrix>& basis, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const Complex i(0.0, 1.0);
  ComplexMatrix h = ComplexMatrix::Zero(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) {
    const double r1 = unif(rng);
    const double r2 = unif(rng);
    h += r1 * (b + b.adjoint()) / 2.0 + r2 * (i * (b - b.adjoint())) / 2.0;
  }
  return hermitian_part(h);
}

ComplexMatrix random_element(const std::vector<ComplexMatrix>& basis, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  ComplexMatrix x = ComplexMatrix::Zero(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) x += Complex(unif(rng), unif(rng)) * b;
  return x;
}

ComplexMatrix random_state(Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

std::vector<ComplexMatrix> as_matrices(const ComplexMatrix& columns, Index dim) {
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(columns.cols()));
  for (Index c = 0; c < columns.cols(); ++c) out.push_back(unvec(columns.col(c), dim));
  return out;
}

/// Builds an isometry C^d kron C^m -> C^n exhibiting a block algebra
/// (given by an orthonormal basis of n x n matrices) as M_d kron 1_m.
ComplexMatrix tensor_frame(const std::vector<ComplexMatrix>& algebra, int d, int m, double gap,
                           std::mt19937_64& rng) {
  const Index n = algebra.front().rows();
  if (d == 1) return ComplexMatrix::Identity(n, n);
  for (int attempt = 0; attempt < kMatrixUnitAttempts; ++attempt) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(random_hermitian(algebra, rng));
    auto groups = group_eigenvalues(es.eigenvalues(), gap);
    if (static_cast<int>(groups.size()) != d) continue;
    bool sizes_ok = std::all_of(groups.begin(), groups.end(),
                                [m](const auto& g) { return static_cast<int>(g.size()) == m; });
    if (!sizes_ok) continue;

    std::vector<ComplexMatrix> minimal;
    for (const auto& g : groups) minimal.push_back(select_columns(es.eigenvectors(), g));

    // Matrix units e_{a0} kron 1 are recovered from a generic element x via
    // F_a^dag x F_0, which is a multiple of a unitary.
    const ComplexMatrix x = random_element(algebra, rng);
    ComplexMatrix frame(n, n);
    frame.leftCols(m) = minimal[0];
    bool ok = true;
    for (int a = 1; a < d && ok; ++a) {
      const ComplexMatrix e = minimal[a].adjoint() * x * minimal[0];
      Eigen::JacobiSVD<ComplexMatrix> svd(e, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const auto& s = svd.singularValues();
      if (s(m - 1) < 1e-6 || (s(0) - s(m - 1)) > 1e-6 * s(0)) {
        ok = false;
        break;
      }
      frame.middleCols(a * m, m) = minimal[a] * (svd.matrixU() * svd.matrixV().adjoint());
    }
    if (ok) return frame;
  }
  throw Error(ErrorCode::StructureInconsistent, "could not build matrix units for a block");
}

}  // namespace

std::vector<int> PeripheralStructure::block_dims() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.push_back(b.d);
  return out;
}

ComplexMatrix PeripheralStructure::apply_from_blocks(const ComplexMatrix& rho) const {
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& b : blocks) {
    const ComplexMatrix local = b.isometry.adjoint() * rho * b.isometry;
    ComplexMatrix reduced(b.d, b.d);
    for (int r = 0; r < b.d; ++r)
      for (int c = 0; c < b.d; ++c) reduced(r, c) = local.block(r * b.m, c * b.m, b.m, b.m).trace();
    out += b.isometry * kron(reduced, b.omega) * b.isometry.adjoint();
  }
  return out;
}

GnsFrame GnsFrame::from_sigma(const DensityMatrix& sigma) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sigma.matrix());
  const Eigen::VectorXd s = es.eigenvalues();
  if (s.minCoeff() <= 0.0) throw Error(ErrorCode::SigmaNotFullRank, "sigma is singular");
  const ComplexMatrix u = es.eigenvectors();
  // sigma^T = conj(U) diag(s) U^T
  const ComplexMatrix root_t =
      u.conjugate() * s.cwiseSqrt().cast<Complex>().asDiagonal() * u.transpose();
  const ComplexMatrix inv_root_t =
      u.conjugate() * s.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() * u.transpose();
  const Index d = sigma.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return GnsFrame{kron(root_t, id), kron(inv_root_t, id)};
}

ComplexMatrix GnsFrame::to_frame(const ComplexMatrix& dual_superop) const {
  return sqrt_gram * dual_superop * inv_sqrt_gram;
}

ComplexMatrix GnsFrame::from_frame(const ComplexMatrix& m) const {
  return inv_sqrt_gram * m * sqrt_gram;
}

namespace {

Eigen::SelfAdjointEigenSolver<ComplexMatrix> gns_eigensystem(const ChannelDense& c,
                                                             const DensityMatrix& sigma,
                                                             const Tolerances& tol,
                                                             GnsFrame& frame) {
  const GnsCheck check = check_gns_symmetric(c, sigma, tol);
  if (!check.symmetric) {
    throw Error(ErrorCode::NotGnsSymmetric,
                "GNS-symmetry deviation " + std::to_string(check.max_deviation));
  }
  frame = GnsFrame::from_sigma(sigma);
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(
      hermitian_part(frame.to_frame(c.superop().adjoint())));
}

}  // namespace

Eigen::VectorXd gns_spectrum(const ChannelDense& c, const DensityMatrix& sigma,
                             const Tolerances& tol) {
  GnsFrame frame;
  return gns_eigensystem(c, sigma, tol, frame).eigenvalues();
}

ComplexMatrix peripheral_projection(const ChannelDense& c, const DensityMatrix& sigma,
                                    const Tolerances& tol) {
  tol.validate();
  GnsFrame frame;
  const auto es = gns_eigensystem(c, sigma, tol, frame);
  const auto& values = es.eigenvalues();
  std::vector<Index> peripheral;
  for (Index i = 0; i < values.size(); ++i) {
    const double r = std::abs(values(i));
    if (r >= 1.0 - tol.peripheral) {
      peripheral.push_back(i);
    } else if (r > 1.0 - 10.0 * tol.peripheral) {
      throw Error(ErrorCode::IllConditionedSpectrum,
                  "eigenvalue modulus " + std::to_string(r) + " is too close to the peripheral cut");
    }
  }
  const ComplexMatrix u = select_columns(es.eigenvectors(), peripheral);
  const ComplexMatrix dual_projector = frame.from_frame(u * u.adjoint());
  return dual_projector.adjoint();
}

PeripheralStructure extract_structure(const ChannelDense& c, const ComplexMatrix& projector,
                                      const DensityMatrix& sigma, const Tolerances& tol,
                                      const ExtractOptions& opts) {
  tol.validate();
  const Index d = c.dim();
  const Index n2 = d * d;
  if (projector.rows() != n2 || projector.cols() != n2 || sigma.dim() != d) {
    throw Error(ErrorCode::DimensionMismatch, "projector or sigma does not match the channel");
  }
  if (sigma.min_eigenvalue() <= tol.psd) {
    throw Error(ErrorCode::SigmaNotFullRank, "sigma must be full rank");
  }
  const double idem = max_abs(projector * projector - projector);
  const double comm = max_abs(projector * c.superop() - c.superop() * projector);
  if (idem > tol.eq || comm > tol.eq) {
    throw Error(ErrorCode::StructureInconsistent,
                "projector is not an idempotent commuting with the channel (" +
                    std::to_string(idem) + ", " + std::to_string(comm) + ")");
  }

  std::mt19937_64 rng(opts.seed);

  // Heisenberg-picture range of P: a unital *-algebra.
  const auto algebra = as_matrices(column_basis(projector.adjoint()), d);
  const Index r = static_cast<Index>(algebra.size());
  if (r == 0) throw Error(ErrorCode::StructureInconsistent, "projector has empty range");

  // Center: coefficient vectors c with [sum_j c_j a_j, a_i] = 0 for every i.
  ComplexMatrix normal = ComplexMatrix::Zero(r, r);
  for (Index i = 0; i < r; ++i) {
    ComplexMatrix comms(n2, r);
    for (Index j = 0; j < r; ++j) comms.col(j) = vec(algebra[j] * algebra[i] - algebra[i] * algebra[j]);
    normal += comms.adjoint() * comms;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> center_es(hermitian_part(normal));
  std::vector<ComplexMatrix> center;
  const double center_cut = 1e-12 * std::max(1.0, center_es.eigenvalues().cwiseAbs().maxCoeff());
  for (Index k = 0; k < r; ++k) {
    if (center_es.eigenvalues()(k) > center_cut) continue;
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    for (Index j = 0; j < r; ++j) z += center_es.eigenvectors()(j, k) * algebra[j];
    center.push_back(z);
  }
  if (center.empty()) throw Error(ErrorCode::StructureInconsistent, "algebra has trivial center");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> central_es(random_hermitian(center, rng));
  const auto central_groups = group_eigenvalues(central_es.eigenvalues(), tol.peripheral);

  PeripheralStructure out;
  out.projector = projector;

  const ComplexMatrix image_of_mixed =
      unvec(projector * vec(ComplexMatrix::Identity(d, d) / static_cast<double>(d)), d);
  {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(image_of_mixed),
                                                    Eigen::EigenvaluesOnly);
    int support = 0;
    for (Index i = 0; i < d; ++i)
      if (es.eigenvalues()(i) > tol.psd) ++support;
    out.h0_dim = static_cast<int>(d) - support;
  }

  for (const auto& group : central_groups) {
    const ComplexMatrix w = select_columns(central_es.eigenvectors(), group);
    const Index nk = w.cols();
    ComplexMatrix compressed(nk * nk, r);
    for (Index j = 0; j < r; ++j) compressed.col(j) = vec(w.adjoint() * algebra[j] * w);
    const auto block_algebra = as_matrices(column_basis(compressed), nk);
    const Index dim_k = static_cast<Index>(block_algebra.size());
    const int dk = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim_k))));
    if (static_cast<Index>(dk) * dk != dim_k || dk == 0 || nk % dk != 0) {
      throw Error(ErrorCode::StructureInconsistent,
                  "block algebra of dimension " + std::to_string(dim_k) + " on a " +
                      std::to_string(nk) + "-dimensional block is not a full matrix factor");
    }
    const int mk = static_cast<int>(nk / dk);

    PeripheralBlock block;
    block.d = dk;
    block.m = mk;
    block.isometry = w * tensor_frame(block_algebra, dk, mk, tol.peripheral, rng);

    // omega_k: average of the (a, b) sub-blocks of P(e_ab kron 1/m).
    ComplexMatrix omega = ComplexMatrix::Zero(mk, mk);
    const ComplexMatrix flat = ComplexMatrix::Identity(mk, mk) / static_cast<double>(mk);
    for (int a = 0; a < dk; ++a)
      for (int b = 0; b < dk; ++b) {
        ComplexMatrix unit = ComplexMatrix::Zero(dk, dk);
        unit(a, b) = 1.0;
        const ComplexMatrix probe = block.isometry * kron(unit, flat) * block.isometry.adjoint();
        const ComplexMatrix image =
            block.isometry.adjoint() * unvec(projector * vec(probe), d) * block.isometry;
        omega += image.block(a * mk, b * mk, mk, mk);
      }
    omega = hermitian_part(omega / static_cast<double>(dk * dk));
    omega /= omega.trace().real();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> omega_es(omega, Eigen::EigenvaluesOnly);
    if (omega_es.eigenvalues().minCoeff() <= tol.psd) {
      throw Error(ErrorCode::StructureInconsistent, "omega_k is not full rank");
    }
    block.omega = omega;
    out.blocks.push_back(std::move(block));
  }

  int accounted = out.h0_dim;
  for (const auto& b : out.blocks) accounted += b.d * b.m;
  if (accounted != d) {
    throw Error(ErrorCode::StructureInconsistent,
                "dimension accounting gives " + std::to_string(accounted) + " != " +
                    std::to_string(d));
  }

  for (int probe = 0; probe < opts.reconstruction_probes; ++probe) {
    const ComplexMatrix x = random_state(d, rng);
    const double dev = max_abs(out.apply_from_blocks(x) - unvec(projector * vec(x), d));
    if (dev > 100.0 * tol.eq) {
      throw Error(ErrorCode::StructureInconsistent,
                  "reconstruction deviates by " + std::to_string(dev));
    }
  }
  return out;
}

double verify_limit(const ChannelDense& c, const ComplexMatrix& projector, int t_check) {
  if (t_check < 1) throw Error(ErrorCode::InvalidArgument, "t_check must be >= 1");
  return max_abs(iterate(c, 2 * t_check).superop() - projector);
}

}  // namespace gnscap
