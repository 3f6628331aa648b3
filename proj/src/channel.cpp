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

#include "gnscap/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace gnscap {

namespace {

// Complete positivity is checked through a dense Choi eigendecomposition,
// which costs O(d^6); larger channels rely on the Kraus form alone.
constexpr Index kChoiCheckMaxDim = 32;

void check_finite(const ComplexMatrix& m) {
  if (!m.allFinite()) throw Error(ErrorCode::InvalidArgument, "matrix has non-finite entries");
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return (m + m.adjoint()) / 2.0; }

double min_hermitian_eigenvalue(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

void Tolerances::validate() const {
  for (double v : {herm, trace, psd, cptp, peripheral, eq}) {
    if (!(v >= 0.0 && v <= 1e-2)) {
      throw Error(ErrorCode::InvalidArgument, "tolerance outside [0, 1e-2]: " + std::to_string(v));
    }
  }
}

ComplexVector vec(const ComplexMatrix& x) {
  return Eigen::Map<const ComplexVector>(x.data(), x.size());
}

ComplexMatrix unvec(const ComplexVector& v, Index dim) {
  if (v.size() != dim * dim) throw Error(ErrorCode::DimensionMismatch, "unvec: length is not dim^2");
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double max_abs(const ComplexMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, const Tolerances& tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be square and nonempty");
  }
  check_finite(m);
  if (max_abs(m - m.adjoint()) > tol.herm) throw Error(ErrorCode::InvalidState, "not Hermitian");
  if (std::abs(m.trace() - Complex(1.0)) > tol.trace) {
    throw Error(ErrorCode::InvalidState, "trace differs from 1");
  }
  if (min_hermitian_eigenvalue(m) < -tol.psd) {
    throw Error(ErrorCode::InvalidState, "negative eigenvalue");
  }
  return DensityMatrix(hermitian_part(m));
}

DensityMatrix DensityMatrix::maximally_mixed(Index dim) {
  if (dim <= 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::min_eigenvalue() const { return min_hermitian_eigenvalue(matrix_); }

ComplexMatrix ChannelDense::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "input dimension does not match channel");
  }
  return unvec(superop_ * vec(rho), dim_);
}

ComplexMatrix ChannelDense::apply_adjoint(const ComplexMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "input dimension does not match channel");
  }
  return unvec(superop_.adjoint() * vec(x), dim_);
}

ComplexMatrix ChannelDense::choi() const { return choi_from_superop(superop_, dim_); }

ComplexMatrix superop_from_kraus(const std::vector<ComplexMatrix>& kraus) {
  const Index d = kraus.front().rows();
  ComplexMatrix s = ComplexMatrix::Zero(d * d, d * d);
  for (const auto& k : kraus) s += kron(k.conjugate(), k);
  return s;
}

ComplexMatrix choi_from_superop(const ComplexMatrix& superop, Index dim) {
  const Index d = dim;
  ComplexMatrix j(d * d, d * d);
  // J[(i*d + a), (k*d + b)] = Phi(E_ik)(a, b) = S[a + d*b, i + d*k]
  for (Index i = 0; i < d; ++i)
    for (Index a = 0; a < d; ++a)
      for (Index k = 0; k < d; ++k)
        for (Index b = 0; b < d; ++b) j(i * d + a, k * d + b) = superop(a + d * b, i + d * k);
  return j;
}

std::vector<ComplexMatrix> kraus_from_superop(const ComplexMatrix& superop, Index dim,
                                              double cutoff) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(choi_from_superop(superop, dim)));
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<ComplexMatrix> kraus;
  for (Index i = es.eigenvalues().size() - 1; i >= 0; --i) {
    const double w = es.eigenvalues()(i);
    if (w <= cutoff * scale) continue;
    kraus.push_back(std::sqrt(w) * unvec(es.eigenvectors().col(i), dim));
  }
  if (kraus.empty()) kraus.push_back(ComplexMatrix::Zero(dim, dim));
  return kraus;
}

ChannelDense channel_from_kraus(std::vector<ComplexMatrix> kraus, const Tolerances& tol,
                                Index max_dim) {
  tol.validate();
  if (kraus.empty()) throw Error(ErrorCode::InvalidArgument, "empty Kraus list");
  const Index d = kraus.front().rows();
  if (d == 0) throw Error(ErrorCode::DimensionMismatch, "zero-dimensional Kraus operator");
  for (const auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators must be square and equal-sized");
    }
    check_finite(k);
  }
  if (d > max_dim) {
    throw Error(ErrorCode::ResourceLimit,
                "dimension " + std::to_string(d) + " exceeds cap " + std::to_string(max_dim));
  }

  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  const double tp_dev = max_abs(sum - ComplexMatrix::Identity(d, d));
  if (tp_dev > tol.cptp) {
    throw Error(ErrorCode::NotTracePreserving,
                "||sum K^dag K - I||_max = " + std::to_string(tp_dev));
  }

  ComplexMatrix s = superop_from_kraus(kraus);
  if (d <= kChoiCheckMaxDim) {
    const double min_eig = min_hermitian_eigenvalue(choi_from_superop(s, d));
    if (min_eig < -tol.psd) {
      throw Error(ErrorCode::NotCompletelyPositive,
                  "Choi matrix eigenvalue " + std::to_string(min_eig));
    }
  }
  return ChannelDense(d, std::move(kraus), std::move(s), true);
}

ChannelDense identity_channel(Index dim) {
  return channel_from_kraus({ComplexMatrix::Identity(dim, dim)}, Tolerances{}, std::max(dim, kDefaultMaxDim));
}

ChannelDense compose(const ChannelDense& a, const ChannelDense& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "compose: dimensions differ");
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& ka : a.kraus())
    for (const auto& kb : b.kraus()) kraus.push_back(ka * kb);
  return ChannelDense(a.dim(), std::move(kraus), a.superop() * b.superop(),
                      a.trace_preserving() && b.trace_preserving());
}

ChannelDense iterate(const ChannelDense& c, int t) {
  if (t < 0) throw Error(ErrorCode::InvalidArgument, "iterate: negative power");
  const Index d = c.dim();
  if (t == 0) {
    return ChannelDense(d, {ComplexMatrix::Identity(d, d)}, ComplexMatrix::Identity(d * d, d * d),
                        true);
  }
  if (t == 1) return c;
  ComplexMatrix result = ComplexMatrix::Identity(d * d, d * d);
  ComplexMatrix base = c.superop();
  for (int e = t; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  auto kraus = kraus_from_superop(result, d);
  return ChannelDense(d, std::move(kraus), std::move(result), c.trace_preserving());
}

ChannelDense tensor(const ChannelDense& a, const ChannelDense& b, Index max_dim) {
  const Index d = a.dim() * b.dim();
  if (d > max_dim) {
    throw Error(ErrorCode::ResourceLimit,
                "tensor dimension " + std::to_string(d) + " exceeds cap " + std::to_string(max_dim));
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const auto& ka : a.kraus())
    for (const auto& kb : b.kraus()) kraus.push_back(kron(ka, kb));
  ComplexMatrix s = superop_from_kraus(kraus);
  return ChannelDense(d, std::move(kraus), std::move(s),
                      a.trace_preserving() && b.trace_preserving());
}

ChannelDense adjoint(const ChannelDense& c) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(c.kraus().size());
  for (const auto& k : c.kraus()) kraus.push_back(k.adjoint());
  // Trace preservation of the adjoint holds only for unital channels.
  ComplexMatrix sum = ComplexMatrix::Zero(c.dim(), c.dim());
  for (const auto& k : kraus) sum += k.adjoint() * k;
  const bool tp = max_abs(sum - ComplexMatrix::Identity(c.dim(), c.dim())) <= Tolerances{}.cptp;
  return ChannelDense(c.dim(), std::move(kraus), c.superop().adjoint(), tp);
}

GnsCheck check_gns_symmetric(const ChannelDense& c, const DensityMatrix& sigma,
                             const Tolerances& tol) {
  tol.validate();
  const Index d = c.dim();
  if (sigma.dim() != d) throw Error(ErrorCode::DimensionMismatch, "sigma dimension mismatch");
  const double min_eig = sigma.min_eigenvalue();
  if (min_eig <= tol.psd) {
    throw Error(ErrorCode::SigmaNotFullRank,
                "minimum eigenvalue of sigma is " + std::to_string(min_eig));
  }
  const ComplexMatrix& s = sigma.matrix();
  const ComplexMatrix dual = c.superop().adjoint();

  // For each matrix unit E_kl (column k + d*l) precompute Phi*(E_kl) sigma and
  // sigma Phi*(E_kl).
  std::vector<ComplexMatrix> right(d * d), left(d * d);
  for (Index col = 0; col < d * d; ++col) {
    ComplexMatrix a = unvec(dual.col(col), d);
    right[col] = a * s;
    left[col] = s * a;
  }
  // tr(E_ij Phi*(E_kl) sigma) = (Phi*(E_kl) sigma)(j, i)
  // tr(Phi*(E_ij) E_kl sigma) = (sigma Phi*(E_ij))(l, k)
  double dev = 0.0;
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) {
      const Index alpha = i + d * j;
      for (Index l = 0; l < d; ++l)
        for (Index k = 0; k < d; ++k) {
          const Index beta = k + d * l;
          dev = std::max(dev, std::abs(right[beta](j, i) - left[alpha](l, k)));
        }
    }

  GnsCheck out;
  out.max_deviation = dev;
  out.symmetric = dev <= tol.eq;
  out.invariance_deviation = max_abs(c.apply(s) - s);
  out.invariant = out.invariance_deviation <= tol.eq;
  return out;
}

DensityMatrix find_invariant_state(const ChannelDense& c, const Tolerances& tol) {
  tol.validate();
  const Index d = c.dim();
  const Index n = d * d;
  const ComplexMatrix shifted = c.superop() - ComplexMatrix::Identity(n, n);
  Eigen::BDCSVD<ComplexMatrix> svd(shifted, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Index kernel = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= tol.peripheral) ++kernel;
  if (kernel == 0) {
    throw Error(ErrorCode::NumericalFailure, "no eigenvalue within tolerance of 1");
  }
  // Singular values are sorted in decreasing order: the kernel sits at the end.
  const ComplexMatrix right = svd.matrixV().rightCols(kernel);
  const ComplexMatrix left = svd.matrixU().rightCols(kernel);
  const ComplexMatrix overlap = left.adjoint() * right;
  // Spectral projector onto the eigenvalue-1 space along the rest of the spectrum.
  const ComplexVector mixed = vec(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
  const ComplexVector fixed = right * overlap.fullPivLu().solve(left.adjoint() * mixed);

  ComplexMatrix rho = hermitian_part(unvec(fixed, d));
  const Complex tr = rho.trace();
  if (!(tr.real() > 0.0)) throw Error(ErrorCode::NumericalFailure, "fixed point has no trace");
  rho /= tr.real();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
  if (es.eigenvalues().minCoeff() < -tol.psd) {
    throw Error(ErrorCode::NumericalFailure, "fixed point is not positive semidefinite");
  }
  Eigen::VectorXd clipped = es.eigenvalues().cwiseMax(0.0);
  clipped /= clipped.sum();
  rho = es.eigenvectors() * clipped.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();

  if (max_abs(c.apply(rho) - rho) > tol.eq) {
    throw Error(ErrorCode::NumericalFailure, "recovered state is not invariant");
  }
  return DensityMatrix::from_matrix(rho, tol);
}

}  // namespace gnscap
