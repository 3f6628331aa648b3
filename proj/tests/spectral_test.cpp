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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gnscap/pauli.hpp"
#include "test_util.hpp"

using namespace gnscap;

namespace {

ComplexMatrix diag(std::initializer_list<double> v) {
  ComplexMatrix m = ComplexMatrix::Zero(v.size(), v.size());
  Index i = 0;
  for (double x : v) m(i, i) = x, ++i;
  return m;
}

// rho -> tr_2(rho) kron omega on C^2 kron C^2, omega = diag(w, 1 - w).
ChannelDense conditional_expectation(double w) {
  std::vector<ComplexMatrix> kraus;
  const double weights[2] = {w, 1.0 - w};
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < 2; ++i) {
      ComplexMatrix u = ComplexMatrix::Zero(2, 2);
      u(e, i) = std::sqrt(weights[e]);
      kraus.push_back(kron(ComplexMatrix::Identity(2, 2), u));
    }
  return channel_from_kraus(std::move(kraus));
}

// C^3 = C^1 (+) C^2; the first block is kept, the second is replaced by diag(w, 1 - w).
ChannelDense two_block_replacer(double w) {
  std::vector<ComplexMatrix> kraus;
  ComplexMatrix keep = ComplexMatrix::Zero(3, 3);
  keep(0, 0) = 1.0;
  kraus.push_back(keep);
  const double weights[2] = {w, 1.0 - w};
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < 2; ++i) {
      ComplexMatrix k = ComplexMatrix::Zero(3, 3);
      k(1 + e, 1 + i) = std::sqrt(weights[e]);
      kraus.push_back(k);
    }
  return channel_from_kraus(std::move(kraus));
}

PeripheralStructure analyze(const ChannelDense& c, const DensityMatrix& sigma) {
  const ComplexMatrix p = peripheral_projection(c, sigma);
  return extract_structure(c, p, sigma);
}

double reconstruction_error(const PeripheralStructure& s, Index dim, std::mt19937_64& rng) {
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const ComplexMatrix rho = testutil::random_state(dim, rng);
    const ComplexMatrix direct = unvec(s.projector * vec(rho), dim);
    worst = std::max(worst, max_abs(direct - s.apply_from_blocks(rho)));
  }
  return worst;
}

}  // namespace

TEST(gns_frame, round_trip) {
  std::mt19937_64 rng(2);
  const DensityMatrix sigma = DensityMatrix::from_matrix(testutil::random_state(3, rng));
  const GnsFrame f = GnsFrame::from_sigma(sigma);
  const ComplexMatrix m = testutil::random_gaussian(9, 9, rng);
  EXPECT_LT(max_abs(f.from_frame(f.to_frame(m)) - m), 1e-10);
  EXPECT_LT(max_abs(f.sqrt_gram * f.inv_sqrt_gram - ComplexMatrix::Identity(9, 9)), 1e-12);
}

TEST(gns_spectrum, pauli_eigenvalues) {
  const auto p = pauli::PauliChannel::from_probabilities({0.7, 0.1, 0.15, 0.05});
  const auto eta = pauli::eigenvalues(p);
  Eigen::VectorXd spec = gns_spectrum(pauli::to_dense(p), DensityMatrix::maximally_mixed(2));
  std::sort(spec.data(), spec.data() + spec.size());
  std::vector<double> expected = {1.0, eta.eta[0], eta.eta[1], eta.eta[2]};
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(spec(i), expected[i], 1e-12);
}

TEST(peripheral_projection, full_support_pauli) {
  const auto p = pauli::PauliChannel::from_probabilities({0.7, 0.1, 0.1, 0.1});
  const ChannelDense c = pauli::to_dense(p);
  const auto sigma = DensityMatrix::maximally_mixed(2);
  const ComplexMatrix proj = peripheral_projection(c, sigma);
  // P(rho) = tr(rho) I/2.
  const ComplexMatrix expected = vec(ComplexMatrix::Identity(2, 2)) *
                                 vec(ComplexMatrix::Identity(2, 2)).adjoint() / 2.0;
  EXPECT_LT(max_abs(proj - expected), 1e-12);
  const PeripheralStructure s = extract_structure(c, proj, sigma);
  EXPECT_EQ(s.K(), 1);
  EXPECT_EQ(s.blocks[0].d, 1);
  EXPECT_EQ(s.blocks[0].m, 2);
  EXPECT_EQ(s.h0_dim, 0);
}

TEST(peripheral_projection, two_sided_bit_flip) {
  // Only X survives: P keeps span{I, X}.
  const auto p = pauli::PauliChannel::from_probabilities({0.5, 0.5, 0.0, 0.0});
  const ComplexMatrix proj = peripheral_projection(pauli::to_dense(p), DensityMatrix::maximally_mixed(2));
  Eigen::ComplexEigenSolver<ComplexMatrix> es(proj);
  int rank = 0;
  for (Index i = 0; i < 4; ++i) rank += std::abs(es.eigenvalues()(i)) > 0.5;
  EXPECT_EQ(rank, 2);
  const ComplexMatrix x = pauli::pauli_matrix(1);
  EXPECT_LT(max_abs(unvec(proj * vec(x), 2) - x), 1e-12);
  EXPECT_LT(max_abs(unvec(proj * vec(pauli::pauli_matrix(3)), 2)), 1e-12);
}

TEST(peripheral_projection, projection_properties_for_random_pauli) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    const ChannelDense c = pauli::to_dense(testutil::random_pauli(rng, 0.5));
    const ComplexMatrix proj = peripheral_projection(c, DensityMatrix::maximally_mixed(2));
    EXPECT_LT(max_abs(proj * proj - proj), 1e-12);
    EXPECT_LT(max_abs(proj * c.superop() - c.superop() * proj), 1e-12);
  }
}

TEST(peripheral_projection, not_gns_symmetric) {
  std::mt19937_64 rng(6);
  const ChannelDense c = testutil::random_channel(2, 2, rng);
  try {
    peripheral_projection(c, DensityMatrix::maximally_mixed(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotGnsSymmetric);
  }
}

TEST(peripheral_projection, ill_conditioned_spectrum) {
  // eta_z = 1 - 5e-8 sits between 1 - 10 tol and 1 - tol.
  const double q = 1.25e-8;
  const auto p = pauli::PauliChannel::from_probabilities({1 - 2 * q, q, q, 0.0});
  try {
    peripheral_projection(pauli::to_dense(p), DensityMatrix::maximally_mixed(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllConditionedSpectrum);
  }
}

TEST(extract_structure, conditional_expectation) {
  const ChannelDense c = conditional_expectation(0.3);
  const auto sigma = DensityMatrix::from_matrix(kron(diag({0.5, 0.5}), diag({0.3, 0.7})));
  const PeripheralStructure s = analyze(c, sigma);
  ASSERT_EQ(s.K(), 1);
  EXPECT_EQ(s.blocks[0].d, 2);
  EXPECT_EQ(s.blocks[0].m, 2);
  EXPECT_EQ(s.h0_dim, 0);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(s.blocks[0].omega);
  EXPECT_NEAR(es.eigenvalues()(0), 0.3, 1e-10);
  EXPECT_NEAR(es.eigenvalues()(1), 0.7, 1e-10);
  std::mt19937_64 rng(8);
  EXPECT_LT(reconstruction_error(s, 4, rng), 100 * Tolerances{}.eq);
}

TEST(extract_structure, two_block_replacer) {
  const ChannelDense c = two_block_replacer(0.25);
  const auto sigma = DensityMatrix::from_matrix(diag({0.4, 0.6 * 0.25, 0.6 * 0.75}));
  const PeripheralStructure s = analyze(c, sigma);
  ASSERT_EQ(s.K(), 2);
  std::vector<int> ms = {s.blocks[0].m, s.blocks[1].m};
  std::sort(ms.begin(), ms.end());
  EXPECT_EQ(s.block_dims(), (std::vector<int>{1, 1}));
  EXPECT_EQ(ms, (std::vector<int>{1, 2}));
  std::mt19937_64 rng(10);
  EXPECT_LT(reconstruction_error(s, 3, rng), 100 * Tolerances{}.eq);
}

TEST(extract_structure, identity_channel_is_one_full_block) {
  const PeripheralStructure s = analyze(identity_channel(3), DensityMatrix::maximally_mixed(3));
  ASSERT_EQ(s.K(), 1);
  EXPECT_EQ(s.blocks[0].d, 3);
  EXPECT_EQ(s.blocks[0].m, 1);
}

TEST(extract_structure, dephasing_gives_diagonal_blocks) {
  const auto p = pauli::PauliChannel::from_probabilities({0.5, 0.0, 0.0, 0.5});
  const PeripheralStructure s = analyze(pauli::to_dense(p), DensityMatrix::maximally_mixed(2));
  EXPECT_EQ(s.block_dims(), (std::vector<int>{1, 1}));
}

TEST(extract_structure, seed_does_not_change_dims) {
  const ChannelDense c = two_block_replacer(0.4);
  const auto sigma = DensityMatrix::from_matrix(diag({0.2, 0.8 * 0.4, 0.8 * 0.6}));
  const ComplexMatrix proj = peripheral_projection(c, sigma);
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    ExtractOptions opts;
    opts.seed = seed;
    EXPECT_EQ(extract_structure(c, proj, sigma, {}, opts).block_dims(), (std::vector<int>{1, 1}));
  }
}

TEST(extract_structure, rejects_non_projector) {
  const ChannelDense c = identity_channel(2);
  const ComplexMatrix bad = 0.5 * ComplexMatrix::Identity(4, 4);
  try {
    extract_structure(c, bad, DensityMatrix::maximally_mixed(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StructureInconsistent);
  }
}

TEST(verify_limit, pauli_convergence_rate) {
  const auto p = pauli::PauliChannel::from_probabilities({0.7, 0.1, 0.1, 0.1});
  const ChannelDense c = pauli::to_dense(p);
  const ComplexMatrix proj = peripheral_projection(c, DensityMatrix::maximally_mixed(2));
  // eta = 0.6 on each axis, so entries of Phi^(2t) - P are at most 0.6^(2t).
  EXPECT_LE(verify_limit(c, proj, 8), std::pow(0.6, 16) + 1e-15);
  EXPECT_GT(verify_limit(c, proj, 8), 0.1 * std::pow(0.6, 16));
}

TEST(peripheral_projection, stable_under_squaring) {
  std::mt19937_64 rng(12);
  const ChannelDense c = pauli::to_dense(testutil::random_pauli(rng, 0.6));
  const auto sigma = DensityMatrix::maximally_mixed(2);
  const ComplexMatrix p1 = peripheral_projection(c, sigma);
  const ComplexMatrix p2 = peripheral_projection(iterate(c, 2), sigma);
  EXPECT_LT(max_abs(p1 - p2), 1e-10);
}
