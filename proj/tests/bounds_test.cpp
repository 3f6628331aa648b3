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

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "gnscap/pauli.hpp"
#include "test_util.hpp"

using namespace gnscap;
using namespace gnscap::bounds;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

EntropicConstants reference_constants() {
  const auto p = testutil::reference_channel();
  return entropic_constants(pauli::lambda_gap(p), pimsner_popa(DensityMatrix::maximally_mixed(2)));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(constants, reference_channel) {
  const EntropicConstants k = reference_constants();
  EXPECT_NEAR(k.lambda_gap / -std::log(0.99812), 1.0, 1e-12);
  EXPECT_EQ(k.Lambda, 2.0);
  EXPECT_EQ(k.Lambda_c_ub, 4.0);
  EXPECT_NEAR(k.alpha_c_lb / (k.lambda_gap / std::log(40.0)), 1.0, 1e-12);
}

TEST(pimsner_popa, values) {
  const auto pp = pimsner_popa(DensityMatrix::maximally_mixed(3));
  EXPECT_NEAR(pp.Lambda, 3.0, 1e-12);
  EXPECT_NEAR(pp.Lambda_c_ub, 9.0, 1e-12);
  ComplexMatrix s = ComplexMatrix::Zero(2, 2);
  s(0, 0) = 0.8;
  s(1, 1) = 0.2;
  EXPECT_NEAR(pimsner_popa(DensityMatrix::from_matrix(s)).Lambda, 5.0, 1e-12);
  s(0, 0) = 1.0;
  s(1, 1) = 0.0;
  EXPECT_EQ(code_of([&] { pimsner_popa(DensityMatrix::from_matrix(s)); }), ErrorCode::SigmaNotFullRank);
}

TEST(pimsner_popa, estimate_is_below_closed_form) {
  // P(X) = tr(X) I/2 gives Lambda = 2, attained by every pure state.
  const ComplexMatrix proj = vec(ComplexMatrix::Identity(2, 2)) *
                             vec(ComplexMatrix::Identity(2, 2)).adjoint() / 2.0;
  const double est = pimsner_popa_estimate(proj, 2, 50);
  EXPECT_NEAR(est, 2.0, 1e-9);
}

TEST(alpha, edge_cases) {
  EXPECT_EQ(alpha_c_lower(0.0, 4.0), 0.0);
  EXPECT_EQ(alpha_c_lower(kInf, 4.0), kInf);
  EXPECT_NEAR(alpha_c_lower(1.0, 1.0), 1.0 / std::log(10.0), 1e-15);
  EXPECT_THROW(alpha_c_lower(1.0, 0.5), Error);
}

TEST(peripheral_capacities, values) {
  const std::vector<int> dims = {1, 2, 3};
  const auto c = peripheral_capacities(dims);
  EXPECT_EQ(c.chi, std::log2(6.0));
  EXPECT_EQ(c.ic, std::log2(3.0));
  const std::vector<int> one = {1};
  EXPECT_EQ(peripheral_capacities(one).chi, 0.0);
  const std::vector<int> empty;
  EXPECT_THROW(peripheral_capacities(empty), Error);
}

TEST(asymptotic_bounds, infinite_time_limit) {
  const EntropicConstants k = reference_constants();
  const std::vector<int> dims = {1, 1};
  const auto cap = peripheral_capacities(dims);
  const auto b = asymptotic_bounds(dims, k, 1e7, TimeMode::Semigroup);
  EXPECT_EQ(b.classical_ub, cap.chi);
  EXPECT_EQ(b.quantum_ub, cap.ic);
  const auto b0 = asymptotic_bounds(dims, k, 0);
  EXPECT_NEAR(b0.classical_ub, cap.chi + 2.0, 1e-15);
}

TEST(asymptotic_bounds, monotone_and_above_lower_bound) {
  const EntropicConstants k = reference_constants();
  const std::vector<int> dims = {1};
  double prev = kInf;
  for (int t = 0; t <= 20000; t += 250) {
    const auto b = asymptotic_bounds(dims, k, t);
    EXPECT_LE(b.quantum_ub, prev);
    EXPECT_GE(b.quantum_ub, b.quantum_lb);
    EXPECT_GE(b.classical_ub, b.classical_lb);
    prev = b.quantum_ub;
  }
}

TEST(asymptotic_bounds, time_validation) {
  const EntropicConstants k = reference_constants();
  const std::vector<int> dims = {1};
  EXPECT_EQ(code_of([&] { asymptotic_bounds(dims, k, -1); }), ErrorCode::NegativeTime);
  EXPECT_EQ(code_of([&] { asymptotic_bounds(dims, k, 1.5); }), ErrorCode::InvalidArgument);
  EXPECT_NO_THROW(asymptotic_bounds(dims, k, 1.5, TimeMode::Semigroup));
}

TEST(decay_correction, infinite_alpha) {
  EntropicConstants k{kInf, 2.0, 4.0, kInf};
  EXPECT_EQ(decay_correction(k, 0.0), 2.0);
  EXPECT_EQ(decay_correction(k, 1.0), 0.0);
}

TEST(one_shot_bounds, delta_zero_matches_asymptotic) {
  const EntropicConstants k = reference_constants();
  const std::vector<int> dims = {1, 1};
  for (int t : {0, 10, 1000, 5000}) {
    const auto a = asymptotic_bounds(dims, k, t);
    const auto o = one_shot_bounds(dims, k, t, 0.0);
    EXPECT_DOUBLE_EQ(o.classical_ub, a.classical_ub);
    EXPECT_DOUBLE_EQ(o.quantum_ub, a.quantum_ub);
    const auto d = one_shot_bounds(dims, k, t, 0.0, TimeMode::Discrete, EntropyPlacement::Outside);
    EXPECT_DOUBLE_EQ(d.classical_ub, a.classical_ub);
  }
}

TEST(one_shot_bounds, placement_and_delta_range) {
  const EntropicConstants k = reference_constants();
  const std::vector<int> dims = {2};
  const double delta = 0.1;
  const double h = binary_entropy(delta);
  const double corr = decay_correction(k, 100);
  const auto pc = one_shot_bounds(dims, k, 100, delta);
  EXPECT_NEAR(pc.classical_ub, (1.0 + corr + h) / 0.9, 1e-14);
  EXPECT_NEAR(pc.quantum_ub, (1.0 + corr + 2 * h) / 0.6, 1e-14);
  const auto td = one_shot_bounds(dims, k, 100, delta, TimeMode::Discrete, EntropyPlacement::Outside);
  EXPECT_NEAR(td.classical_ub, (1.0 + corr) / 0.9 + h, 1e-14);
  EXPECT_EQ(pc.delta, delta);

  EXPECT_TRUE(std::isinf(one_shot_bounds(dims, k, 100, 0.25).quantum_ub));
  EXPECT_TRUE(std::isfinite(one_shot_bounds(dims, k, 100, 0.25).classical_ub));
  EXPECT_EQ(code_of([&] { one_shot_bounds(dims, k, 100, 0.5); }), ErrorCode::DeltaOutOfRange);
  EXPECT_EQ(code_of([&] { one_shot_bounds(dims, k, 100, -0.01); }), ErrorCode::DeltaOutOfRange);
}

TEST(one_shot_bounds, nondecreasing_in_delta) {
  const EntropicConstants k = reference_constants();
  const std::vector<int> dims = {1, 2};
  double prev_c = 0.0, prev_q = 0.0;
  for (double delta = 0.0; delta < 0.25; delta += 0.01) {
    const auto b = one_shot_bounds(dims, k, 500, delta);
    EXPECT_GE(b.classical_ub, prev_c);
    EXPECT_GE(b.quantum_ub, prev_q);
    EXPECT_GE(b.classical_ub, b.classical_lb);
    prev_c = b.classical_ub;
    prev_q = b.quantum_ub;
  }
}

TEST(zero_error_threshold, affine_in_copies) {
  const EntropicConstants k = reference_constants();
  const double slope = std::log(k.Lambda_c_ub) / k.lambda_gap;
  EXPECT_NEAR(zero_error_threshold(k, 1), (std::log(4.0) + std::log(10.0)) / k.lambda_gap, 1e-9);
  for (int n = 1; n < 6; ++n)
    EXPECT_NEAR(zero_error_threshold(k, n + 1) - zero_error_threshold(k, n), slope, 1e-9);
  EXPECT_EQ(zero_error_threshold(EntropicConstants{kInf, 2.0, 4.0, kInf}), 0.0);
  EXPECT_EQ(code_of([] { zero_error_threshold(EntropicConstants{0.0, 2.0, 4.0, 0.0}); }), ErrorCode::ZeroGap);
  EXPECT_THROW(zero_error_threshold(k, 0), Error);
}

TEST(binary_entropy, values) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_NEAR(binary_entropy(0.11), binary_entropy(0.89), 1e-15);
}

TEST(lambda_gap, dense_channels) {
  const auto sigma = DensityMatrix::maximally_mixed(2);
  const ChannelDense id = identity_channel(2);
  EXPECT_TRUE(std::isinf(lambda_gap(id, peripheral_projection(id, sigma), sigma)));

  std::mt19937_64 rng(9);
  const ChannelDense r = testutil::random_channel(2, 2, rng);
  EXPECT_EQ(code_of([&] { lambda_gap(r, ComplexMatrix::Identity(4, 4), sigma); }), ErrorCode::NotGnsSymmetric);
}
