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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gnscap/pauli.hpp"

namespace gnscap::stabilizer {

/// Phase-free Pauli string in binary symplectic form: qubit i carries X iff
/// bit i of xbits is set, Z iff bit i of zbits is set, Y iff both.
struct PauliString {
  int n = 0;
  std::uint64_t xbits = 0;
  std::uint64_t zbits = 0;

  static PauliString identity(int n);
  /// Parses e.g. "XZZXI"; character i acts on qubit i.
  static PauliString from_string(std::string_view s);
  /// Single-qubit Pauli `which` (1 = X, 2 = Y, 3 = Z) on qubit `q`.
  static PauliString single(int n, int q, int which);

  int weight() const;
  /// 0 = I, 1 = X, 2 = Y, 3 = Z on qubit q.
  int at(int q) const;
  std::string str() const;

  /// Product up to phase.
  PauliString operator*(const PauliString& other) const;
  bool operator==(const PauliString&) const = default;
};

/// 1 iff the two strings anticommute.
int symplectic_product(const PauliString& a, const PauliString& b);

enum class LogicalClass { I = 0, X = 1, Y = 2, Z = 3 };

struct StabilizerCode {
  int n = 0;
  int k = 0;
  std::vector<PauliString> generators;
  PauliString logical_x;
  PauliString logical_z;
  /// Indexed by syndrome; bit i of the index is the outcome of generator i.
  std::vector<PauliString> syndrome_table;
};

/// Builds a code from generators and logicals, validating commutation
/// relations and filling the syndrome table with minimal-weight coset
/// leaders (ties broken by lexicographic (xbits, zbits)).
StabilizerCode make_code(std::vector<PauliString> generators, PauliString logical_x,
                         PauliString logical_z);

/// The [[5,1,3]] code: XZZXI, IXZZX, XIXZZ, ZXIXZ with logical XXXXX, ZZZZZ.
const StabilizerCode& five_qubit_code();

std::uint32_t syndrome(const StabilizerCode& code, const PauliString& e);

LogicalClass logical_class(const StabilizerCode& code, const PauliString& residual);

/// Residual logical class after hard-decision syndrome-table decoding of e.
LogicalClass decode(const StabilizerCode& code, const PauliString& e);

struct LogicalChannelResult {
  pauli::PauliChannel q = pauli::PauliChannel::identity();
  std::array<double, 4> mass{};  // indexed by LogicalClass
};

/// Exact logical Pauli channel under i.i.d. noise p on every physical qubit,
/// by enumeration of all 4^n error strings.
LogicalChannelResult logical_channel(const StabilizerCode& code, const pauli::PauliChannel& p);

/// Recursive concatenation: q(1) = L(p), q(l) = L(q(l-1)).
LogicalChannelResult concatenated_logical_channel(const StabilizerCode& code,
                                                  const pauli::PauliChannel& p, int level);

/// Deterministic pairwise (tree) summation.
double pairwise_sum(const double* first, std::size_t count);

}  // namespace gnscap::stabilizer
