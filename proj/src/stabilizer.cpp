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

#include "gnscap/stabilizer.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

namespace gnscap::stabilizer {

namespace {

constexpr int kMaxQubits = 64;
// 4^n enumeration is only offered for small codes.
constexpr int kMaxEnumerationQubits = 10;

std::uint64_t mask(int n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

void check_same_size(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw Error(ErrorCode::DimensionMismatch, "Pauli strings differ in length");
}

/// Pauli string with per-qubit letters drawn from a base-4 counter.
PauliString from_index(int n, std::uint64_t index) {
  PauliString e = PauliString::identity(n);
  for (int q = 0; q < n; ++q) {
    const int which = static_cast<int>((index >> (2 * q)) & 3);
    if (which == 1 || which == 2) e.xbits |= std::uint64_t{1} << q;
    if (which == 2 || which == 3) e.zbits |= std::uint64_t{1} << q;
  }
  return e;
}

}  // namespace

PauliString PauliString::identity(int n) {
  if (n < 1 || n > kMaxQubits) throw Error(ErrorCode::InvalidArgument, "qubit count out of range");
  return PauliString{n, 0, 0};
}

PauliString PauliString::from_string(std::string_view s) {
  PauliString p = identity(static_cast<int>(s.size()));
  for (std::size_t q = 0; q < s.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (s[q]) {
      case 'I': case '_': break;
      case 'X': p.xbits |= bit; break;
      case 'Y': p.xbits |= bit; p.zbits |= bit; break;
      case 'Z': p.zbits |= bit; break;
      default: throw Error(ErrorCode::ParseError, "unexpected Pauli letter in " + std::string(s));
    }
  }
  return p;
}

PauliString PauliString::single(int n, int q, int which) {
  PauliString p = identity(n);
  if (q < 0 || q >= n || which < 0 || which > 3) {
    throw Error(ErrorCode::InvalidArgument, "single-qubit Pauli out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << q;
  if (which == 1 || which == 2) p.xbits |= bit;
  if (which == 2 || which == 3) p.zbits |= bit;
  return p;
}

int PauliString::weight() const { return std::popcount((xbits | zbits) & mask(n)); }

int PauliString::at(int q) const {
  const int x = static_cast<int>((xbits >> q) & 1);
  const int z = static_cast<int>((zbits >> q) & 1);
  if (x && z) return 2;
  return x ? 1 : (z ? 3 : 0);
}

std::string PauliString::str() const {
  static constexpr char kLetters[] = "IXYZ";
  std::string s;
  for (int q = 0; q < n; ++q) s.push_back(kLetters[at(q)]);
  return s;
}

PauliString PauliString::operator*(const PauliString& other) const {
  check_same_size(*this, other);
  return PauliString{n, xbits ^ other.xbits, zbits ^ other.zbits};
}

int symplectic_product(const PauliString& a, const PauliString& b) {
  check_same_size(a, b);
  return std::popcount((a.xbits & b.zbits) ^ (a.zbits & b.xbits)) & 1;
}

StabilizerCode make_code(std::vector<PauliString> generators, PauliString logical_x,
                         PauliString logical_z) {
  StabilizerCode code;
  code.n = logical_x.n;
  code.k = code.n - static_cast<int>(generators.size());
  if (code.k != 1) throw Error(ErrorCode::InvalidArgument, "only single-logical-qubit codes");
  if (code.n > kMaxEnumerationQubits) {
    throw Error(ErrorCode::ResourceLimit, "code too large for syndrome-table enumeration");
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    check_same_size(generators[i], logical_x);
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (symplectic_product(generators[i], generators[j]) != 0) {
        throw Error(ErrorCode::InvalidArgument, "stabilizer generators do not commute");
      }
    }
    if (symplectic_product(generators[i], logical_x) != 0 ||
        symplectic_product(generators[i], logical_z) != 0) {
      throw Error(ErrorCode::InvalidArgument, "logical operator does not commute with stabilizers");
    }
  }
  if (symplectic_product(logical_x, logical_z) != 1) {
    throw Error(ErrorCode::InvalidArgument, "logical X and Z must anticommute");
  }
  code.generators = std::move(generators);
  code.logical_x = logical_x;
  code.logical_z = logical_z;

  // Minimal-weight coset leaders, ties broken by (xbits, zbits).
  const std::size_t num_syndromes = std::size_t{1} << code.generators.size();
  const std::uint64_t num_strings = std::uint64_t{1} << (2 * code.n);
  std::vector<PauliString> all;
  all.reserve(num_strings);
  for (std::uint64_t idx = 0; idx < num_strings; ++idx) all.push_back(from_index(code.n, idx));
  std::sort(all.begin(), all.end(), [](const PauliString& a, const PauliString& b) {
    return std::make_tuple(a.weight(), a.xbits, a.zbits) <
           std::make_tuple(b.weight(), b.xbits, b.zbits);
  });
  code.syndrome_table.assign(num_syndromes, PauliString{});
  std::vector<bool> filled(num_syndromes, false);
  std::size_t remaining = num_syndromes;
  for (const auto& e : all) {
    const std::uint32_t s = syndrome(code, e);
    if (!filled[s]) {
      filled[s] = true;
      code.syndrome_table[s] = e;
      if (--remaining == 0) break;
    }
  }
  if (remaining != 0) throw Error(ErrorCode::InvalidArgument, "syndrome table is incomplete");
  return code;
}

const StabilizerCode& five_qubit_code() {
  static const StabilizerCode code = make_code(
      {PauliString::from_string("XZZXI"), PauliString::from_string("IXZZX"),
       PauliString::from_string("XIXZZ"), PauliString::from_string("ZXIXZ")},
      PauliString::from_string("XXXXX"), PauliString::from_string("ZZZZZ"));
  return code;
}

std::uint32_t syndrome(const StabilizerCode& code, const PauliString& e) {
  if (e.n != code.n) throw Error(ErrorCode::DimensionMismatch, "error string has wrong length");
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    s |= static_cast<std::uint32_t>(symplectic_product(e, code.generators[i])) << i;
  }
  return s;
}

LogicalClass logical_class(const StabilizerCode& code, const PauliString& residual) {
  if (syndrome(code, residual) != 0) {
    throw Error(ErrorCode::NotInNormalizer, "residual " + residual.str() + " has nonzero syndrome");
  }
  const int anti_z = symplectic_product(residual, code.logical_z);
  const int anti_x = symplectic_product(residual, code.logical_x);
  if (anti_z && anti_x) return LogicalClass::Y;
  if (anti_z) return LogicalClass::X;
  if (anti_x) return LogicalClass::Z;
  return LogicalClass::I;
}

LogicalClass decode(const StabilizerCode& code, const PauliString& e) {
  return logical_class(code, code.syndrome_table[syndrome(code, e)] * e);
}

double pairwise_sum(const double* first, std::size_t count) {
  if (count == 0) return 0.0;
  if (count == 1) return first[0];
  const std::size_t half = count / 2;
  return pairwise_sum(first, half) + pairwise_sum(first + half, count - half);
}

LogicalChannelResult logical_channel(const StabilizerCode& code, const pauli::PauliChannel& p) {
  const std::uint64_t num_strings = std::uint64_t{1} << (2 * code.n);
  std::array<std::vector<double>, 4> terms;
  for (auto& t : terms) t.assign(num_strings, 0.0);
  for (std::uint64_t idx = 0; idx < num_strings; ++idx) {
    const PauliString e = from_index(code.n, idx);
    double prob = 1.0;
    for (int q = 0; q < code.n; ++q) prob *= p[static_cast<std::size_t>(e.at(q))];
    if (prob == 0.0) continue;
    terms[static_cast<int>(decode(code, e))][idx] = prob;
  }
  LogicalChannelResult out;
  for (int c = 0; c < 4; ++c) out.mass[c] = pairwise_sum(terms[c].data(), terms[c].size());
  // Renormalize away the last-ulp drift so the result is a valid channel.
  const double total = out.mass[0] + out.mass[1] + out.mass[2] + out.mass[3];
  std::array<double, 4> q;
  for (int c = 0; c < 4; ++c) q[c] = out.mass[c] / total;
  out.q = pauli::PauliChannel::from_probabilities(q);
  return out;
}

LogicalChannelResult concatenated_logical_channel(const StabilizerCode& code,
                                                  const pauli::PauliChannel& p, int level) {
  if (level < 1) throw Error(ErrorCode::InvalidArgument, "concatenation level must be >= 1");
  LogicalChannelResult result = logical_channel(code, p);
  for (int l = 2; l <= level; ++l) result = logical_channel(code, result.q);
  return result;
}

}  // namespace gnscap::stabilizer
