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

#include "gnscap/io.hpp"

#include <fstream>
#include <sstream>

namespace gnscap::io {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::ParseError, "complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Index read_dim(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "document needs an integer \"dim\"");
  }
  const auto dim = doc["dim"].get<long long>();
  if (dim < 1) throw Error(ErrorCode::ParseError, "\"dim\" must be positive");
  return static_cast<Index>(dim);
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, Index dim) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim) {
    throw Error(ErrorCode::ParseError, "matrix must have " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
      throw Error(ErrorCode::ParseError, "matrix rows must have " + std::to_string(dim) + " entries");
    }
    for (Index c = 0; c < dim; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

ChannelDense parse_channel(std::string_view text, const Tolerances& tol) {
  const json doc = parse_document(text);
  const Index dim = read_dim(doc);
  if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty()) {
    throw Error(ErrorCode::ParseError, "channel needs a nonempty \"kraus\" array");
  }
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : doc["kraus"]) kraus.push_back(matrix_from_json(k, dim));
  return channel_from_kraus(std::move(kraus), tol);
}

ChannelDense read_channel(const std::filesystem::path& path, const Tolerances& tol) {
  return parse_channel(read_file(path), tol);
}

std::string channel_to_json(const ChannelDense& c) {
  json doc;
  doc["dim"] = c.dim();
  doc["kraus"] = json::array();
  for (const auto& k : c.kraus()) doc["kraus"].push_back(matrix_to_json(k));
  return doc.dump();
}

DensityMatrix parse_state(std::string_view text, const Tolerances& tol) {
  const json doc = parse_document(text);
  const Index dim = read_dim(doc);
  if (!doc.contains("matrix")) throw Error(ErrorCode::ParseError, "state needs a \"matrix\"");
  return DensityMatrix::from_matrix(matrix_from_json(doc["matrix"], dim), tol);
}

DensityMatrix read_state(const std::filesystem::path& path, const Tolerances& tol) {
  return parse_state(read_file(path), tol);
}

std::string state_to_json(const DensityMatrix& rho) {
  json doc;
  doc["dim"] = rho.dim();
  doc["matrix"] = matrix_to_json(rho.matrix());
  return doc.dump();
}

json structure_to_json(const PeripheralStructure& s) {
  json doc;
  doc["K"] = s.K();
  doc["blocks"] = json::array();
  for (const auto& b : s.blocks) {
    doc["blocks"].push_back({{"d", b.d}, {"m", b.m}, {"omega", matrix_to_json(b.omega)}});
  }
  doc["h0_dim"] = s.h0_dim;
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
}

}  // namespace gnscap::io
