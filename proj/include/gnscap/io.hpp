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

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "gnscap/channel.hpp"
#include "gnscap/spectral.hpp"

namespace gnscap::io {

// Complex matrices are written row-major as [[[re, im], ...], ...].
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, Index dim);

/// {"dim": d, "kraus": [matrix, ...]}
ChannelDense parse_channel(std::string_view text, const Tolerances& tol = {});
ChannelDense read_channel(const std::filesystem::path& path, const Tolerances& tol = {});
std::string channel_to_json(const ChannelDense& c);

/// {"dim": d, "matrix": matrix}
DensityMatrix parse_state(std::string_view text, const Tolerances& tol = {});
DensityMatrix read_state(const std::filesystem::path& path, const Tolerances& tol = {});
std::string state_to_json(const DensityMatrix& rho);

/// {"K": K, "blocks": [{"d": d, "m": m, "omega": matrix}, ...], "h0_dim": h}
nlohmann::json structure_to_json(const PeripheralStructure& s);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

}  // namespace gnscap::io
