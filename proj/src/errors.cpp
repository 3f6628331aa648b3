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

#include "gnscap/errors.hpp"

namespace gnscap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::NotCompletelyPositive: return "NotCompletelyPositive";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::SigmaNotFullRank: return "SigmaNotFullRank";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::NotGnsSymmetric: return "NotGnsSymmetric";
    case ErrorCode::IllConditionedSpectrum: return "IllConditionedSpectrum";
    case ErrorCode::StructureInconsistent: return "StructureInconsistent";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::DeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::ZeroGap: return "ZeroGap";
    case ErrorCode::InvalidProbabilities: return "InvalidProbabilities";
    case ErrorCode::InvalidEigenvalues: return "InvalidEigenvalues";
    case ErrorCode::FractionalPowerOfNegative: return "FractionalPowerOfNegative";
    case ErrorCode::NotInNormalizer: return "NotInNormalizer";
    case ErrorCode::SeriesMissing: return "SeriesMissing";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

bool is_io_error(ErrorCode code) {
  return code == ErrorCode::IoError || code == ErrorCode::ParseError;
}

}  // namespace gnscap
