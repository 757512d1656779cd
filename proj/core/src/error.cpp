// Copyright 2026 The subrec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subrec/error.hpp"

namespace subrec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kFactorMismatch: return "FactorMismatch";
    case ErrorCode::kNotPartialIsometry: return "NotPartialIsometry";
    case ErrorCode::kNotTracePreserving: return "NotTracePreserving";
    case ErrorCode::kNotUnital: return "NotUnital";
    case ErrorCode::kCertificateMismatch: return "CertificateMismatch";
    case ErrorCode::kNumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorCode::kNotAnAlgebra: return "NotAnAlgebra";
    case ErrorCode::kUnluckySeed: return "UnluckySeed";
    case ErrorCode::kInternalContradiction: return "InternalContradiction";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace subrec
