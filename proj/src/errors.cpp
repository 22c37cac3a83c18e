// Copyright 2026 The qcorr Authors
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

#include "qcorr/errors.hpp"

#include <cstdlib>
#include <string>

#include "qcorr/tolerance.hpp"

namespace qcorr {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonHermitianInput: return "NonHermitianInput";
    case ErrorCode::kInvalidState: return "InvalidState";
    case ErrorCode::kConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kNotAProductSpace: return "NotAProductSpace";
    case ErrorCode::kWeightSumInvalid: return "WeightSumInvalid";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kAbsoluteContinuityViolation: return "AbsoluteContinuityViolation";
    case ErrorCode::kNotProjective: return "NotProjective";
    case ErrorCode::kNonCommuting: return "NonCommuting";
    case ErrorCode::kJointMarginalMismatch: return "JointMarginalMismatch";
    case ErrorCode::kInvalidPovm: return "InvalidPovm";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kUnknownExample: return "UnknownExample";
  }
  return "Unknown";
}

bool Error::is_validation() const noexcept {
  switch (code_) {
    case ErrorCode::kParseError:
    case ErrorCode::kValidationError:
    case ErrorCode::kUnknownExample:
    case ErrorCode::kUnknownLabel:
    case ErrorCode::kInvalidState:
    case ErrorCode::kInvalidPovm:
    case ErrorCode::kWeightSumInvalid:
    case ErrorCode::kNonHermitianInput:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kSpaceMismatch:
      return true;
    default:
      return false;
  }
}

double validation_eps() {
  static const double eps = [] {
    if (const char* env = std::getenv("QCORR_EPS")) {
      try {
        double v = std::stod(env);
        if (v > 0.0) return v;
      } catch (...) {
      }
    }
    return kEps;
  }();
  return eps;
}

}  // namespace qcorr
