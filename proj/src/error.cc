// Copyright 2026 The isaowl Authors.
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

#include "isaowl/error.h"

namespace isaowl {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kUnknownDimension: return "UnknownDimension";
    case ErrorCode::kHypernymCycle: return "HypernymCycle";
    case ErrorCode::kMissingTag: return "MissingTag";
    case ErrorCode::kUnsaturatedSentence: return "UnsaturatedSentence";
    case ErrorCode::kRewriteDepthExceeded: return "RewriteDepthExceeded";
    case ErrorCode::kInvalidRule: return "InvalidRule";
    case ErrorCode::kMixedRoleKinds: return "MixedRoleKinds";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnsupportedPattern: return "UnsupportedPattern";
    case ErrorCode::kLabelingFailure: return "LabelingFailure";
    case ErrorCode::kInconsistencyDetected: return "InconsistencyDetected";
    case ErrorCode::kEmptyOntology: return "EmptyOntology";
    case ErrorCode::kFormatMismatch: return "FormatMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace isaowl
