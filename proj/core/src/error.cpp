// Copyright 2026 The orient Authors
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

#include "orient/error.hpp"

namespace orient {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ConflictingPair: return "ConflictingPair";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::NotDistinct: return "NotDistinct";
    case ErrorCode::BadRadius: return "BadRadius";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ConstructionInvalid: return "ConstructionInvalid";
    case ErrorCode::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::TransmitterPresent: return "TransmitterPresent";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::CodeOutOfRange: return "CodeOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::BadHeader: return "BadHeader";
    case ErrorCode::BadRowLength: return "BadRowLength";
    case ErrorCode::BadCharacter: return "BadCharacter";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(ErrorCode code, int line, int column, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

}  // namespace orient
