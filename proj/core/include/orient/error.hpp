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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orient {

enum class ErrorCode {
  SelfLoop,
  OutOfRange,
  ConflictingPair,
  SameVertex,
  NotDistinct,
  BadRadius,
  PreconditionViolated,
  BadParams,
  ConstructionInvalid,
  UnsupportedSpec,
  NotFound,
  BudgetExhausted,
  TransmitterPresent,
  TooSmall,
  CodeOutOfRange,
  TooLarge,
  UnknownClaim,
  BadHeader,
  BadRowLength,
  BadCharacter,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by the graph text parser. Line and column are 1-based and refer to
// the physical input, comments and blank lines included.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace orient
