// Copyright 2026 The isodet Authors
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

namespace isodet {

enum class ErrorCode {
  CompositeModulus,
  CharTwoUnsupported,
  ResidueIsSquare,
  ParseError,
  NonSquare,
  OddDimension,
  NotSkewSymmetric,
  IndexOutOfRange,
  SizeMismatch,
  RankDeficient,
  DimensionMismatch,
  DegenerateForm,
  InvalidForm,
  InvalidConfig,
  InvalidParams,
  SignUndefinedForForm,
  InsufficientWittIndex,
  ConfigMismatch,
  SymmetryMismatch,
  ExceptionalNeedsSign,
  EigenvalueNotInField,
  WrongKind,
  BudgetExceeded,
  FieldMismatch,
  InfiniteField,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain error carrying a machine-readable code. Everything the library
/// rejects is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace isodet
