// Copyright 2026 The cpgraph Authors
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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cpgraph {

enum class ErrorKind {
  // sequences
  LengthTooShort,
  HeadMismatch,
  LeapViolation,
  PartTooSmall,
  IndexOutOfRange,
  InvalidAnchor,
  // graphs
  Disconnected,
  EdgeNotInBase,
  VertexOutOfRange,
  // matrices
  DimensionMismatch,
  NotSymmetric,
  Singular,
  ConsecutiveZeroMinors,
  DimensionTooSmall,
  // formulas
  EmptyList,
  InvalidRecipe,
  CrossCheckFailed,
  // addressing
  LengthMismatch,
  SizeMismatch,
  InvalidAddress,
  TooLarge,
  BudgetExceeded,
  // input
  ParseError,
  DuplicateEdge,
  SelfLoop,
  UnknownSuite,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `where()` carries the offending
/// 1-based index (sequence position, input line) when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<long> where = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<long> where() const noexcept { return where_; }
  /// The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
  std::optional<long> where_;
};

}  // namespace cpgraph
