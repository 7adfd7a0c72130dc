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

#include "cpgraph/error.hpp"

namespace cpgraph {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthTooShort: return "LengthTooShort";
    case ErrorKind::HeadMismatch: return "HeadMismatch";
    case ErrorKind::LeapViolation: return "LeapViolation";
    case ErrorKind::PartTooSmall: return "PartTooSmall";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidAnchor: return "InvalidAnchor";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::EdgeNotInBase: return "EdgeNotInBase";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ConsecutiveZeroMinors: return "ConsecutiveZeroMinors";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::InvalidRecipe: return "InvalidRecipe";
    case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InvalidAddress: return "InvalidAddress";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::optional<long> where)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message), where_(where) {}

}  // namespace cpgraph
