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

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cpgraph/matrix.hpp"

namespace cpgraph {

/// A validated non-leaping sequence q_1..q_n together with the derived
/// values b_k = k - q_k + 1. All accessors take 1-based positions.
///
/// Invariants: q_1 = 0, q_2 = 1 and 2 <= q_k <= q_{k-1} + 1 for k >= 3.
class NonLeapingSequence {
 public:
  /// Throws LengthTooShort, HeadMismatch or LeapViolation (with the offending k).
  explicit NonLeapingSequence(std::vector<int> q);

  int size() const noexcept { return static_cast<int>(q_.size()); }
  int q(int k) const { return q_.at(static_cast<std::size_t>(k - 1)); }
  /// b_2 = 2 is stored explicitly; b_1 is not meaningful.
  int b(int k) const { return k - q(k) + 1; }
  const std::vector<int>& values() const noexcept { return q_; }

  /// Prefix q_1..q_m, itself non-leaping for m >= 2.
  NonLeapingSequence prefix(int m) const;

  friend bool operator==(const NonLeapingSequence&, const NonLeapingSequence&) = default;

 private:
  std::vector<int> q_;
};

NonLeapingSequence validate_nonleaping(std::vector<int> q);

/// Clique-path shorthand 2:p_1,...,p_m (m = 0 allowed).
struct CliquePathSpec {
  std::vector<int> parts;

  int vertex_count() const;
  friend bool operator==(const CliquePathSpec&, const CliquePathSpec&) = default;
};

/// 0,1,[2,p_1-1],...,[2,p_m-1]. Throws PartTooSmall.
NonLeapingSequence expand_clique_path_spec(const CliquePathSpec& spec);

/// Parses "0,1,2,2" or "2:3,4,3" (whitespace ignored). Throws ParseError,
/// then any validation error of the parsed sequence.
NonLeapingSequence parse_sequence_literal(std::string_view text);
CliquePathSpec parse_clique_path_literal(std::string_view text);
std::string to_literal(const NonLeapingSequence& s);
std::string to_literal(const CliquePathSpec& spec);

/// A member of CP(s), identified by its anchor vector a_3..a_n.
/// W_k = {a_k} U [b_k, k-1], with W_1 = {} and W_2 = {1}, a_2 = 1.
class NeighborhoodSequence {
 public:
  /// Throws InvalidAnchor (with the offending k) or IndexOutOfRange when the
  /// anchor count is not n - 2.
  NeighborhoodSequence(NonLeapingSequence base, std::vector<int> anchors);

  const NonLeapingSequence& base() const noexcept { return base_; }
  int size() const noexcept { return base_.size(); }
  /// Anchors a_3..a_n.
  const std::vector<int>& anchors() const noexcept { return anchors_; }
  /// a_k for k >= 2.
  int anchor(int k) const;
  /// W_k in ascending order.
  std::vector<int> window(int k) const;

  friend bool operator==(const NeighborhoodSequence&, const NeighborhoodSequence&) = default;

 private:
  NonLeapingSequence base_;
  std::vector<int> anchors_;
};

/// {x in W_{k-1} : x < b_k} given a_3..a_{k-1} in `prior_anchors`.
std::vector<int> admissible_anchors(const NonLeapingSequence& base, int k,
                                    std::span<const int> prior_anchors);

/// Number of admissible anchors at position k. It does not depend on the
/// earlier anchors: a_{k-1} plus [b_{k-1}, min(k-2, b_k-1)].
int admissible_anchor_count(const NonLeapingSequence& base, int k);

/// Lexicographic odometer over all anchor vectors that extend a fixed prefix.
/// Single consumer. Partitioning on the first free anchor gives independent
/// streams.
class NeighborhoodSequenceStream {
 public:
  explicit NeighborhoodSequenceStream(NonLeapingSequence base, std::vector<int> fixed_prefix = {});

  std::optional<NeighborhoodSequence> next();

 private:
  bool descend(std::size_t from);

  NonLeapingSequence base_;
  std::size_t fixed_;
  std::vector<std::vector<int>> choices_;
  std::vector<std::size_t> cursor_;
  std::vector<int> anchors_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<NeighborhoodSequence> enumerate_neighborhood_sequences(
    const NonLeapingSequence& base, std::optional<std::size_t> limit = std::nullopt);

BigInt count_neighborhood_sequences(const NonLeapingSequence& base);

/// Uniform choice at each position (not uniform over the family).
NeighborhoodSequence random_neighborhood_sequence(const NonLeapingSequence& base, std::mt19937_64& rng);

/// Every non-leaping sequence of length n, in lexicographic order.
std::vector<NonLeapingSequence> all_nonleaping_sequences(int n);
NonLeapingSequence random_nonleaping_sequence(int n, std::mt19937_64& rng);

}  // namespace cpgraph
