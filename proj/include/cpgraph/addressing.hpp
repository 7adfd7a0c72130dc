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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpgraph/graph.hpp"

namespace cpgraph {

/// One string over {0,1,*} of a common length d per vertex (index v-1).
struct AddressScheme {
  int d = 0;
  std::vector<std::string> addresses;
  friend bool operator==(const AddressScheme&, const AddressScheme&) = default;
};

/// Positions where one address has 0 and the other 1.
/// Throws LengthMismatch or InvalidAddress.
int address_distance(std::string_view a, std::string_view b);

/// Throws SizeMismatch when the scheme does not cover the graph.
bool verify_scheme(const LabeledGraph& g, const AddressScheme& scheme);

inline constexpr int kMaxSearchVertices = 6;
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking for a scheme of length d. Vertices are assigned in
/// breadth-first order; columns are kept in nondecreasing lexicographic order.
/// Returns nullopt only after the whole space was covered.
/// Throws TooLarge (n > 6), BudgetExceeded, Disconnected.
std::optional<AddressScheme> search_scheme(const LabeledGraph& g, int d,
                                           std::uint64_t budget = kDefaultSearchBudget,
                                           SearchStats* stats = nullptr);

/// Smallest d admitting a scheme, scanning upward from max(n+, n-) of D(G).
int exact_N(const LabeledGraph& g, std::uint64_t budget = kDefaultSearchBudget);

}  // namespace cpgraph
