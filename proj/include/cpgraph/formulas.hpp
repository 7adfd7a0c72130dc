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
#include <vector>

#include "cpgraph/graph.hpp"
#include "cpgraph/linalg.hpp"
#include "cpgraph/matrix.hpp"
#include "cpgraph/sequence.hpp"

namespace cpgraph {

/// Determinant, inertia and cofactor sum of a distance matrix.
/// When det != 0, sign(det) = (-1)^{n_minus}.
struct GraphInvariants {
  BigInt det;
  Inertia inertia;
  BigInt cof;
  friend bool operator==(const GraphInvariants&, const GraphInvariants&) = default;
};

GraphInvariants matrix_invariants(const IntMatrix& d);
/// Brute force on D(G). Throws Disconnected.
GraphInvariants distance_invariants(const LabeledGraph& g);
/// Values shared by every member of CP(s), read off the reduced graph.
GraphInvariants family_invariants(const NonLeapingSequence& s);

/// det = (-1)^{n-1}(1+l)(1+r), inertia (1, n-1, 0), cof = (-1)^{n-1} n.
GraphInvariants cp2_invariants(const CliquePathSpec& spec);
GraphInvariants linear_2tree_invariants(int n);
/// det = (-1)^{n-1}(n-1)2^{n-2}, cof = (-2)^{n-1}, inertia (1, n-1, 0).
GraphInvariants tree_invariants(int n);

struct DetCof {
  BigInt det;
  BigInt cof;
  friend bool operator==(const DetCof&, const DetCof&) = default;
};

/// Combines per-block values: cof = prod cof_i,
/// det = sum_i det_i * prod_{j != i} cof_j. Throws EmptyList.
DetCof compose_blocks(std::span<const DetCof> parts);

/// Where a new part is hung on the graph built so far: existing vertex
/// `vertex` is identified with vertex `at` of the new part.
struct Glue {
  int vertex = 0;
  int at = 1;
  friend bool operator==(const Glue&, const Glue&) = default;
};

struct RecipePart {
  CliquePathSpec spec;
  /// a_3..a_n of the chosen member; empty selects the lexicographically first.
  std::vector<int> anchors;
  /// Absent only for the first part.
  std::optional<Glue> glue;
  friend bool operator==(const RecipePart&, const RecipePart&) = default;
};

/// Construction plan for a connected graph whose blocks are 2-clique paths:
/// the first part is the root block and every later part shares exactly one
/// vertex with the graph built before it.
struct BlockCliquePathRecipe {
  std::vector<RecipePart> parts;
  friend bool operator==(const BlockCliquePathRecipe&, const BlockCliquePathRecipe&) = default;
};

struct RealizedRecipe {
  LabeledGraph graph;
  /// part_labels[i][k-1] = graph label of vertex k of part i.
  std::vector<std::vector<int>> part_labels;
  std::vector<NeighborhoodSequence> members;
};

/// Throws InvalidRecipe.
RealizedRecipe realize(const BlockCliquePathRecipe& recipe);

/// v_1..v_n such that every prefix on >= 2 vertices induces a connected graph
/// whose blocks are 2-clique paths, with distances inherited from G. Each
/// step removes the largest eligible vertex: a non-cut vertex lying in a
/// single clique at an end of a pendant (or the only) block.
std::vector<int> peel_ordering(const BlockCliquePathRecipe& recipe);

/// (1, n-1, 0), confirmed by leading minors of D(G) in peel order.
/// Throws InvalidRecipe or CrossCheckFailed.
Inertia block_2cp_inertia(const BlockCliquePathRecipe& recipe);

/// Random recipe with at most `max_vertices` vertices (at least 2).
BlockCliquePathRecipe random_recipe(std::mt19937_64& rng, int max_vertices, int max_part = 5);

/// Recipe of n-1 K_2 parts realizing `tree`; realized labels follow the
/// breadth-first discovery order from vertex 1.
BlockCliquePathRecipe tree_recipe(const LabeledGraph& tree);

std::size_t addressing_lower_bound(const Inertia& inertia);

}  // namespace cpgraph
