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
#include <utility>
#include <vector>

#include "cpgraph/matrix.hpp"
#include "cpgraph/sequence.hpp"

namespace cpgraph {

/// Simple undirected graph on vertices 1..n.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);
  LabeledGraph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  /// Throws VertexOutOfRange, SelfLoop or DuplicateEdge.
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  /// Ascending neighbor labels.
  const std::vector<int>& neighbors(int v) const;
  /// All edges {u, v} with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Appends an isolated vertex and returns its label.
  int add_vertex();

  bool is_connected() const;
  LabeledGraph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<int>> adj_;  // index 0 unused
};

LabeledGraph complete_graph(int n);
LabeledGraph path_graph(int n);
LabeledGraph cycle_graph(int n);

/// Labeled tree on code.size() + 2 vertices. Throws VertexOutOfRange.
LabeledGraph tree_from_pruefer(const std::vector<int>& code);
/// Every labeled tree on n vertices (n^(n-2) of them), in Pruefer-code order.
std::vector<LabeledGraph> all_labeled_trees(int n);

/// Vertex k is joined to W_k for k = 2..n.
LabeledGraph build_cp_graph(const NeighborhoodSequence& ns);

/// Breadth-first distances, row i-1 = vertex i. Throws Disconnected.
std::vector<std::vector<int>> distance_table(const LabeledGraph& g);
IntMatrix all_pairs_distances(const LabeledGraph& g);

struct Attachment {
  LabeledGraph graph;
  /// cp_label[k-1] = label of CP vertex k in the result.
  std::vector<int> cp_label;
};

/// base ⊕_e cp: v1 is identified with CP vertex 1 and v2 with CP vertex 2;
/// CP vertices 3..n become n0+1..n0+n-2. Throws EdgeNotInBase.
Attachment attach(const LabeledGraph& base, std::pair<int, int> edge, const LabeledGraph& cp);

struct Block {
  LabeledGraph graph;
  /// labels[i-1] = label in the parent graph of block vertex i (ascending).
  std::vector<int> labels;
};

/// Biconnected components. Throws Disconnected.
std::vector<Block> blocks(const LabeledGraph& g);
std::vector<int> cut_vertices(const LabeledGraph& g);

}  // namespace cpgraph
