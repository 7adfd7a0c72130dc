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

#include <map>
#include <utility>
#include <vector>

#include "cpgraph/graph.hpp"
#include "cpgraph/matrix.hpp"
#include "cpgraph/sequence.hpp"

namespace cpgraph {

/// Integer-weighted simple graph on 1..n. Edges of weight zero are never
/// stored; vertex weights may be zero.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n);

  int order() const noexcept { return static_cast<int>(vertex_weights_.size()); }

  long long vertex_weight(int v) const;
  void set_vertex_weight(int v, long long w);

  /// 0 when {u, v} is a non-edge.
  long long edge_weight(int u, int v) const;
  /// Adds `w` to the current weight of {u, v}; a zero sum removes the edge.
  void add_edge_weight(int u, int v, long long w);
  /// Keyed by (min, max).
  const std::map<std::pair<int, int>, long long>& edge_weights() const noexcept { return edges_; }

  /// Diagonal = vertex weights, off-diagonal = edge weights.
  IntMatrix adjacency_matrix() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<long long> vertex_weights_;
  std::map<std::pair<int, int>, long long> edges_;
};

/// Edge {1,2} of weight 1, and for k = 3..n the edges {b_{k-1},k} (+1),
/// {b_k,k} (-1), {k-1,k} (+1) merged by summing. Vertex weights 0,0,-2,...
WeightedGraph reduced_graph(const NonLeapingSequence& s);

/// Column k is e_k for k <= 2, else e_k - e_{a_k} - e_{k-1} + e_{a_{k-1}}.
IntMatrix reducing_matrix(const NeighborhoodSequence& ns);

/// E^T D E. Throws DimensionMismatch.
IntMatrix congruence_reduce(const IntMatrix& d, const IntMatrix& e);

/// Tridiagonal, -2 on the diagonal and 1 beside it. Order 0 is the empty matrix.
IntMatrix weighted_path_matrix(int n);

struct SeesawParams {
  int left = 0;   // sum of (p_k - 2) over odd k
  int right = 0;  // sum of (p_k - 2) over even k
  friend bool operator==(const SeesawParams&, const SeesawParams&) = default;
};

/// Vertices 1, 2 (weight 0, joined); path 3..2+left hangs from 2 by vertex 3,
/// path 3+left..2+left+right hangs from 2 by vertex 3+left.
WeightedGraph seesaw_graph(SeesawParams params);
SeesawParams seesaw_params(const CliquePathSpec& spec);

/// Vertex map from reduced_graph(expand(spec)) onto seesaw_graph(seesaw_params(spec)):
/// map[v-1] is the seesaw label of reduced vertex v. Odd cliques feed the
/// left path and even cliques the right path, in order.
std::vector<int> seesaw_vertex_map(const CliquePathSpec& spec);

/// True iff `map` (map[v-1] = image of v) is a weight-preserving isomorphism.
bool is_weighted_isomorphism(const WeightedGraph& from, const WeightedGraph& to, const std::vector<int>& map);

}  // namespace cpgraph
