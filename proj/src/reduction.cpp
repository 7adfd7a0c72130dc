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

#include "cpgraph/reduction.hpp"

#include <algorithm>

#include "cpgraph/error.hpp"

namespace cpgraph {

WeightedGraph::WeightedGraph(int n) : vertex_weights_(static_cast<std::size_t>(n), 0) {}

long long WeightedGraph::vertex_weight(int v) const {
  if (v < 1 || v > order()) throw Error(ErrorKind::VertexOutOfRange, "vertex weight index out of range");
  return vertex_weights_[static_cast<std::size_t>(v - 1)];
}

void WeightedGraph::set_vertex_weight(int v, long long w) {
  if (v < 1 || v > order()) throw Error(ErrorKind::VertexOutOfRange, "vertex weight index out of range");
  vertex_weights_[static_cast<std::size_t>(v - 1)] = w;
}

long long WeightedGraph::edge_weight(int u, int v) const {
  const auto it = edges_.find(std::minmax(u, v));
  return it == edges_.end() ? 0 : it->second;
}

void WeightedGraph::add_edge_weight(int u, int v, long long w) {
  if (u < 1 || u > order() || v < 1 || v > order()) {
    throw Error(ErrorKind::VertexOutOfRange, "edge endpoint out of range");
  }
  if (u == v) throw Error(ErrorKind::SelfLoop, "weighted graphs carry loops as vertex weights");
  const std::pair<int, int> key = std::minmax(u, v);
  const long long sum = edge_weight(u, v) + w;
  if (sum == 0) {
    edges_.erase(key);
  } else {
    edges_[key] = sum;
  }
}

IntMatrix WeightedGraph::adjacency_matrix() const {
  const auto n = static_cast<std::size_t>(order());
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = vertex_weights_[i];
  for (const auto& [key, w] : edges_) {
    const auto i = static_cast<std::size_t>(key.first - 1);
    const auto j = static_cast<std::size_t>(key.second - 1);
    a(i, j) = w;
    a(j, i) = w;
  }
  return a;
}

WeightedGraph reduced_graph(const NonLeapingSequence& s) {
  const int n = s.size();
  WeightedGraph h(n);
  h.add_edge_weight(1, 2, 1);
  for (int k = 3; k <= n; ++k) {
    // all three edges end at k, so merging happens within one k
    std::map<int, long long> acc;
    acc[s.b(k - 1)] += 1;
    acc[s.b(k)] -= 1;
    acc[k - 1] += 1;
    for (const auto& [u, w] : acc)
      if (w != 0) h.add_edge_weight(u, k, w);
    h.set_vertex_weight(k, -2);
  }
  return h;
}

IntMatrix reducing_matrix(const NeighborhoodSequence& ns) {
  const int n = ns.size();
  IntMatrix e(static_cast<std::size_t>(n));
  auto at = [&](int row, int col) -> BigInt& { return e(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1)); };
  for (int k = 1; k <= std::min(n, 2); ++k) at(k, k) = 1;
  for (int k = 3; k <= n; ++k) {
    at(k, k) += 1;
    at(ns.anchor(k), k) -= 1;
    at(k - 1, k) -= 1;
    at(ns.anchor(k - 1), k) += 1;
  }
  return e;
}

IntMatrix congruence_reduce(const IntMatrix& d, const IntMatrix& e) {
  if (d.order() != e.order()) {
    throw Error(ErrorKind::DimensionMismatch, "congruence needs matrices of equal order");
  }
  return e.transposed() * d * e;
}

IntMatrix weighted_path_matrix(int n) {
  if (n < 0) throw Error(ErrorKind::DimensionTooSmall, "negative path length");
  const auto order = static_cast<std::size_t>(n);
  IntMatrix a(order);
  for (std::size_t i = 0; i < order; ++i) {
    a(i, i) = -2;
    if (i + 1 < order) a(i, i + 1) = a(i + 1, i) = 1;
  }
  return a;
}

WeightedGraph seesaw_graph(SeesawParams params) {
  if (params.left < 0 || params.right < 0) {
    throw Error(ErrorKind::DimensionTooSmall, "seesaw path lengths must be nonnegative");
  }
  const int n = 2 + params.left + params.right;
  WeightedGraph h(n);
  h.add_edge_weight(1, 2, 1);
  auto hang = [&](int first, int length) {
    for (int i = 0; i < length; ++i) {
      const int v = first + i;
      h.set_vertex_weight(v, -2);
      h.add_edge_weight(i == 0 ? 2 : v - 1, v, 1);
    }
  };
  hang(3, params.left);
  hang(3 + params.left, params.right);
  return h;
}

SeesawParams seesaw_params(const CliquePathSpec& spec) {
  SeesawParams out;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    if (spec.parts[i] < 3) throw Error(ErrorKind::PartTooSmall, "clique size below 3", static_cast<long>(i) + 1);
    // parts are 1-indexed: index 0 is p_1 (odd)
    (i % 2 == 0 ? out.left : out.right) += spec.parts[i] - 2;
  }
  return out;
}

std::vector<int> seesaw_vertex_map(const CliquePathSpec& spec) {
  const SeesawParams params = seesaw_params(spec);
  std::vector<int> map{1, 2};
  int next_left = 3;
  int next_right = 3 + params.left;
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    for (int j = 0; j < spec.parts[i] - 2; ++j) map.push_back(i % 2 == 0 ? next_left++ : next_right++);
  }
  return map;
}

bool is_weighted_isomorphism(const WeightedGraph& from, const WeightedGraph& to, const std::vector<int>& map) {
  const int n = from.order();
  if (to.order() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n) + 1, 0);
  for (int image : map) {
    if (image < 1 || image > n || hit[static_cast<std::size_t>(image)]) return false;
    hit[static_cast<std::size_t>(image)] = 1;
  }
  auto img = [&](int v) { return map[static_cast<std::size_t>(v - 1)]; };
  for (int v = 1; v <= n; ++v)
    if (from.vertex_weight(v) != to.vertex_weight(img(v))) return false;
  if (from.edge_weights().size() != to.edge_weights().size()) return false;
  for (const auto& [key, w] : from.edge_weights())
    if (to.edge_weight(img(key.first), img(key.second)) != w) return false;
  return true;
}

}  // namespace cpgraph
