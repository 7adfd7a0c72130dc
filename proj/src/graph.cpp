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

#include "cpgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "cpgraph/error.hpp"

namespace cpgraph {

LabeledGraph::LabeledGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
}

LabeledGraph::LabeledGraph(int n, const std::vector<std::pair<int, int>>& edges) : LabeledGraph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void LabeledGraph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " outside [1, " + std::to_string(n_) + "]");
  }
}

void LabeledGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(u));
  auto& nu = adj_[static_cast<std::size_t>(u)];
  const auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) {
    throw Error(ErrorKind::DuplicateEdge, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} repeated");
  }
  nu.insert(it, v);
  auto& nv = adj_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++m_;
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  const auto& nu = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& LabeledGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int LabeledGraph::add_vertex() {
  adj_.emplace_back();
  return ++n_;
}

bool LabeledGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  std::vector<int> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n_;
}

LabeledGraph LabeledGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> index(static_cast<std::size_t>(n_) + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i) + 1;
  }
  LabeledGraph sub(static_cast<int>(vertices.size()));
  for (int u : vertices)
    for (int v : adj_[static_cast<std::size_t>(u)]) {
      const int iu = index[static_cast<std::size_t>(u)];
      const int iv = index[static_cast<std::size_t>(v)];
      if (iv != 0 && iu < iv) sub.add_edge(iu, iv);
    }
  return sub;
}

LabeledGraph complete_graph(int n) {
  LabeledGraph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph path_graph(int n) {
  LabeledGraph g(n);
  for (int u = 1; u < n; ++u) g.add_edge(u, u + 1);
  return g;
}

LabeledGraph cycle_graph(int n) {
  LabeledGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n, 1);
  return g;
}

LabeledGraph build_cp_graph(const NeighborhoodSequence& ns) {
  LabeledGraph g(ns.size());
  for (int k = 2; k <= ns.size(); ++k)
    for (int w : ns.window(k)) g.add_edge(w, k);
  return g;
}

std::vector<std::vector<int>> distance_table(const LabeledGraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  std::deque<int> queue;
  for (int s = 1; s <= n; ++s) {
    auto& row = dist[static_cast<std::size_t>(s - 1)];
    row[static_cast<std::size_t>(s - 1)] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (row[static_cast<std::size_t>(v - 1)] < 0) {
          row[static_cast<std::size_t>(v - 1)] = row[static_cast<std::size_t>(u - 1)] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int t = 1; t <= n; ++t) {
      if (row[static_cast<std::size_t>(t - 1)] < 0) {
        throw Error(ErrorKind::Disconnected,
                    "no path between " + std::to_string(s) + " and " + std::to_string(t));
      }
    }
  }
  return dist;
}

IntMatrix all_pairs_distances(const LabeledGraph& g) {
  const auto table = distance_table(g);
  IntMatrix d(table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) d(i, j) = table[i][j];
  return d;
}

Attachment attach(const LabeledGraph& base, std::pair<int, int> edge, const LabeledGraph& cp) {
  const auto [v1, v2] = edge;
  if (!base.has_edge(v1, v2)) {
    throw Error(ErrorKind::EdgeNotInBase,
                "{" + std::to_string(v1) + "," + std::to_string(v2) + "} is not an edge of the base graph");
  }
  if (cp.order() < 2 || !cp.has_edge(1, 2)) {
    throw Error(ErrorKind::EdgeNotInBase, "attached graph lacks the edge {1,2}");
  }
  Attachment out{base, {}};
  out.cp_label.resize(static_cast<std::size_t>(cp.order()));
  out.cp_label[0] = v1;
  out.cp_label[1] = v2;
  for (int k = 3; k <= cp.order(); ++k) out.cp_label[static_cast<std::size_t>(k - 1)] = out.graph.add_vertex();
  for (auto [u, v] : cp.edges()) {
    if (u <= 2 && v <= 2) continue;  // the identified edge
    out.graph.add_edge(out.cp_label[static_cast<std::size_t>(u - 1)], out.cp_label[static_cast<std::size_t>(v - 1)]);
  }
  return out;
}

namespace {

// Hopcroft-Tarjan with an edge stack; emits each block's vertex set.
struct BlockFinder {
  const LabeledGraph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<int>> found;
  std::vector<char> is_cut;
  int timer = 0;

  explicit BlockFinder(const LabeledGraph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.order()) + 1, 0),
        low(static_cast<std::size_t>(graph.order()) + 1, 0),
        is_cut(static_cast<std::size_t>(graph.order()) + 1, 0) {}

  void pop_block(int u, int v) {
    std::set<int> verts;
    while (true) {
      const auto e = stack.back();
      stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == std::make_pair(u, v)) break;
    }
    found.emplace_back(verts.begin(), verts.end());
  }

  // iterative DFS to stay safe on long paths
  void run(int root) {
    struct Frame {
      int v, parent;
      std::size_t next;
      int children;
    };
    std::vector<Frame> frames{{root, 0, 0, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = ++timer;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const int w = nbrs[f.next++];
        const auto wi = static_cast<std::size_t>(w);
        if (disc[wi] == 0) {
          stack.emplace_back(f.v, w);
          ++f.children;
          disc[wi] = low[wi] = ++timer;
          frames.push_back({w, f.v, 0, 0});
        } else if (w != f.parent && disc[wi] < disc[static_cast<std::size_t>(f.v)]) {
          stack.emplace_back(f.v, w);
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      Frame& up = frames.back();
      const auto ui = static_cast<std::size_t>(up.v);
      const auto vi = static_cast<std::size_t>(done.v);
      low[ui] = std::min(low[ui], low[vi]);
      if (low[vi] >= disc[ui]) {
        if (up.parent != 0 || up.children > 1) is_cut[ui] = 1;
        pop_block(up.v, done.v);
      }
    }
  }
};

}  // namespace

std::vector<Block> blocks(const LabeledGraph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "blocks need a connected graph");
  std::vector<Block> out;
  if (g.order() == 0) return out;
  if (g.order() == 1) {
    out.push_back({LabeledGraph(1), {1}});
    return out;
  }
  BlockFinder finder(g);
  finder.run(1);
  std::sort(finder.found.begin(), finder.found.end());
  for (auto& verts : finder.found) out.push_back({g.induced(verts), verts});
  return out;
}

std::vector<int> cut_vertices(const LabeledGraph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "cut vertices need a connected graph");
  std::vector<int> out;
  if (g.order() < 3) return out;
  BlockFinder finder(g);
  finder.run(1);
  for (int v = 1; v <= g.order(); ++v)
    if (finder.is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

LabeledGraph tree_from_pruefer(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int x : code) {
    if (x < 1 || x > n) throw Error(ErrorKind::VertexOutOfRange, "Pruefer entry " + std::to_string(x));
    ++degree[static_cast<std::size_t>(x)];
  }
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
  LabeledGraph t(n);
  for (int x : code) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    t.add_edge(leaf, x);
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
  }
  t.add_edge(*leaves.begin(), *std::next(leaves.begin()));
  return t;
}

std::vector<LabeledGraph> all_labeled_trees(int n) {
  if (n < 2) return n == 1 ? std::vector<LabeledGraph>{LabeledGraph(1)} : std::vector<LabeledGraph>{};
  std::vector<int> code(static_cast<std::size_t>(n - 2), 1);
  std::vector<LabeledGraph> out;
  while (true) {
    out.push_back(tree_from_pruefer(code));
    std::size_t i = code.size();
    while (i > 0 && code[i - 1] == n) code[--i] = 1;
    if (i == 0) break;
    ++code[i - 1];
  }
  return out;
}

}  // namespace cpgraph
