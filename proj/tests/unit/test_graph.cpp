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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cpgraph/error.hpp"
#include "cpgraph/graph.hpp"
#include "cpgraph/oracle.hpp"
#include "test_util.hpp"

namespace cpgraph {
namespace {

using testing::kind_of;

IntMatrix d1_expected() {
  return {{0, 1, 1, 2, 2, 3, 3, 3}, {1, 0, 1, 1, 2, 2, 2, 3}, {1, 1, 0, 1, 1, 2, 2, 2}, {2, 1, 1, 0, 1, 1, 1, 2},
          {2, 2, 1, 1, 0, 1, 1, 1}, {3, 2, 2, 1, 1, 0, 1, 1}, {3, 2, 2, 1, 1, 1, 0, 1}, {3, 3, 2, 2, 1, 1, 1, 0}};
}

IntMatrix d2_expected() {
  return {{0, 1, 1, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 2, 2, 2, 2}, {1, 1, 0, 1, 2, 2, 2, 2}, {1, 2, 1, 0, 1, 2, 2, 2},
          {1, 2, 2, 1, 0, 1, 1, 2}, {1, 2, 2, 2, 1, 0, 1, 1}, {1, 2, 2, 2, 1, 1, 0, 1}, {1, 2, 2, 2, 2, 1, 1, 0}};
}

// Every member of every family up to n = 7.
template <typename F>
void for_each_member(int max_n, F&& f) {
  for (int n = 2; n <= max_n; ++n)
    for (const auto& s : all_nonleaping_sequences(n))
      for (const auto& ns : enumerate_neighborhood_sequences(s)) f(ns, build_cp_graph(ns));
}

TEST(LabeledGraph, EdgeErrors) {
  LabeledGraph g(3);
  g.add_edge(1, 2);
  EXPECT_EQ(kind_of([&] { g.add_edge(2, 1); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([&] { g.add_edge(3, 3); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([&] { g.add_edge(0, 1); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([&] { g.add_edge(1, 4); }), ErrorKind::VertexOutOfRange);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.is_connected());
  EXPECT_EQ(g.add_vertex(), 4);
  EXPECT_EQ(g.order(), 4);
}

TEST(BuildCp, ExampleMembers) {
  const auto g1 = build_cp_graph(testing::g1_member());
  std::vector<int> earlier;
  for (int v : g1.neighbors(8))
    if (v < 8) earlier.push_back(v);
  EXPECT_EQ(earlier, (std::vector<int>{5, 6, 7}));
  EXPECT_EQ(g1, testing::load_graph("G1.txt"));
  EXPECT_EQ(build_cp_graph(testing::g2_member()), testing::load_graph("G2.txt"));
  EXPECT_EQ(build_cp_graph(NeighborhoodSequence(NonLeapingSequence({0, 1}), {})), complete_graph(2));
  for (const auto& ns : enumerate_neighborhood_sequences(expand_clique_path_spec({{3}}))) {
    EXPECT_EQ(build_cp_graph(ns), complete_graph(3));
  }
}

TEST(Distances, KnownMatrices) {
  EXPECT_EQ(all_pairs_distances(build_cp_graph(testing::g1_member())), d1_expected());
  EXPECT_EQ(all_pairs_distances(build_cp_graph(testing::g2_member())), d2_expected());
  EXPECT_EQ(all_pairs_distances(complete_graph(2)), (IntMatrix{{0, 1}, {1, 0}}));
  EXPECT_EQ(kind_of([] { all_pairs_distances(LabeledGraph(2)); }), ErrorKind::Disconnected);
}

TEST(Distances, AgreeWithFloydWarshall) {
  std::mt19937_64 rng(11);
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 9;
    LabeledGraph g(n);
    for (int v = 2; v <= n; ++v) g.add_edge(std::uniform_int_distribution<int>(1, v - 1)(rng), v);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    EXPECT_EQ(distance_table(g), oracle::floyd_distances(g));
  }
}

TEST(Distances, MetricLaws) {
  for_each_member(7, [](const NeighborhoodSequence&, const LabeledGraph& g) {
    const auto d = distance_table(g);
    const auto n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_EQ(d[i][i], 0);
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(d[i][j], d[j][i]);
        for (std::size_t k = 0; k < n; ++k) ASSERT_LE(d[i][j], d[i][k] + d[k][j]);
      }
    }
  });
}

TEST(CpStructure, WindowPlusVertexIsAClique) {
  for_each_member(8, [](const NeighborhoodSequence& ns, const LabeledGraph& g) {
    for (int k = 2; k <= ns.size(); ++k) {
      auto w = ns.window(k);
      w.push_back(k);
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) ASSERT_TRUE(g.has_edge(w[i], w[j]));
    }
  });
}

TEST(CpStructure, EdgesSpanIntervals) {
  for_each_member(8, [](const NeighborhoodSequence&, const LabeledGraph& g) {
    for (auto [a, b] : g.edges())
      for (int c = a + 1; c < b; ++c) ASSERT_TRUE(g.has_edge(a, c)) << a << ' ' << b << ' ' << c;
  });
}

TEST(CpStructure, ShortestPathsStayBelowTheLargerEnd) {
  for_each_member(7, [](const NeighborhoodSequence&, const LabeledGraph& g) {
    const auto d = distance_table(g);
    for (int b = 2; b <= g.order(); ++b) {
      std::vector<int> low;
      for (int v = 1; v <= b; ++v) low.push_back(v);
      const auto dl = distance_table(g.induced(low));
      for (int a = 1; a < b; ++a) ASSERT_EQ(dl[a - 1][b - 1], d[a - 1][b - 1]);
    }
  });
}

// D(e_k - e_{a_k}) restricted to h <= k.
std::vector<long> column_difference(const std::vector<std::vector<int>>& d, int k, int a) {
  std::vector<long> out;
  for (int h = 1; h <= k; ++h) out.push_back(d[h - 1][k - 1] - d[h - 1][a - 1]);
  return out;
}

TEST(CpStructure, FirstDifferenceLaw) {
  for_each_member(8, [](const NeighborhoodSequence& ns, const LabeledGraph& g) {
    const auto d = distance_table(g);
    const auto& s = ns.base();
    for (int k = 2; k <= ns.size(); ++k) {
      const auto col = column_difference(d, k, ns.anchor(k));
      for (int h = 1; h <= k; ++h) {
        const long want = h < s.b(k) ? 1 : (h < k ? 0 : -1);
        ASSERT_EQ(col[static_cast<std::size_t>(h - 1)], want) << "k=" << k << " h=" << h;
      }
    }
  });
}

TEST(CpStructure, SecondDifferenceLaw) {
  for_each_member(8, [](const NeighborhoodSequence& ns, const LabeledGraph& g) {
    const auto d = distance_table(g);
    const auto& s = ns.base();
    for (int k = 3; k <= ns.size(); ++k) {
      const auto now = column_difference(d, k, ns.anchor(k));
      auto prev = column_difference(d, k - 1, ns.anchor(k - 1));
      prev.push_back(d[k - 1][k - 2] - d[k - 1][ns.anchor(k - 1) - 1]);
      for (int h = 1; h <= k; ++h) {
        long want;
        if (h < s.b(k - 1)) {
          want = 0;
        } else if (h < s.b(k)) {
          want = 1;
        } else if (h < k - 1) {
          want = 0;
        } else if (h == k - 1) {
          want = 1;
        } else {
          want = ns.anchor(k - 1) == ns.anchor(k) ? -1 : 0;
        }
        ASSERT_EQ(now[static_cast<std::size_t>(h - 1)] - prev[static_cast<std::size_t>(h - 1)], want)
            << to_literal(s) << " k=" << k << " h=" << h;
      }
    }
  });
}

TEST(Attach, SizesAndLabels) {
  const auto c5 = cycle_graph(5);
  const auto g1 = build_cp_graph(testing::g1_member());
  const auto at = attach(c5, {1, 2}, g1);
  EXPECT_EQ(at.graph.order(), 11);
  EXPECT_EQ(at.cp_label, (std::vector<int>{1, 2, 6, 7, 8, 9, 10, 11}));
  EXPECT_EQ(at.graph, testing::load_graph("C5G1.txt"));
  EXPECT_EQ(attach(complete_graph(2), {1, 2}, complete_graph(2)).graph, complete_graph(2));
  EXPECT_EQ(kind_of([&] { attach(c5, {1, 3}, g1); }), ErrorKind::EdgeNotInBase);
  // orientation matters for the embedding
  const auto flipped = attach(c5, {2, 1}, g1);
  EXPECT_TRUE(flipped.graph.has_edge(1, 6) && flipped.graph.has_edge(2, 6));
  EXPECT_EQ(flipped.cp_label[0], 2);
}

TEST(Attach, RepeatedAttachmentAddsVertexCounts) {
  const auto base = cycle_graph(4);
  const auto h1 = build_cp_graph(testing::g1_member());
  const auto h2 = build_cp_graph(testing::member("2:3,4", {1, 2, 2}));
  const auto both = attach(attach(base, {1, 2}, h1).graph, {3, 4}, h2).graph;
  EXPECT_EQ(both.order(), 4 + (8 - 2) + (5 - 2));
}

TEST(Attach, DistanceLaws) {
  std::mt19937_64 rng(5);
  const auto base = cycle_graph(5);
  for (int n = 3; n <= 7; ++n) {
    for (const auto& s : all_nonleaping_sequences(n)) {
      for (const auto& ns : enumerate_neighborhood_sequences(s)) {
        const auto cp = build_cp_graph(ns);
        const auto at = attach(base, {1, 2}, cp);
        const auto d = distance_table(at.graph);
        auto lab = [&](int k) { return at.cp_label[static_cast<std::size_t>(k - 1)] - 1; };
        for (int x = 3; x <= 5; ++x) {
          for (int k = 3; k <= n; ++k) {
            const bool both = cp.has_edge(k, 1) && cp.has_edge(k, 2);
            if (!both) {
              ASSERT_EQ(d[x - 1][lab(k)], d[x - 1][lab(ns.anchor(k))] + 1);
            } else if (k >= 4) {
              ASSERT_EQ(d[x - 1][lab(k)], d[x - 1][lab(k - 1)]);
            }
          }
        }
      }
    }
  }
}

TEST(Blocks, SmallCases) {
  const auto p3 = blocks(path_graph(3));
  ASSERT_EQ(p3.size(), 2u);
  for (const auto& b : p3) EXPECT_EQ(b.graph, complete_graph(2));
  LabeledGraph tri_tail(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  const auto tb = blocks(tri_tail);
  ASSERT_EQ(tb.size(), 2u);
  std::multiset<int> orders{tb[0].graph.order(), tb[1].graph.order()};
  EXPECT_EQ(orders, (std::multiset<int>{2, 3}));
  EXPECT_EQ(cut_vertices(tri_tail), (std::vector<int>{3}));
  EXPECT_EQ(blocks(LabeledGraph(1)).size(), 1u);
  EXPECT_EQ(kind_of([] { blocks(LabeledGraph(3, {{1, 2}})); }), ErrorKind::Disconnected);
}

TEST(Blocks, AttachedCycleIsOneBlock) {
  const auto g = testing::load_graph("C5G1.txt");
  EXPECT_EQ(blocks(g).size(), 1u);
  EXPECT_TRUE(cut_vertices(g).empty());
}

TEST(Blocks, CutVerticesMatchDeletion) {
  // oracle: v is a cut vertex iff deleting it disconnects the graph
  std::mt19937_64 rng(21);
  std::bernoulli_distribution coin(0.25);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 10;
    LabeledGraph g(n);
    for (int v = 2; v <= n; ++v) g.add_edge(std::uniform_int_distribution<int>(1, v - 1)(rng), v);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    std::vector<int> want;
    for (int v = 1; v <= n; ++v) {
      std::vector<int> rest;
      for (int u = 1; u <= n; ++u)
        if (u != v) rest.push_back(u);
      if (n > 2 && !g.induced(rest).is_connected()) want.push_back(v);
    }
    EXPECT_EQ(cut_vertices(g), want);
    // blocks cover each edge exactly once
    std::size_t edges = 0;
    for (const auto& b : blocks(g)) edges += b.graph.edge_count();
    EXPECT_EQ(edges, g.edge_count());
  }
}

TEST(Trees, PrueferEnumerationMatchesEdgeSubsets) {
  for (int n = 2; n <= 6; ++n) {
    auto pruefer = all_labeled_trees(n);
    std::size_t expected = 1;
    for (int i = 0; i < n - 2; ++i) expected *= static_cast<std::size_t>(n);
    EXPECT_EQ(pruefer.size(), expected);
    std::sort(pruefer.begin(), pruefer.end(), [](const auto& a, const auto& b) { return a.edges() < b.edges(); });
    EXPECT_EQ(pruefer, oracle::trees_by_edge_subsets(n)) << n;
  }
  EXPECT_EQ(tree_from_pruefer({}), complete_graph(2));
  EXPECT_EQ(kind_of([] { tree_from_pruefer({7}); }), ErrorKind::VertexOutOfRange);
}

}  // namespace
}  // namespace cpgraph
