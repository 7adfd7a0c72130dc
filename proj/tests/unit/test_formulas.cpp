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

#include <algorithm>
#include <numeric>
#include <random>

#include "cpgraph/error.hpp"
#include "cpgraph/formulas.hpp"
#include "cpgraph/reduction.hpp"
#include "test_util.hpp"

namespace cpgraph {
namespace {

using testing::kind_of;

const Inertia kOneMinus(std::size_t n) { return Inertia{1, n - 1, 0}; }

RecipePart part(const std::string& spec, std::optional<Glue> glue = std::nullopt, std::vector<int> anchors = {}) {
  return RecipePart{parse_clique_path_literal(spec), std::move(anchors), glue};
}

// K_3 with a pendant edge at each of its vertices.
BlockCliquePathRecipe sun_recipe() {
  return {{part("2:3"), part("2:", Glue{1, 1}), part("2:", Glue{2, 1}), part("2:", Glue{3, 1})}};
}

bool graphs_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.has_edge(perm[static_cast<std::size_t>(u - 1)], perm[static_cast<std::size_t>(v - 1)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every 2-clique path on at most four vertices, built from specs directly.
std::vector<LabeledGraph> small_clique_path_catalog() {
  std::vector<LabeledGraph> out;
  for (const auto& spec : {CliquePathSpec{}, CliquePathSpec{{3}}, CliquePathSpec{{4}}, CliquePathSpec{{3, 3}}}) {
    for (const auto& ns : enumerate_neighborhood_sequences(expand_clique_path_spec(spec))) out.push_back(build_cp_graph(ns));
  }
  return out;
}

TEST(Invariants, SignMatchesNegativeCount) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& s : all_nonleaping_sequences(n)) {
      const auto inv = family_invariants(s);
      if (inv.det != 0) EXPECT_EQ(sign(inv.det), inv.inertia.n_minus % 2 == 0 ? 1 : -1);
    }
  }
}

TEST(FamilyConstancy, EveryMemberUpToEight) {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& s : all_nonleaping_sequences(n)) {
      const auto want = family_invariants(s);
      for (const auto& ns : enumerate_neighborhood_sequences(s)) {
        ASSERT_EQ(distance_invariants(build_cp_graph(ns)), want) << to_literal(s);
      }
    }
  }
}

TEST(CliquePathFormulas, Examples) {
  EXPECT_EQ(cp2_invariants({{3, 3, 3, 3}}), (GraphInvariants{-9, kOneMinus(6), -6}));
  EXPECT_EQ(cp2_invariants({}), (GraphInvariants{-1, kOneMinus(2), -2}));
  EXPECT_EQ(cp2_invariants({{3, 4, 3, 4}}), (GraphInvariants{-15, kOneMinus(8), -8}));
  EXPECT_EQ(distance_invariants(testing::load_graph("seesawex.txt")), cp2_invariants({{3, 4, 3, 4}}));
  EXPECT_EQ(kind_of([] { cp2_invariants({{2}}); }), ErrorKind::PartTooSmall);
  // the single 2-clique path 2:3,4 has five vertices
  EXPECT_EQ(cp2_invariants({{3, 4}}).inertia, kOneMinus(5));
}

TEST(CliquePathFormulas, MatchBruteForce) {
  std::vector<CliquePathSpec> layer{CliquePathSpec{}};
  for (int m = 0; m <= 4; ++m) {
    std::vector<CliquePathSpec> next;
    for (const auto& spec : layer) {
      const auto want = cp2_invariants(spec);
      ASSERT_EQ(family_invariants(expand_clique_path_spec(spec)), want) << to_literal(spec);
      for (const auto& ns : enumerate_neighborhood_sequences(expand_clique_path_spec(spec))) {
        ASSERT_EQ(distance_invariants(build_cp_graph(ns)), want) << to_literal(spec);
      }
      for (int p = 3; p <= 5; ++p) {
        auto grown = spec;
        grown.parts.push_back(p);
        next.push_back(grown);
      }
    }
    layer = std::move(next);
  }
}

TEST(CliquePathFormulas, DetIgnoresOrderWithinParity) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> p(3, 7);
  for (int trial = 0; trial < 40; ++trial) {
    CliquePathSpec spec;
    for (int i = 0; i < 2 + trial % 5; ++i) spec.parts.push_back(p(rng));
    std::vector<int> odd, even;
    for (std::size_t i = 0; i < spec.parts.size(); ++i) (i % 2 == 0 ? odd : even).push_back(spec.parts[i]);
    std::shuffle(odd.begin(), odd.end(), rng);
    std::shuffle(even.begin(), even.end(), rng);
    CliquePathSpec shuffled;
    for (std::size_t i = 0; i < spec.parts.size(); ++i) shuffled.parts.push_back(i % 2 == 0 ? odd[i / 2] : even[i / 2]);
    EXPECT_EQ(family_invariants(expand_clique_path_spec(shuffled)).det,
              family_invariants(expand_clique_path_spec(spec)).det);
  }
}

TEST(LinearTwoTrees, Formulas) {
  EXPECT_EQ(linear_2tree_invariants(6).det, -9);
  EXPECT_EQ(linear_2tree_invariants(2).det, -1);
  EXPECT_EQ(linear_2tree_invariants(7).det, 12);
  EXPECT_EQ(kind_of([] { linear_2tree_invariants(1); }), ErrorKind::DimensionTooSmall);
  for (int n = 2; n <= 12; ++n) {
    const CliquePathSpec spec{std::vector<int>(static_cast<std::size_t>(n - 2), 3)};
    EXPECT_EQ(linear_2tree_invariants(n), cp2_invariants(spec)) << n;
  }
  // every member on seven vertices
  for (const auto& ns : enumerate_neighborhood_sequences(expand_clique_path_spec({{3, 3, 3, 3, 3}}))) {
    EXPECT_EQ(distance_invariants(build_cp_graph(ns)), linear_2tree_invariants(7));
  }
  EXPECT_EQ(distance_invariants(testing::load_graph("threektrees_G2.txt")), linear_2tree_invariants(6));
  EXPECT_EQ(distance_invariants(testing::load_graph("threektrees_G3.txt")), linear_2tree_invariants(6));
}

TEST(Trees, Formulas) {
  EXPECT_EQ(tree_invariants(3).det, 4);
  EXPECT_EQ(tree_invariants(3).cof, 4);
  EXPECT_EQ(tree_invariants(2), (GraphInvariants{-1, kOneMinus(2), -2}));
  EXPECT_EQ(tree_invariants(5).det, 32);
  // the three shapes on five vertices: path, spider, star
  const LabeledGraph path = path_graph(5);
  const LabeledGraph spider(5, {{1, 2}, {2, 3}, {3, 4}, {2, 5}});
  const LabeledGraph star(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  for (const auto& t : {path, spider, star}) EXPECT_EQ(distance_invariants(t), tree_invariants(5));
  EXPECT_EQ(kind_of([] { tree_invariants(1); }), ErrorKind::DimensionTooSmall);
}

TEST(ComposeBlocks, Examples) {
  const DetCof k2{-1, -2};
  const std::vector<DetCof> two{k2, k2};
  EXPECT_EQ(compose_blocks(two), (DetCof{4, 4}));
  const auto p3 = distance_invariants(path_graph(3));
  EXPECT_EQ(compose_blocks(two), (DetCof{p3.det, p3.cof}));
  const std::vector<DetCof> one{{17, -3}};
  EXPECT_EQ(compose_blocks(one), one[0]);
  EXPECT_EQ(kind_of([] { compose_blocks({}); }), ErrorKind::EmptyList);
  for (int n = 2; n <= 12; ++n) {
    const std::vector<DetCof> blocks(static_cast<std::size_t>(n - 1), k2);
    const auto t = tree_invariants(n);
    EXPECT_EQ(compose_blocks(blocks), (DetCof{t.det, t.cof})) << n;
  }
}

TEST(ComposeBlocks, SignsComposeOnRandomBlockGraphs) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const auto recipe = random_recipe(rng, 12);
    const auto real = realize(recipe);
    std::vector<DetCof> parts;
    for (const auto& b : blocks(real.graph)) {
      const auto inv = distance_invariants(b.graph);
      const int want = b.graph.order() % 2 == 0 ? -1 : 1;
      ASSERT_EQ(sign(inv.det), want);
      ASSERT_EQ(sign(inv.cof), want);
      parts.push_back({inv.det, inv.cof});
    }
    const auto composed = compose_blocks(parts);
    const auto whole = distance_invariants(real.graph);
    EXPECT_EQ(composed, (DetCof{whole.det, whole.cof}));
    const int want = real.graph.order() % 2 == 0 ? -1 : 1;
    EXPECT_EQ(sign(composed.det), want);
    EXPECT_EQ(sign(composed.cof), want);
  }
}

TEST(Recipes, RealizeLabelsAndErrors) {
  const auto real = realize(sun_recipe());
  EXPECT_EQ(real.graph.order(), 6);
  EXPECT_EQ(real.graph.edge_count(), 6u);
  EXPECT_EQ(real.part_labels[1], (std::vector<int>{1, 4}));
  EXPECT_EQ(real.part_labels[3], (std::vector<int>{3, 6}));
  EXPECT_EQ(kind_of([] { realize({}); }), ErrorKind::InvalidRecipe);
  EXPECT_EQ(kind_of([] { realize({{part("2:3", Glue{1, 1})}}); }), ErrorKind::InvalidRecipe);
  EXPECT_EQ(kind_of([] { realize({{part("2:3"), part("2:")}}); }), ErrorKind::InvalidRecipe);
  EXPECT_EQ(kind_of([] { realize({{part("2:3"), part("2:", Glue{9, 1})}}); }), ErrorKind::InvalidRecipe);
  EXPECT_EQ(kind_of([] { realize({{part("2:3"), part("2:", Glue{1, 3})}}); }), ErrorKind::InvalidRecipe);
  EXPECT_EQ(kind_of([] { realize({{part("2:3,3", std::nullopt, {2, 2})}}); }), ErrorKind::InvalidRecipe);
}

TEST(PeelOrdering, SmallCases) {
  EXPECT_EQ(peel_ordering({{part("2:")}}), (std::vector<int>{1, 2}));
  // a linear 2-tree on five vertices: signs 0, -, +, -, +
  const BlockCliquePathRecipe l2t{{part("2:3,3,3")}};
  const auto order = peel_ordering(l2t);
  const auto d = all_pairs_distances(realize(l2t).graph);
  std::vector<std::size_t> idx;
  for (int v : order) idx.push_back(static_cast<std::size_t>(v - 1));
  std::vector<int> signs;
  for (const auto& m : leading_principal_minors(d.permuted(idx))) signs.push_back(sign(m));
  EXPECT_EQ(signs, (std::vector<int>{0, -1, 1, -1, 1}));
}

TEST(PeelOrdering, PrefixesStayBlockCliquePaths) {
  const auto catalog = small_clique_path_catalog();
  const auto recipe = sun_recipe();
  const auto g = realize(recipe).graph;
  const auto order = peel_ordering(recipe);
  ASSERT_EQ(order.size(), 6u);
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  const auto full = distance_table(g);
  for (std::size_t k = 2; k <= order.size(); ++k) {
    std::vector<int> prefix(order.begin(), order.begin() + static_cast<long>(k));
    const auto sub = g.induced(prefix);
    ASSERT_TRUE(sub.is_connected()) << k;
    for (const auto& b : blocks(sub)) {
      const bool known = std::any_of(catalog.begin(), catalog.end(),
                                     [&](const LabeledGraph& c) { return graphs_isomorphic(b.graph, c); });
      ASSERT_TRUE(known) << "prefix " << k;
    }
    // distances in the prefix are those of the whole graph
    const auto ds = distance_table(sub);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        ASSERT_EQ(ds[i][j], full[static_cast<std::size_t>(prefix[i] - 1)][static_cast<std::size_t>(prefix[j] - 1)]);
  }
}

TEST(PeelOrdering, RandomRecipesKeepDistances) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto recipe = random_recipe(rng, 12);
    const auto g = realize(recipe).graph;
    const auto order = peel_ordering(recipe);
    const auto full = distance_table(g);
    for (std::size_t k = 2; k <= order.size(); ++k) {
      std::vector<int> prefix(order.begin(), order.begin() + static_cast<long>(k));
      const auto sub = g.induced(prefix);
      ASSERT_TRUE(sub.is_connected());
      const auto ds = distance_table(sub);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
          ASSERT_EQ(ds[i][j], full[static_cast<std::size_t>(prefix[i] - 1)][static_cast<std::size_t>(prefix[j] - 1)]);
    }
  }
}

TEST(BlockInertia, Examples) {
  // a tree on six vertices
  const LabeledGraph tree(6, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
  EXPECT_EQ(block_2cp_inertia(tree_recipe(tree)), kOneMinus(6));
  EXPECT_EQ(block_2cp_inertia({{part("2:3,4")}}), kOneMinus(5));
  const BlockCliquePathRecipe tri_tail{{part("2:3"), part("2:", Glue{3, 1})}};
  EXPECT_EQ(block_2cp_inertia(tri_tail), kOneMinus(4));
  EXPECT_EQ(inertia_congruence(all_pairs_distances(realize(tri_tail).graph)), kOneMinus(4));
}

TEST(BlockInertia, RandomRecipes) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto recipe = random_recipe(rng, 12);
    const auto n = static_cast<std::size_t>(realize(recipe).graph.order());
    EXPECT_EQ(block_2cp_inertia(recipe), kOneMinus(n));
  }
}

TEST(TreeRecipe, RealizesAnIsomorphicTree) {
  for (const auto& t : all_labeled_trees(5)) {
    const auto recipe = tree_recipe(t);
    EXPECT_EQ(recipe.parts.size(), 4u);
    const auto g = realize(recipe).graph;
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_TRUE(graphs_isomorphic(g, t));
  }
}

TEST(Addressing, LowerBound) {
  EXPECT_EQ(addressing_lower_bound({1, 5, 0}), 5u);
  EXPECT_EQ(addressing_lower_bound({1, 1, 0}), 1u);
  EXPECT_EQ(addressing_lower_bound({3, 3, 2}), 3u);
}

TEST(AttachmentConstancy, ExamplePair) {
  const auto a = testing::load_graph("C5G1.txt");
  const auto b = testing::load_graph("C5G2.txt");
  EXPECT_EQ(determinant(all_pairs_distances(a)), determinant(all_pairs_distances(b)));
}

TEST(AttachmentConstancy, WholeFamiliesOnSmallBases) {
  const std::vector<LabeledGraph> bases{cycle_graph(5), complete_graph(4), path_graph(4),
                                        LabeledGraph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}})};
  for (const auto& base : bases) {
    for (const auto& s : all_nonleaping_sequences(6)) {
      std::optional<BigInt> common;
      for (const auto& ns : enumerate_neighborhood_sequences(s)) {
        const auto det = determinant(all_pairs_distances(attach(base, base.edges().front(), build_cp_graph(ns)).graph));
        if (!common) common = det;
        ASSERT_EQ(det, *common) << to_literal(s);
      }
    }
  }
}

}  // namespace
}  // namespace cpgraph
