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

#include "cpgraph/formulas.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cpgraph/error.hpp"
#include "cpgraph/reduction.hpp"

namespace cpgraph {

namespace {

BigInt signed_pow(int base, int exp) {
  BigInt out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

BigInt alternating(int n) { return (n - 1) % 2 == 0 ? BigInt(1) : BigInt(-1); }

}  // namespace

GraphInvariants matrix_invariants(const IntMatrix& d) {
  return {determinant(d), inertia_congruence(d), cofactor_sum(d)};
}

GraphInvariants distance_invariants(const LabeledGraph& g) { return matrix_invariants(all_pairs_distances(g)); }

GraphInvariants family_invariants(const NonLeapingSequence& s) {
  const IntMatrix a = reduced_graph(s).adjacency_matrix();
  return {determinant(a), inertia_congruence(a), reduced_cofactor_sum(a)};
}

GraphInvariants cp2_invariants(const CliquePathSpec& spec) {
  const SeesawParams sp = seesaw_params(spec);  // validates parts
  const int n = spec.vertex_count();
  const auto order = static_cast<std::size_t>(n);
  return {alternating(n) * (1 + sp.left) * (1 + sp.right), Inertia{1, order - 1, 0}, alternating(n) * n};
}

GraphInvariants linear_2tree_invariants(int n) {
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "linear 2-trees have at least two vertices");
  const int floor_half = (n - 2) / 2;
  const int ceil_half = (n - 1) / 2;
  const auto order = static_cast<std::size_t>(n);
  return {alternating(n) * (1 + floor_half) * (1 + ceil_half), Inertia{1, order - 1, 0}, alternating(n) * n};
}

GraphInvariants tree_invariants(int n) {
  if (n < 2) throw Error(ErrorKind::DimensionTooSmall, "trees here have at least two vertices");
  const auto order = static_cast<std::size_t>(n);
  return {alternating(n) * (n - 1) * signed_pow(2, n - 2), Inertia{1, order - 1, 0}, signed_pow(-2, n - 1)};
}

DetCof compose_blocks(std::span<const DetCof> parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyList, "no blocks to compose");
  DetCof out{0, 1};
  for (const auto& p : parts) out.cof *= p.cof;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    BigInt term = parts[i].det;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) term *= parts[j].cof;
    out.det += term;
  }
  return out;
}

// --- recipes ----------------------------------------------------------------

RealizedRecipe realize(const BlockCliquePathRecipe& recipe) {
  if (recipe.parts.empty()) throw Error(ErrorKind::InvalidRecipe, "recipe has no parts");
  RealizedRecipe out;
  for (std::size_t i = 0; i < recipe.parts.size(); ++i) {
    const RecipePart& part = recipe.parts[i];
    const long where = static_cast<long>(i) + 1;
    NonLeapingSequence s = [&] {
      try {
        return expand_clique_path_spec(part.spec);
      } catch (const Error& e) {
        throw Error(ErrorKind::InvalidRecipe, e.detail(), where);
      }
    }();
    std::optional<NeighborhoodSequence> ns;
    try {
      if (part.anchors.empty() && s.size() > 2) {
        ns = NeighborhoodSequenceStream(s).next();
      } else {
        ns.emplace(s, part.anchors);
      }
    } catch (const Error& e) {
      throw Error(ErrorKind::InvalidRecipe, e.detail(), where);
    }
    const LabeledGraph block = build_cp_graph(*ns);
    std::vector<int> labels(static_cast<std::size_t>(block.order()));
    if (i == 0) {
      if (part.glue) throw Error(ErrorKind::InvalidRecipe, "the root part cannot be glued", where);
      out.graph = LabeledGraph(block.order());
      for (int k = 1; k <= block.order(); ++k) labels[static_cast<std::size_t>(k - 1)] = k;
    } else {
      if (!part.glue) throw Error(ErrorKind::InvalidRecipe, "part is missing its glue vertex", where);
      const Glue g = *part.glue;
      if (g.vertex < 1 || g.vertex > out.graph.order() || g.at < 1 || g.at > block.order()) {
        throw Error(ErrorKind::InvalidRecipe, "glue references a missing vertex", where);
      }
      for (int k = 1; k <= block.order(); ++k) {
        labels[static_cast<std::size_t>(k - 1)] = k == g.at ? g.vertex : out.graph.add_vertex();
      }
    }
    for (auto [u, v] : block.edges()) {
      out.graph.add_edge(labels[static_cast<std::size_t>(u - 1)], labels[static_cast<std::size_t>(v - 1)]);
    }
    out.part_labels.push_back(std::move(labels));
    out.members.push_back(std::move(*ns));
  }
  return out;
}

namespace {

// A 2-clique path viewed as its chain of maximal cliques; consecutive cliques
// share one edge. A bare K_2 block is a chain holding one 2-set.
using Chain = std::deque<std::set<int>>;

Chain clique_chain(const CliquePathSpec& spec, const NeighborhoodSequence& ns, const std::vector<int>& labels) {
  auto label = [&](int k) { return labels[static_cast<std::size_t>(k - 1)]; };
  Chain chain;
  if (spec.parts.empty()) {
    chain.push_back({label(1), label(2)});
    return chain;
  }
  int last = 2;
  for (int p : spec.parts) {
    last += p - 2;
    std::set<int> clique{label(last)};
    for (int w : ns.window(last)) clique.insert(label(w));
    chain.push_back(std::move(clique));
  }
  return chain;
}

}  // namespace

std::vector<int> peel_ordering(const BlockCliquePathRecipe& recipe) {
  const RealizedRecipe real = realize(recipe);
  std::vector<Chain> chains;
  for (std::size_t i = 0; i < recipe.parts.size(); ++i) {
    chains.push_back(clique_chain(recipe.parts[i].spec, real.members[i], real.part_labels[i]));
  }
  const int n = real.graph.order();
  std::vector<int> membership(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& chain : chains) {
    std::set<int> verts;
    for (const auto& c : chain) verts.insert(c.begin(), c.end());
    for (int v : verts) ++membership[static_cast<std::size_t>(v)];
  }

  std::vector<int> removed;
  int alive = n;
  while (alive > 2) {
    int best = 0;
    std::size_t best_chain = 0;
    for (std::size_t b = 0; b < chains.size(); ++b) {
      const Chain& chain = chains[b];
      if (chain.empty()) continue;
      std::set<int> verts;
      for (const auto& c : chain) verts.insert(c.begin(), c.end());
      const auto cuts = std::count_if(verts.begin(), verts.end(),
                                      [&](int v) { return membership[static_cast<std::size_t>(v)] > 1; });
      if (cuts > 1) continue;  // not pendant
      auto consider = [&](const std::set<int>& clique) {
        for (int v : clique) {
          if (membership[static_cast<std::size_t>(v)] > 1) continue;
          const auto holders = std::count_if(chain.begin(), chain.end(), [&](const auto& c) { return c.count(v) > 0; });
          if (holders == 1 && v > best) {
            best = v;
            best_chain = b;
          }
        }
      };
      consider(chain.front());
      if (chain.size() > 1) consider(chain.back());
    }
    if (best == 0) throw Error(ErrorKind::InvalidRecipe, "no removable vertex; recipe is not block-2CP");

    Chain& chain = chains[best_chain];
    auto& end = chain.front().count(best) ? chain.front() : chain.back();
    end.erase(best);
    if (chain.size() > 1 && end.size() == 2) {
      if (&end == &chain.front()) {
        chain.pop_front();
      } else {
        chain.pop_back();
      }
    } else if (chain.size() == 1 && end.size() == 1) {
      // a pendant K_2 vanished; its other vertex leaves this block
      --membership[static_cast<std::size_t>(*end.begin())];
      chain.clear();
    }
    removed.push_back(best);
    --alive;
  }

  std::vector<int> order;
  std::set<int> gone(removed.begin(), removed.end());
  for (int v = 1; v <= n; ++v)
    if (!gone.count(v)) order.push_back(v);
  order.insert(order.end(), removed.rbegin(), removed.rend());
  return order;
}

Inertia block_2cp_inertia(const BlockCliquePathRecipe& recipe) {
  const RealizedRecipe real = realize(recipe);
  const auto n = static_cast<std::size_t>(real.graph.order());
  const Inertia expected{1, n - 1, 0};
  std::vector<std::size_t> perm;
  for (int v : peel_ordering(recipe)) perm.push_back(static_cast<std::size_t>(v - 1));
  const IntMatrix d = all_pairs_distances(real.graph).permuted(perm);
  Inertia computed;
  try {
    computed = inertia_leading_minors(d);
  } catch (const Error& e) {
    throw Error(ErrorKind::CrossCheckFailed, std::string("leading-minor inertia unavailable: ") + e.what());
  }
  if (!(computed == expected)) {
    throw Error(ErrorKind::CrossCheckFailed, "leading minors disagree with (1, n-1, 0)");
  }
  return expected;
}

BlockCliquePathRecipe random_recipe(std::mt19937_64& rng, int max_vertices, int max_part) {
  if (max_vertices < 2) throw Error(ErrorKind::DimensionTooSmall, "recipes need room for two vertices");
  std::uniform_int_distribution<int> target_dist(2, max_vertices);
  const int target = target_dist(rng);
  auto random_spec = [&](int budget) {
    // budget = number of new vertices beyond the first two the part may add
    CliquePathSpec spec;
    std::uniform_int_distribution<int> m_dist(0, 3);
    const int m = m_dist(rng);
    for (int i = 0; i < m; ++i) {
      const int room = std::min(max_part, budget + 2);
      if (room < 3) break;
      std::uniform_int_distribution<int> p_dist(3, room);
      const int p = p_dist(rng);
      spec.parts.push_back(p);
      budget -= p - 2;
    }
    return spec;
  };
  auto random_anchors = [&](const CliquePathSpec& spec) {
    const NonLeapingSequence s = expand_clique_path_spec(spec);
    return random_neighborhood_sequence(s, rng).anchors();
  };

  BlockCliquePathRecipe recipe;
  RecipePart root;
  root.spec = random_spec(target - 2);
  root.anchors = random_anchors(root.spec);
  recipe.parts.push_back(root);
  int n = root.spec.vertex_count();
  while (n < target) {
    RecipePart part;
    // a glued part adds vertex_count - 1 vertices
    part.spec = random_spec(target - n - 1);
    part.anchors = random_anchors(part.spec);
    std::uniform_int_distribution<int> host(1, n);
    std::uniform_int_distribution<int> at(1, part.spec.vertex_count());
    part.glue = Glue{host(rng), at(rng)};
    n += part.spec.vertex_count() - 1;
    recipe.parts.push_back(std::move(part));
  }
  return recipe;
}

BlockCliquePathRecipe tree_recipe(const LabeledGraph& tree) {
  if (tree.order() < 2 || !tree.is_connected() || tree.edge_count() + 1 != static_cast<std::size_t>(tree.order())) {
    throw Error(ErrorKind::InvalidRecipe, "not a tree on at least two vertices");
  }
  BlockCliquePathRecipe recipe;
  std::vector<int> realized(static_cast<std::size_t>(tree.order()) + 1, 0);
  realized[1] = 1;
  int next = 2;
  std::deque<int> queue{1};
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : tree.neighbors(u)) {
      if (realized[static_cast<std::size_t>(v)] != 0) continue;
      realized[static_cast<std::size_t>(v)] = next++;
      RecipePart part;
      if (!recipe.parts.empty()) part.glue = Glue{realized[static_cast<std::size_t>(u)], 1};
      recipe.parts.push_back(std::move(part));
      queue.push_back(v);
    }
  }
  return recipe;
}

std::size_t addressing_lower_bound(const Inertia& inertia) { return std::max(inertia.n_plus, inertia.n_minus); }

}  // namespace cpgraph
