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

#include "cpgraph/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "cpgraph/error.hpp"
#include "cpgraph/formulas.hpp"
#include "cpgraph/reduction.hpp"

namespace cpgraph {

namespace {

std::string show(const GraphInvariants& inv) {
  std::ostringstream os;
  os << "det " << inv.det << " inertia (" << inv.inertia.n_plus << ',' << inv.inertia.n_minus << ','
     << inv.inertia.n_zero << ") cof " << inv.cof;
  return os.str();
}

CaseResult guarded(std::string label, const std::function<std::string()>& body) {
  // body returns an empty string on success, else what went wrong
  CaseResult r{std::move(label), true, {}};
  try {
    r.detail = body();
    r.ok = r.detail.empty();
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = e.what();
  }
  return r;
}

std::string anchors_label(const NeighborhoodSequence& ns) {
  std::string out = "[";
  for (std::size_t i = 0; i < ns.anchors().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ns.anchors()[i]);
  }
  return out + "]";
}

// -- congruence and family constancy -----------------------------------------

std::vector<NonLeapingSequence> sequences_up_to(int max_n) {
  std::vector<NonLeapingSequence> out;
  for (int n = 2; n <= max_n; ++n) {
    auto batch = all_nonleaping_sequences(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::string congruence_mismatch(const NeighborhoodSequence& ns, const IntMatrix& reduced) {
  const IntMatrix d = all_pairs_distances(build_cp_graph(ns));
  const IntMatrix got = congruence_reduce(d, reducing_matrix(ns));
  if (got == reduced) return {};
  return "anchors " + anchors_label(ns) + ": E^T D E differs from the reduced adjacency";
}

SuiteResult congruence_suite(std::uint64_t seed, int scale) {
  SuiteResult out;
  const auto bases = sequences_up_to(scale);
  // random members a few sizes past the exhaustive range
  std::mt19937_64 rng(seed);
  const int random_n = scale + 4;
  std::vector<NeighborhoodSequence> randoms;
  for (int i = 0; i < 100; ++i) {
    const auto s = random_nonleaping_sequence(random_n, rng);
    randoms.push_back(random_neighborhood_sequence(s, rng));
  }
  std::atomic<std::size_t> members{0};
  const auto results = run_cases(bases.size() + randoms.size(), [&](std::size_t i) {
    if (i < bases.size()) {
      const auto& s = bases[i];
      return guarded(to_literal(s), [&]() -> std::string {
        const IntMatrix reduced = reduced_graph(s).adjacency_matrix();
        NeighborhoodSequenceStream stream(s);
        while (auto ns = stream.next()) {
          ++members;
          if (auto bad = congruence_mismatch(*ns, reduced); !bad.empty()) return bad;
        }
        return {};
      });
    }
    const auto& ns = randoms[i - bases.size()];
    return guarded(to_literal(ns.base()) + " " + anchors_label(ns), [&]() {
      ++members;
      return congruence_mismatch(ns, reduced_graph(ns.base()).adjacency_matrix());
    });
  });
  for (const auto& r : results) {
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
  }
  out.details = Json{{"families", bases.size()}, {"random_members", randoms.size()}, {"random_n", random_n},
                     {"members_checked", members.load()}};
  return out;
}

SuiteResult family_constancy_suite(std::uint64_t, int scale) {
  SuiteResult out;
  const auto bases = sequences_up_to(scale);
  std::atomic<std::size_t> members{0};
  const auto results = run_cases(bases.size(), [&](std::size_t i) {
    const auto& s = bases[i];
    return guarded(to_literal(s), [&]() -> std::string {
      const GraphInvariants expected = family_invariants(s);
      NeighborhoodSequenceStream stream(s);
      while (auto ns = stream.next()) {
        ++members;
        const GraphInvariants got = distance_invariants(build_cp_graph(*ns));
        if (got != expected) return "anchors " + anchors_label(*ns) + ": " + show(got) + " vs reduced " + show(expected);
      }
      return {};
    });
  });
  for (const auto& r : results) {
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
  }
  out.details = Json{{"families", bases.size()}, {"members_checked", members.load()}};
  return out;
}

// -- 2-clique paths ------------------------------------------------------------

std::vector<CliquePathSpec> specs_up_to(int max_m, int min_p, int max_p) {
  std::vector<CliquePathSpec> out{CliquePathSpec{}};
  std::vector<CliquePathSpec> layer{CliquePathSpec{}};
  for (int m = 1; m <= max_m; ++m) {
    std::vector<CliquePathSpec> next;
    for (const auto& spec : layer) {
      for (int p = min_p; p <= max_p; ++p) {
        CliquePathSpec grown = spec;
        grown.parts.push_back(p);
        next.push_back(grown);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string cp2_member_check(const CliquePathSpec& spec, const GraphInvariants& expected) {
  const NonLeapingSequence s = expand_clique_path_spec(spec);
  NeighborhoodSequenceStream stream(s);
  while (auto ns = stream.next()) {
    const GraphInvariants got = distance_invariants(build_cp_graph(*ns));
    if (got != expected) return "anchors " + anchors_label(*ns) + ": " + show(got) + " vs formula " + show(expected);
  }
  return {};
}

SuiteResult cp2_suite(std::uint64_t, int scale) {
  SuiteResult out;
  const auto specs = specs_up_to(scale, 3, 5);
  const auto results = run_cases(specs.size(), [&](std::size_t i) {
    const auto& spec = specs[i];
    return guarded(to_literal(spec), [&]() -> std::string {
      const auto map = seesaw_vertex_map(spec);
      if (!is_weighted_isomorphism(reduced_graph(expand_clique_path_spec(spec)), seesaw_graph(seesaw_params(spec)), map)) {
        return "reduced graph is not the seesaw graph under the constructed map";
      }
      return cp2_member_check(spec, cp2_invariants(spec));
    });
  });
  for (const auto& r : results) {
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
  }
  out.details = Json{{"specs", specs.size()}, {"max_m", scale}, {"parts", "3..5"}};
  return out;
}

SuiteResult linear_2tree_suite(std::uint64_t, int scale) {
  SuiteResult out;
  std::vector<int> sizes;
  for (int n = 4; n <= scale; ++n) sizes.push_back(n);
  const auto results = run_cases(sizes.size(), [&](std::size_t i) {
    const int n = sizes[i];
    return guarded("n=" + std::to_string(n), [&]() {
      const CliquePathSpec spec{std::vector<int>(static_cast<std::size_t>(n - 2), 3)};
      return cp2_member_check(spec, linear_2tree_invariants(n));
    });
  });
  for (const auto& r : results) {
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
  }
  out.details = Json{{"n_from", 4}, {"n_to", scale}};
  return out;
}

SuiteResult weighted_path_suite(std::uint64_t, int scale) {
  SuiteResult out;
  const auto results = run_cases(static_cast<std::size_t>(std::max(scale, 0)), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    return guarded("n=" + std::to_string(n), [&]() -> std::string {
      const IntMatrix a = weighted_path_matrix(n);
      const BigInt want = (n % 2 == 0 ? 1 : -1) * BigInt(n + 1);
      if (determinant(a) != want) return "det " + determinant(a).str() + ", want " + want.str();
      const Inertia in = inertia_congruence(a);
      if (in != Inertia{0, static_cast<std::size_t>(n), 0}) return "inertia is not (0,n,0)";
      return {};
    });
  });
  for (const auto& r : results) {
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
  }
  out.details = Json{{"n_from", 1}, {"n_to", scale}};
  return out;
}

// -- trees and blocks ------------------------------------------------------------

std::string block_composition_mismatch(const LabeledGraph& g, const GraphInvariants& whole) {
  std::vector<DetCof> parts;
  for (const auto& b : blocks(g)) {
    const GraphInvariants inv = distance_invariants(b.graph);
    parts.push_back({inv.det, inv.cof});
  }
  const DetCof composed = compose_blocks(parts);
  if (composed.det != whole.det || composed.cof != whole.cof) {
    return "block composition gives det " + composed.det.str() + " cof " + composed.cof.str();
  }
  return {};
}

SuiteResult trees_suite(std::uint64_t, int scale) {
  SuiteResult out;
  std::vector<LabeledGraph> trees;
  Json per_n = Json::object();
  for (int n = 2; n <= scale; ++n) {
    auto batch = all_labeled_trees(n);
    per_n[std::to_string(n)] = batch.size();
    trees.insert(trees.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  const auto results = run_cases(trees.size(), [&](std::size_t i) {
    const auto& t = trees[i];
    return guarded(to_edge_list(t), [&]() -> std::string {
      const GraphInvariants got = distance_invariants(t);
      const GraphInvariants want = tree_invariants(t.order());
      if (got != want) return show(got) + " vs formula " + show(want);
      return block_composition_mismatch(t, got);
    });
  });
  for (const auto& r : results) {
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
  }
  out.details = Json{{"trees_per_n", per_n}};
  return out;
}

LabeledGraph random_connected_graph(int n, std::mt19937_64& rng) {
  LabeledGraph g(n);
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> parent(1, v - 1);
    g.add_edge(parent(rng), v);
  }
  std::bernoulli_distribution extra(0.35);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!g.has_edge(u, v) && extra(rng)) g.add_edge(u, v);
  return g;
}

std::pair<int, int> random_edge(const LabeledGraph& g, std::mt19937_64& rng) {
  const auto edges = g.edges();
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  auto e = edges[pick(rng)];
  if (std::bernoulli_distribution(0.5)(rng)) std::swap(e.first, e.second);
  return e;
}

struct AttachCase {
  LabeledGraph base;
  std::pair<int, int> edge;
  NonLeapingSequence s;
};

struct DoubleAttachCase {
  LabeledGraph base;
  std::pair<int, int> e1, e2;
  NeighborhoodSequence h1, h2;
};

std::string double_attach_mismatch(const DoubleAttachCase& c) {
  const LabeledGraph g1 = build_cp_graph(c.h1);
  const LabeledGraph g2 = build_cp_graph(c.h2);
  const LabeledGraph first = attach(attach(c.base, c.e1, g1).graph, c.e2, g2).graph;
  const LabeledGraph second = attach(attach(c.base, c.e2, g2).graph, c.e1, g1).graph;
  // relabel `second` onto `first`: base vertices stay, the two CP blocks swap places
  const int n0 = c.base.order();
  const int k1 = g1.order() - 2;
  const int k2 = g2.order() - 2;
  std::vector<std::size_t> order(static_cast<std::size_t>(first.order()));
  for (int v = 1; v <= n0; ++v) order[static_cast<std::size_t>(v - 1)] = static_cast<std::size_t>(v - 1);
  for (int i = 0; i < k1; ++i) order[static_cast<std::size_t>(n0 + i)] = static_cast<std::size_t>(n0 + k2 + i);
  for (int i = 0; i < k2; ++i) order[static_cast<std::size_t>(n0 + k1 + i)] = static_cast<std::size_t>(n0 + i);
  const IntMatrix d1 = all_pairs_distances(first);
  const IntMatrix d2 = all_pairs_distances(second).permuted(order);
  if (d1 != d2) return "attachment order changes distances";
  if (determinant(d1) != determinant(all_pairs_distances(second))) return "attachment order changes det";
  return {};
}

SuiteResult attachment_suite(std::uint64_t seed, int scale) {
  SuiteResult out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> base_n(3, 6);
  std::uniform_int_distribution<int> seq_n(3, 7);
  std::vector<AttachCase> cases;
  for (int i = 0; i < scale; ++i) {
    LabeledGraph base = random_connected_graph(base_n(rng), rng);
    const auto e = random_edge(base, rng);
    cases.push_back({std::move(base), e, random_nonleaping_sequence(seq_n(rng), rng)});
  }
  std::vector<DoubleAttachCase> doubles;
  for (int i = 0; i < 5; ++i) {
    LabeledGraph base = random_connected_graph(base_n(rng), rng);
    const auto e1 = random_edge(base, rng);
    const auto e2 = random_edge(base, rng);
    auto h1 = random_neighborhood_sequence(random_nonleaping_sequence(seq_n(rng), rng), rng);
    auto h2 = random_neighborhood_sequence(random_nonleaping_sequence(seq_n(rng), rng), rng);
    doubles.push_back({std::move(base), e1, e2, std::move(h1), std::move(h2)});
  }
  std::atomic<std::size_t> members{0};
  const auto results = run_cases(cases.size() + doubles.size(), [&](std::size_t i) {
    if (i >= cases.size()) {
      return guarded("double attachment #" + std::to_string(i - cases.size() + 1),
                     [&] { return double_attach_mismatch(doubles[i - cases.size()]); });
    }
    const auto& c = cases[i];
    const std::string label = "base n=" + std::to_string(c.base.order()) + " edge " + std::to_string(c.edge.first) +
                              "-" + std::to_string(c.edge.second) + " s=" + to_literal(c.s);
    return guarded(label, [&]() -> std::string {
      std::optional<BigInt> common;
      NeighborhoodSequenceStream stream(c.s);
      while (auto ns = stream.next()) {
        ++members;
        const BigInt det = determinant(all_pairs_distances(attach(c.base, c.edge, build_cp_graph(*ns)).graph));
        if (!common) common = det;
        if (det != *common) return "anchors " + anchors_label(*ns) + " give det " + det.str() + ", first member " + common->str();
      }
      return {};
    });
  });
  for (const auto& r : results) {
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
  }
  out.details = Json{{"pairs", cases.size()}, {"double_attachments", doubles.size()}, {"members_checked", members.load()}};
  return out;
}

std::string block_2cp_mismatch(const BlockCliquePathRecipe& recipe) {
  const RealizedRecipe real = realize(recipe);
  const IntMatrix d = all_pairs_distances(real.graph);
  const auto n = d.order();
  const Inertia want{1, n - 1, 0};
  if (inertia_congruence(d) != want) return "inertia of D is not (1,n-1,0)";
  if (block_2cp_inertia(recipe) != want) return "peel-order inertia disagrees";
  std::vector<std::size_t> order;
  for (int v : peel_ordering(recipe)) order.push_back(static_cast<std::size_t>(v - 1));
  const auto minors = leading_principal_minors(d.permuted(order));
  for (std::size_t k = 1; k <= n; ++k) {
    const int want_sign = k == 1 ? 0 : (k % 2 == 1 ? 1 : -1);  // 0, then (-1)^{k-1}
    if (sign(minors[k - 1]) != want_sign) return "leading minor " + std::to_string(k) + " has the wrong sign";
  }
  return block_composition_mismatch(real.graph, matrix_invariants(d));
}

SuiteResult block_2cp_suite(std::uint64_t seed, int scale) {
  SuiteResult out;
  std::mt19937_64 rng(seed);
  std::vector<BlockCliquePathRecipe> recipes;
  for (int i = 0; i < 30; ++i) recipes.push_back(random_recipe(rng, scale));
  const auto results = run_cases(recipes.size(), [&](std::size_t i) {
    return guarded(recipe_to_json(recipes[i]).dump(), [&] { return block_2cp_mismatch(recipes[i]); });
  });
  for (const auto& r : results) {
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
  }
  out.details = Json{{"recipes", recipes.size()}, {"max_vertices", scale}};
  return out;
}

// -- addressing ------------------------------------------------------------------

SuiteResult addressing_suite(std::uint64_t, int scale) {
  SuiteResult out;
  std::vector<std::pair<std::string, LabeledGraph>> graphs{
      {"K2", complete_graph(2)}, {"K3", complete_graph(3)}, {"P3", path_graph(3)},
      {"P4", path_graph(4)},     {"K4", complete_graph(4)},
  };
  {
    const NonLeapingSequence s = expand_clique_path_spec(CliquePathSpec{{3, 3, 3}});
    graphs.emplace_back("linear 2-tree 2:3,3,3", build_cp_graph(*NeighborhoodSequenceStream(s).next()));
  }
  std::erase_if(graphs, [&](const auto& g) { return g.second.order() > scale; });
  Json found = Json::object();
  std::vector<int> exact(graphs.size(), -1);
  const auto results = run_cases(graphs.size(), [&](std::size_t i) {
    const auto& [name, g] = graphs[i];
    return guarded(name, [&, &g = g]() -> std::string {
      const int n = g.order();
      const auto bound = addressing_lower_bound(inertia_congruence(all_pairs_distances(g)));
      if (static_cast<int>(bound) != n - 1) return "lower bound " + std::to_string(bound) + " is not n-1";
      if (n >= 3 && search_scheme(g, n - 2)) return "a scheme of length n-2 exists";
      exact[i] = exact_N(g);
      if (exact[i] != n - 1) return "exact N is " + std::to_string(exact[i]);
      return {};
    });
  });
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
    found[graphs[i].first] = exact[i];
  }
  out.details = Json{{"exact_N", found}};
  return out;
}

// -- exact linear algebra ----------------------------------------------------------

IntMatrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-5, 5);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = entry(rng);
  return a;
}

SuiteResult linalg_suite(std::uint64_t seed, int scale) {
  SuiteResult out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> order_dist(1, static_cast<std::size_t>(std::max(scale, 1)));
  std::vector<IntMatrix> mats;
  std::vector<std::vector<std::size_t>> perms;
  for (int i = 0; i < 200; ++i) {
    mats.push_back(random_symmetric(order_dist(rng), rng));
    std::vector<std::size_t> p(mats.back().order());
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = k;
    std::shuffle(p.begin(), p.end(), rng);
    perms.push_back(std::move(p));
  }
  std::atomic<std::size_t> jones_used{0};
  const auto results = run_cases(mats.size(), [&](std::size_t i) {
    return guarded("matrix #" + std::to_string(i + 1), [&]() -> std::string {
      const IntMatrix& a = mats[i];
      const BigInt det = determinant(a);
      if (determinant(a.permuted(perms[i])) != det) return "det changes under a symmetric permutation";
      if (determinant(a.transposed()) != det) return "det(A^T) != det(A)";
      const Inertia in = inertia_congruence(a);
      if (in.order() != a.order()) return "inertia does not cover the order";
      if ((det == 0) != (in.n_zero > 0)) return "zero count disagrees with det";
      if (det != 0 && sign(det) != (in.n_minus % 2 == 0 ? 1 : -1)) return "det sign disagrees with n_minus";
      try {
        const Inertia jones = inertia_leading_minors(a);
        ++jones_used;
        if (jones != in) return "leading-minor inertia disagrees";
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Singular && e.kind() != ErrorKind::ConsecutiveZeroMinors) throw;
      }
      return {};
    });
  });
  for (const auto& r : results) {
    r.ok ? ++out.passed : ++out.failed;
    if (!r.ok && out.failures.size() < kMaxReportedFailures) out.failures.push_back(r);
  }
  out.details = Json{{"matrices", mats.size()}, {"max_order", scale}, {"jones_applicable", jones_used.load()}};
  return out;
}

using SuiteFn = SuiteResult (*)(std::uint64_t, int);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  int scale;
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {"congruence", congruence_suite, 8},        {"family-constancy", family_constancy_suite, 8},
      {"cp2-formulas", cp2_suite, 4},             {"linear-2tree", linear_2tree_suite, 10},
      {"weighted-path", weighted_path_suite, 12}, {"trees", trees_suite, 7},
      {"attachment", attachment_suite, 20},       {"block-2cp", block_2cp_suite, 12},
      {"addressing", addressing_suite, 6},        {"linalg", linalg_suite, 7},
  };
  return entries;
}

const SuiteEntry& lookup(std::string_view name) {
  for (const auto& e : registry())
    if (name == e.name) return e;
  throw Error(ErrorKind::UnknownSuite, "no suite named '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

int default_scale(std::string_view name) { return lookup(name).scale; }

SuiteResult run_suite(std::string_view name, std::uint64_t seed, std::optional<int> scale) {
  const SuiteEntry& entry = lookup(name);
  SuiteResult r = entry.fn(seed, scale.value_or(entry.scale));
  r.suite = entry.name;
  r.seed = seed;
  r.scale = scale.value_or(entry.scale);
  return r;
}

unsigned worker_count() {
  if (const char* env = std::getenv("CPGRAPH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CaseResult> run_cases(std::size_t count, const std::function<CaseResult(std::size_t)>& job) {
  std::vector<CaseResult> results(count);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = job(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) results[i] = job(i);
      });
    }
  }
  return results;
}

Json suite_result_to_json(const SuiteResult& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"case", f.label}, {"detail", f.detail}});
  return Json{{"suite", r.suite},   {"seed", r.seed},         {"scale", r.scale},    {"passed", r.passed},
              {"failed", r.failed}, {"failures", failures}, {"details", r.details}};
}

}  // namespace cpgraph
