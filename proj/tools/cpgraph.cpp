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

// cpgraph: command-line front end. Every subcommand prints one JSON report
// (or DOT with --dot) on stdout.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cpgraph/addressing.hpp"
#include "cpgraph/error.hpp"
#include "cpgraph/formulas.hpp"
#include "cpgraph/io.hpp"
#include "cpgraph/reduction.hpp"
#include "cpgraph/suites.hpp"

namespace {

using namespace cpgraph;

enum Exit : int { kOk = 0, kFailed = 1, kInputError = 2, kResourceGuard = 3 };

// Filled in by the chosen subcommand.
struct Outcome {
  Json results = Json::object();
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> dot;
};

std::string read_input(const std::string& path, std::string& digest_feed) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  digest_feed += text;
  digest_feed.push_back('\0');
  return text;
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (token.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(token);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "'" + token + "' is not an integer");
    }
  }
  return out;
}

NeighborhoodSequence member_of(const NonLeapingSequence& s, const std::string& anchors) {
  if (anchors.empty()) {
    if (s.size() <= 2) return NeighborhoodSequence(s, {});
    return *NeighborhoodSequenceStream(s).next();
  }
  return NeighborhoodSequence(s, parse_int_list(anchors));
}

Json error_json(const Error& e) {
  Json j{{"kind", std::string(to_string(e.kind()))}, {"message", e.detail()}};
  if (e.where()) j["where"] = *e.where();
  return j;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
    case ErrorKind::BudgetExceeded: return kResourceGuard;
    case ErrorKind::CrossCheckFailed: return kFailed;
    default: return kInputError;
  }
}

Json blocks_json(const LabeledGraph& g) {
  Json list = Json::array();
  for (const auto& b : blocks(g)) list.push_back(Json{{"vertices", b.labels}, {"edges", graph_to_json(b.graph)["edges"]}});
  return Json{{"blocks", list}, {"cut_vertices", cut_vertices(g)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-path graphs: construction, reduction, exact distance-matrix invariants"};
  app.require_subcommand(1);
  bool dot = false;
  app.add_flag("--dot", dot, "Emit Graphviz DOT instead of JSON where a graph is produced");

  std::string digest_feed;
  std::function<Outcome()> action;

  // shared option storage
  std::string seq_text, anchors, graph_path, other_path, spec_text, edge_text, recipe_path;
  std::optional<std::size_t> limit;
  std::uint64_t budget = kDefaultSearchBudget;
  int d = 0;
  bool all_members = false;
  std::string suite;
  std::uint64_t seed = 0;
  std::optional<int> scale;

  auto seq_opt = [&](CLI::App* sub) { sub->add_option("sequence", seq_text, "Sequence literal, e.g. 0,1,2,2 or 2:3,4")->required(); };
  auto anchors_opt = [&](CLI::App* sub) {
    sub->add_option("--anchors", anchors, "a_3,...,a_n (default: lexicographically first member)");
  };

  // --- seq ---------------------------------------------------------------------
  auto* seq = app.add_subcommand("seq", "Non-leaping sequences")->require_subcommand(1);
  auto* seq_validate = seq->add_subcommand("validate", "Check a sequence literal");
  seq_opt(seq_validate);
  seq_validate->callback([&] {
    action = [&] {
      const auto s = parse_sequence_literal(seq_text);
      std::vector<int> b;
      for (int k = 2; k <= s.size(); ++k) b.push_back(s.b(k));
      Outcome o;
      o.results = Json{{"valid", true}, {"sequence", to_literal(s)}, {"n", s.size()}, {"b_from_2", b}};
      return o;
    };
  });
  auto* seq_expand = seq->add_subcommand("expand", "Expand clique-path shorthand 2:p_1,...,p_m");
  seq_expand->add_option("spec", spec_text, "e.g. 2:3,4,3")->required();
  seq_expand->callback([&] {
    action = [&] {
      const auto spec = parse_clique_path_literal(spec_text);
      const auto s = expand_clique_path_spec(spec);
      Outcome o;
      o.results = Json{{"spec", to_literal(spec)}, {"sequence", to_literal(s)}, {"n", s.size()}};
      return o;
    };
  });

  // --- family ------------------------------------------------------------------
  auto* family = app.add_subcommand("family", "Members of CP(s)")->require_subcommand(1);
  auto* fam_enum = family->add_subcommand("enumerate", "List anchor vectors in lexicographic order");
  seq_opt(fam_enum);
  fam_enum->add_option("--limit", limit, "Stop after this many members");
  fam_enum->callback([&] {
    action = [&] {
      const auto s = parse_sequence_literal(seq_text);
      const auto members = enumerate_neighborhood_sequences(s, limit);
      Outcome o;
      Json list = Json::array();
      std::string dots;
      for (const auto& ns : members) {
        list.push_back(ns.anchors());
        if (dot) dots += to_dot(build_cp_graph(ns));
      }
      o.results = Json{{"sequence", to_literal(s)}, {"listed", members.size()},
                       {"total", count_neighborhood_sequences(s).str()}, {"anchors", list}};
      if (dot) o.dot = dots;
      return o;
    };
  });
  auto* fam_count = family->add_subcommand("count", "Number of members, as a product of per-position choices");
  seq_opt(fam_count);
  fam_count->callback([&] {
    action = [&] {
      const auto s = parse_sequence_literal(seq_text);
      std::vector<int> per;
      for (int k = 3; k <= s.size(); ++k) per.push_back(admissible_anchor_count(s, k));
      Outcome o;
      o.results = Json{{"sequence", to_literal(s)}, {"count", count_neighborhood_sequences(s).str()}, {"choices_from_3", per}};
      return o;
    };
  });

  // --- graph -------------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "Graph construction and structure")->require_subcommand(1);
  auto* g_build = graph->add_subcommand("build", "Build the CP graph of one member");
  seq_opt(g_build);
  anchors_opt(g_build);
  g_build->callback([&] {
    action = [&] {
      const auto ns = member_of(parse_sequence_literal(seq_text), anchors);
      const auto g = build_cp_graph(ns);
      Outcome o;
      o.results = Json{{"sequence", to_literal(ns.base())}, {"anchors", ns.anchors()}, {"graph", graph_to_json(g)}};
      if (dot) o.dot = to_dot(g);
      return o;
    };
  });
  auto* g_dist = graph->add_subcommand("distance", "Distance matrix of a graph file (edge list or JSON, - for stdin)");
  g_dist->add_option("graph", graph_path)->required();
  g_dist->callback([&] {
    action = [&] {
      const auto g = parse_graph_input(read_input(graph_path, digest_feed));
      Outcome o;
      o.results = Json{{"n", g.order()}, {"distance", matrix_to_json(all_pairs_distances(g))}};
      return o;
    };
  });
  auto* g_blocks = graph->add_subcommand("blocks", "Biconnected components and cut vertices");
  g_blocks->add_option("graph", graph_path)->required();
  g_blocks->callback([&] {
    action = [&] {
      Outcome o;
      o.results = blocks_json(parse_graph_input(read_input(graph_path, digest_feed)));
      return o;
    };
  });
  auto* g_attach = graph->add_subcommand("attach", "Glue a CP graph onto an edge of a base graph");
  g_attach->add_option("base", graph_path)->required();
  g_attach->add_option("--edge", edge_text, "v1,v2 (CP vertices 1 and 2 land on v1 and v2)")->required();
  g_attach->add_option("--seq", seq_text, "Sequence literal of the attached family")->required();
  anchors_opt(g_attach);
  g_attach->callback([&] {
    action = [&] {
      const auto base = parse_graph_input(read_input(graph_path, digest_feed));
      const auto e = parse_int_list(edge_text);
      if (e.size() != 2) throw Error(ErrorKind::ParseError, "--edge takes two vertices");
      const auto ns = member_of(parse_sequence_literal(seq_text), anchors);
      const auto at = attach(base, {e[0], e[1]}, build_cp_graph(ns));
      Outcome o;
      o.results = Json{{"graph", graph_to_json(at.graph)}, {"cp_label", at.cp_label}};
      if (dot) o.dot = to_dot(at.graph);
      return o;
    };
  });

  // --- reduce ------------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "Reduced graph and reducing matrix")->require_subcommand(1);
  auto* r_graph = reduce->add_subcommand("graph", "Weighted reduced graph of a family");
  seq_opt(r_graph);
  r_graph->callback([&] {
    action = [&] {
      const auto h = reduced_graph(parse_sequence_literal(seq_text));
      Outcome o;
      o.results = Json{{"reduced", weighted_graph_to_json(h)}, {"adjacency", matrix_to_json(h.adjacency_matrix())}};
      if (dot) o.dot = to_dot(h);
      return o;
    };
  });
  auto* r_matrix = reduce->add_subcommand("matrix", "Reducing matrix E of one member");
  seq_opt(r_matrix);
  anchors_opt(r_matrix);
  r_matrix->callback([&] {
    action = [&] {
      const auto ns = member_of(parse_sequence_literal(seq_text), anchors);
      Outcome o;
      o.results = Json{{"anchors", ns.anchors()}, {"E", matrix_to_json(reducing_matrix(ns))}};
      return o;
    };
  });
  auto* r_verify = reduce->add_subcommand("verify", "Check E^T D E = A(H) for one member or the whole family");
  seq_opt(r_verify);
  anchors_opt(r_verify);
  r_verify->add_flag("--all", all_members, "Check every member");
  r_verify->callback([&] {
    action = [&] {
      const auto s = parse_sequence_literal(seq_text);
      const IntMatrix reduced = reduced_graph(s).adjacency_matrix();
      std::vector<NeighborhoodSequence> members;
      if (all_members) {
        members = enumerate_neighborhood_sequences(s);
      } else {
        members.push_back(member_of(s, anchors));
      }
      Outcome o;
      Json mismatched = Json::array();
      for (const auto& ns : members) {
        const IntMatrix got = congruence_reduce(all_pairs_distances(build_cp_graph(ns)), reducing_matrix(ns));
        if (got == reduced) {
          ++o.passed;
        } else {
          ++o.failed;
          mismatched.push_back(ns.anchors());
        }
      }
      o.results = Json{{"sequence", to_literal(s)}, {"checked", members.size()}, {"mismatched", mismatched}};
      return o;
    };
  });

  // --- invariants ---------------------------------------------------------------
  auto* inv = app.add_subcommand("invariants", "det, inertia and cof of D(G), of a family, or of a matrix");
  auto* inv_graph = inv->add_option("--graph", graph_path, "Graph file: brute force on D(G)");
  auto* inv_seq = inv->add_option("--seq", seq_text, "Family: values read off the reduced graph");
  auto* inv_spec = inv->add_option("--spec", spec_text, "2-clique path: closed forms, checked against the reduced graph");
  auto* inv_matrix = inv->add_option("--matrix", other_path, "Symmetric integer matrix as JSON rows");
  auto* inv_recipe = inv->add_option("--recipe", recipe_path, "Block 2-clique-path recipe JSON: inertia and peel order");
  inv->add_flag("--all", all_members, "With --seq or --spec: also brute-force every member");
  inv_graph->excludes(inv_seq)->excludes(inv_spec)->excludes(inv_matrix)->excludes(inv_recipe);
  inv_seq->excludes(inv_spec)->excludes(inv_matrix)->excludes(inv_recipe);
  inv_spec->excludes(inv_matrix)->excludes(inv_recipe);
  inv_matrix->excludes(inv_recipe);
  inv->callback([&] {
    action = [&] {
      Outcome o;
      auto check_members = [&](const NonLeapingSequence& s, const GraphInvariants& want) {
        if (!all_members) return;
        for (const auto& ns : enumerate_neighborhood_sequences(s)) {
          distance_invariants(build_cp_graph(ns)) == want ? ++o.passed : ++o.failed;
        }
      };
      if (!graph_path.empty()) {
        const auto g = parse_graph_input(read_input(graph_path, digest_feed));
        o.results = Json{{"source", "graph"}, {"n", g.order()}, {"invariants", invariants_to_json(distance_invariants(g))}};
      } else if (!seq_text.empty()) {
        const auto s = parse_sequence_literal(seq_text);
        const auto values = family_invariants(s);
        check_members(s, values);
        o.results = Json{{"source", "family"}, {"sequence", to_literal(s)}, {"invariants", invariants_to_json(values)}};
      } else if (!spec_text.empty()) {
        const auto spec = parse_clique_path_literal(spec_text);
        const auto closed = cp2_invariants(spec);
        const auto s = expand_clique_path_spec(spec);
        if (family_invariants(s) != closed) throw Error(ErrorKind::CrossCheckFailed, "closed forms disagree with the reduced graph");
        check_members(s, closed);
        const auto lr = seesaw_params(spec);
        o.results = Json{{"source", "clique-path"}, {"spec", to_literal(spec)}, {"left", lr.left}, {"right", lr.right},
                         {"invariants", invariants_to_json(closed)}};
      } else if (!other_path.empty()) {
        const auto m = matrix_from_json(parse_json(read_input(other_path, digest_feed)));
        o.results = Json{{"source", "matrix"}, {"n", m.order()}, {"invariants", invariants_to_json(matrix_invariants(m))}};
      } else if (!recipe_path.empty()) {
        const auto recipe = recipe_from_json(parse_json(read_input(recipe_path, digest_feed)));
        const auto g = realize(recipe).graph;
        const auto order = peel_ordering(recipe);
        const IntMatrix d = all_pairs_distances(g);
        std::vector<std::size_t> perm;
        for (int v : order) perm.push_back(static_cast<std::size_t>(v - 1));
        Json signs = Json::array();
        for (const auto& minor : leading_principal_minors(d.permuted(perm))) signs.push_back(sign(minor));
        const auto values = matrix_invariants(d);
        // block_2cp_inertia raises CrossCheckFailed itself if its routes disagree
        values.inertia == block_2cp_inertia(recipe) ? ++o.passed : ++o.failed;
        o.results = Json{{"source", "recipe"}, {"n", g.order()}, {"graph", graph_to_json(g)}, {"peel_ordering", order},
                         {"minor_signs", signs}, {"invariants", invariants_to_json(values)}};
      } else {
        throw Error(ErrorKind::ParseError, "give one of --graph, --seq, --spec, --matrix, --recipe");
      }
      return o;
    };
  });

  // --- address -----------------------------------------------------------------
  auto* address = app.add_subcommand("address", "Squashed-cube addressing")->require_subcommand(1);
  auto* a_verify = address->add_subcommand("verify", "Check a scheme against a graph");
  a_verify->add_option("graph", graph_path)->required();
  a_verify->add_option("scheme", other_path, "JSON {\"d\": d, \"addr\": [...]}")->required();
  a_verify->callback([&] {
    action = [&] {
      const auto g = parse_graph_input(read_input(graph_path, digest_feed));
      const auto scheme = scheme_from_json(parse_json(read_input(other_path, digest_feed)));
      Outcome o;
      const bool ok = verify_scheme(g, scheme);
      ok ? ++o.passed : ++o.failed;
      o.results = Json{{"valid", ok}, {"d", scheme.d}};
      return o;
    };
  });
  auto* a_search = address->add_subcommand("search", "Exhaustive search for a scheme of length d");
  a_search->add_option("graph", graph_path)->required();
  a_search->add_option("-d,--length", d, "Address length")->required();
  a_search->add_option("--budget", budget, "Search node budget");
  a_search->callback([&] {
    action = [&] {
      const auto g = parse_graph_input(read_input(graph_path, digest_feed));
      SearchStats stats;
      const auto found = search_scheme(g, d, budget, &stats);
      Outcome o;
      o.results = Json{{"d", d}, {"found", found.has_value()}, {"nodes", stats.nodes}};
      if (found) o.results["scheme"] = scheme_to_json(*found);
      return o;
    };
  });
  auto* a_exact = address->add_subcommand("exact-n", "Smallest address length, certified by search");
  a_exact->add_option("graph", graph_path)->required();
  a_exact->add_option("--budget", budget, "Search node budget per length");
  a_exact->callback([&] {
    action = [&] {
      const auto g = parse_graph_input(read_input(graph_path, digest_feed));
      const auto in = inertia_congruence(all_pairs_distances(g));
      Outcome o;
      const int n_exact = exact_N(g, budget);
      o.results = Json{{"n", g.order()}, {"lower_bound", addressing_lower_bound(in)}, {"N", n_exact}};
      if (n_exact > 0) o.results["scheme"] = scheme_to_json(*search_scheme(g, n_exact, budget));
      return o;
    };
  });

  // --- check -------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "Run a check suite");
  check->add_option("suite", suite, "Suite name (see --list)");
  check->add_option("--seed", seed, "Seed for randomized suites");
  check->add_option("--scale", scale, "Size cap (suite-specific)");
  bool list = false;
  check->add_flag("--list", list, "List suite names and default scales");
  check->callback([&] {
    action = [&] {
      Outcome o;
      if (list || suite.empty()) {
        Json names = Json::array();
        for (const auto& n : suite_names()) names.push_back(Json{{"name", n}, {"default_scale", default_scale(n)}});
        o.results = Json{{"suites", names}};
        return o;
      }
      const auto r = run_suite(suite, seed, scale);
      o.passed = r.passed;
      o.failed = r.failed;
      o.results = suite_result_to_json(r);
      return o;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) command += ' ';
    command += argv[i];
  }

  const auto start = std::chrono::steady_clock::now();
  Json report{{"command", command}};
  int code = kOk;
  Outcome outcome;
  try {
    outcome = action();
    if (outcome.failed > 0) code = kFailed;
    report["results"] = outcome.results;
  } catch (const Error& e) {
    code = exit_code_for(e.kind());
    report["error"] = error_json(e);
  }
  if (outcome.dot && code == kOk) {
    std::cout << *outcome.dot;
    return code;
  }
  report["inputs_digest"] = fnv1a(command + '\0' + digest_feed);
  report["suite"] = Json{{"passed", outcome.passed}, {"failed", outcome.failed}};
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.dump(2) << '\n';
  return code;
}
