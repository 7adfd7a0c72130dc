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

#include "cpgraph/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "cpgraph/error.hpp"

namespace cpgraph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

int parse_label(std::string_view tok, long line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": '" + std::string(tok) + "' is not an integer",
                line);
  }
  return v;
}

BigInt parse_bigint(const Json& j) {
  try {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<long long>());
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::ParseError, "expected a decimal integer, got " + j.dump());
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

LabeledGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  std::vector<long> edge_line;
  std::optional<int> header;
  int max_label = 0;
  long line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto toks = split_ws(line);
    if (toks.size() != 2) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected two fields", line_no);
    }
    if (toks[0] == "n") {
      if (header || !edges.empty()) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": header must come first", line_no);
      }
      header = parse_label(toks[1], line_no);
      if (*header < 0) throw Error(ErrorKind::ParseError, "negative vertex count", line_no);
      continue;
    }
    const int u = parse_label(toks[0], line_no);
    const int v = parse_label(toks[1], line_no);
    if (u < 1 || v < 1) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": labels are 1-based", line_no);
    }
    max_label = std::max({max_label, u, v});
    edges.emplace_back(u, v);
    edge_line.push_back(line_no);
  }
  const int n = header.value_or(max_label);
  if (max_label > n) {
    throw Error(ErrorKind::ParseError, "label " + std::to_string(max_label) + " exceeds header n " + std::to_string(n));
  }
  LabeledGraph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      g.add_edge(edges[i].first, edges[i].second);
    } catch (const Error& e) {
      throw Error(e.kind(), "line " + std::to_string(edge_line[i]) + ": " + e.detail(), edge_line[i]);
    }
  }
  return g;
}

std::string to_edge_list(const LabeledGraph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

LabeledGraph parse_graph_input(std::string_view text) {
  const std::string_view t = trim(text);
  if (!t.empty() && t.front() == '{') return graph_from_json(parse_json(t));
  return parse_edge_list(text);
}

Json graph_to_json(const LabeledGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

LabeledGraph graph_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  if (n < 0) throw Error(ErrorKind::ParseError, "negative vertex count");
  LabeledGraph g(n);
  const auto edges = field<std::vector<std::vector<int>>>(j, "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].size() != 2) throw Error(ErrorKind::ParseError, "edge entries are [u, v] pairs", static_cast<long>(i) + 1);
    try {
      g.add_edge(edges[i][0], edges[i][1]);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::VertexOutOfRange) throw Error(ErrorKind::ParseError, e.detail(), static_cast<long>(i) + 1);
      throw;
    }
  }
  return g;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "matrix must be an array of rows");
  IntMatrix m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != j.size()) throw Error(ErrorKind::ParseError, "matrix is not square");
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = parse_bigint(j[i][k]);
  }
  return m;
}

Json weighted_graph_to_json(const WeightedGraph& h) {
  Json vw = Json::array();
  for (int v = 1; v <= h.order(); ++v) vw.push_back(h.vertex_weight(v));
  Json ew = Json::array();
  for (const auto& [key, w] : h.edge_weights()) ew.push_back({key.first, key.second, w});
  return Json{{"n", h.order()}, {"vw", std::move(vw)}, {"ew", std::move(ew)}};
}

WeightedGraph weighted_graph_from_json(const Json& j) {
  const int n = field<int>(j, "n");
  const auto vw = field<std::vector<long long>>(j, "vw");
  if (static_cast<int>(vw.size()) != n) throw Error(ErrorKind::ParseError, "vw must have n entries");
  WeightedGraph h(n);
  for (int v = 1; v <= n; ++v) h.set_vertex_weight(v, vw[static_cast<std::size_t>(v - 1)]);
  for (const auto& e : field<std::vector<std::vector<long long>>>(j, "ew")) {
    if (e.size() != 3 || e[2] == 0) throw Error(ErrorKind::ParseError, "ew entries are [u, v, nonzero w]");
    if (h.edge_weight(static_cast<int>(e[0]), static_cast<int>(e[1])) != 0) {
      throw Error(ErrorKind::DuplicateEdge, "weighted edge listed twice");
    }
    h.add_edge_weight(static_cast<int>(e[0]), static_cast<int>(e[1]), e[2]);
  }
  return h;
}

Json inertia_to_json(const Inertia& in) { return Json::array({in.n_plus, in.n_minus, in.n_zero}); }

Json invariants_to_json(const GraphInvariants& inv) {
  return Json{{"det", inv.det.str()}, {"inertia", inertia_to_json(inv.inertia)}, {"cof", inv.cof.str()}};
}

Json recipe_to_json(const BlockCliquePathRecipe& recipe) {
  Json out = Json::array();
  for (const auto& part : recipe.parts) {
    Json p{{"spec", to_literal(part.spec)}};
    if (!part.anchors.empty()) p["anchors"] = part.anchors;
    if (part.glue) p["glue"] = Json{{"vertex", part.glue->vertex}, {"at", part.glue->at}};
    out.push_back(std::move(p));
  }
  return out;
}

BlockCliquePathRecipe recipe_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "recipe must be a list of parts");
  BlockCliquePathRecipe recipe;
  for (const auto& p : j) {
    RecipePart part;
    part.spec = parse_clique_path_literal(field<std::string>(p, "spec"));
    if (p.contains("anchors")) part.anchors = field<std::vector<int>>(p, "anchors");
    if (p.contains("glue") && !p.at("glue").is_null()) {
      const Json& g = p.at("glue");
      part.glue = Glue{field<int>(g, "vertex"), g.contains("at") ? field<int>(g, "at") : 1};
    }
    recipe.parts.push_back(std::move(part));
  }
  return recipe;
}

Json scheme_to_json(const AddressScheme& s) { return Json{{"d", s.d}, {"addr", s.addresses}}; }

AddressScheme scheme_from_json(const Json& j) {
  return AddressScheme{field<int>(j, "d"), field<std::vector<std::string>>(j, "addr")};
}

std::string to_dot(const LabeledGraph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 1; v <= g.order(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const WeightedGraph& h) {
  std::ostringstream os;
  os << "graph H {\n";
  for (int v = 1; v <= h.order(); ++v) {
    os << "  " << v << " [label=\"" << v << " (" << h.vertex_weight(v) << ")\", w=" << h.vertex_weight(v)
       << "];\n";
  }
  for (const auto& [key, w] : h.edge_weights()) {
    os << "  " << key.first << " -- " << key.second << " [w=" << w;
    if (w == -1) os << ", style=dashed";
    if (w != 1) os << ", label=\"" << w << "\"";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cpgraph
