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

#include <json.hpp>

#include <string>
#include <string_view>

#include "cpgraph/addressing.hpp"
#include "cpgraph/formulas.hpp"
#include "cpgraph/graph.hpp"
#include "cpgraph/matrix.hpp"
#include "cpgraph/reduction.hpp"

namespace cpgraph {

using Json = nlohmann::ordered_json;

/// `u v` per line, 1-based; `#` starts a comment; optional `n <N>` header.
/// Throws ParseError (with line number), SelfLoop or DuplicateEdge.
LabeledGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const LabeledGraph& g);

/// Edge list or graph JSON, chosen by the first non-blank character.
LabeledGraph parse_graph_input(std::string_view text);

/// {"n": N, "edges": [[u, v], ...]}
Json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);

/// Rows of decimal strings.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

/// {"n": N, "vw": [...], "ew": [[u, v, w], ...]}
Json weighted_graph_to_json(const WeightedGraph& h);
WeightedGraph weighted_graph_from_json(const Json& j);

/// {"det": "<decimal>", "inertia": [p, m, z], "cof": "<decimal>"}
Json invariants_to_json(const GraphInvariants& inv);
Json inertia_to_json(const Inertia& in);

/// [{"spec": "2:...", "anchors": [...], "glue": {"vertex": v, "at": k}}, ...]
Json recipe_to_json(const BlockCliquePathRecipe& recipe);
BlockCliquePathRecipe recipe_from_json(const Json& j);

/// {"d": d, "addr": ["01*", ...]}
Json scheme_to_json(const AddressScheme& s);
AddressScheme scheme_from_json(const Json& j);

Json parse_json(std::string_view text);

std::string to_dot(const LabeledGraph& g);
/// Weight -1 edges are dashed; vertex weights appear in node labels.
std::string to_dot(const WeightedGraph& h);

}  // namespace cpgraph
