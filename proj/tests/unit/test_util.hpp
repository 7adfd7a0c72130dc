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

#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <string>

#include "cpgraph/error.hpp"
#include "cpgraph/graph.hpp"
#include "cpgraph/io.hpp"
#include "cpgraph/sequence.hpp"

namespace cpgraph::testing {

inline std::string data_path(const std::string& name) { return std::string(CPGRAPH_TEST_DATA) + "/" + name; }

inline LabeledGraph load_graph(const std::string& name) {
  std::ifstream in(data_path(name));
  const std::string text{std::istreambuf_iterator<char>(in), {}};
  return parse_graph_input(text);
}

inline NeighborhoodSequence member(const std::string& seq, std::vector<int> anchors) {
  return NeighborhoodSequence(parse_sequence_literal(seq), std::move(anchors));
}

// The two example members of CP(0,1,2,2,2,2,3,3).
inline NeighborhoodSequence g1_member() { return member("0,1,2,2,2,2,3,3", {1, 2, 3, 4, 4, 5}); }
inline NeighborhoodSequence g2_member() { return member("0,1,2,2,2,2,3,3", {1, 1, 1, 1, 1, 1}); }

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no cpgraph::Error thrown";
  return ErrorKind::UnknownSuite;
}

}  // namespace cpgraph::testing
