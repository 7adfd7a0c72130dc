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

// Python bindings. Graphs cross the boundary as (n, edges) pairs, matrices as
// lists of int rows; exact integers become Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cpgraph/addressing.hpp"
#include "cpgraph/error.hpp"
#include "cpgraph/formulas.hpp"
#include "cpgraph/io.hpp"
#include "cpgraph/linalg.hpp"
#include "cpgraph/reduction.hpp"
#include "cpgraph/suites.hpp"

namespace py = pybind11;
using namespace cpgraph;

namespace {

using Edges = std::vector<std::pair<int, int>>;

PyObject* error_type = nullptr;

py::int_ to_py(const BigInt& x) { return py::int_(py::str(x.str())); }

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

IntMatrix matrix_from_py(const py::sequence& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row = rows[i].cast<py::sequence>();
    if (row.size() != rows.size()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = from_py(row[j]);
  }
  return m;
}

py::list matrix_to_py(const IntMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.order(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.order(); ++j) row.append(to_py(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::tuple inertia_to_py(const Inertia& in) { return py::make_tuple(in.n_plus, in.n_minus, in.n_zero); }

py::dict invariants_to_py(const GraphInvariants& inv) {
  py::dict d;
  d["det"] = to_py(inv.det);
  d["inertia"] = inertia_to_py(inv.inertia);
  d["cof"] = to_py(inv.cof);
  return d;
}

py::tuple graph_to_py(const LabeledGraph& g) { return py::make_tuple(g.order(), g.edges()); }

NeighborhoodSequence member(const std::vector<int>& q, const std::optional<std::vector<int>>& anchors) {
  NonLeapingSequence s = validate_nonleaping(q);
  if (anchors) return NeighborhoodSequence(std::move(s), *anchors);
  auto first = NeighborhoodSequenceStream(s).next();
  return *first;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distance matrices of clique-path graphs, computed exactly.";

  // kept alive by the module attribute
  error_type = py::exception<Error>(m, "CpgraphError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("where") = e.where() ? py::object(py::int_(*e.where())) : py::object(py::none());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  m.def("validate", [](std::vector<int> q) { return validate_nonleaping(std::move(q)).values(); }, py::arg("q"));
  m.def("expand", [](const std::string& literal) { return parse_sequence_literal(literal).values(); },
        py::arg("literal"), "Sequence for a comma list or a 2:p1,p2,... clique-path literal.");
  m.def("count_family", [](const std::vector<int>& q) { return to_py(count_neighborhood_sequences(validate_nonleaping(q))); },
        py::arg("q"));
  m.def(
      "enumerate_family",
      [](const std::vector<int>& q, std::optional<std::size_t> limit) {
        std::vector<std::vector<int>> out;
        NeighborhoodSequenceStream stream(validate_nonleaping(q));
        while (!limit || out.size() < *limit) {
          auto ns = stream.next();
          if (!ns) break;
          out.push_back(ns->anchors());
        }
        return out;
      },
      py::arg("q"), py::arg("limit") = py::none(), "Anchor lists a_3..a_n of each member, in stream order.");

  m.def("build_graph", [](const std::vector<int>& q, std::optional<std::vector<int>> anchors) {
        return graph_to_py(build_cp_graph(member(q, anchors)));
      },
      py::arg("q"), py::arg("anchors") = py::none());
  m.def("parse_graph", [](const std::string& text) { return graph_to_py(parse_graph_input(text)); }, py::arg("text"));
  m.def("distance_matrix", [](int n, const Edges& edges) { return matrix_to_py(all_pairs_distances(LabeledGraph(n, edges))); },
        py::arg("n"), py::arg("edges"));
  m.def(
      "attach",
      [](int n, const Edges& edges, std::pair<int, int> edge, const std::vector<int>& q,
         std::optional<std::vector<int>> anchors) {
        return graph_to_py(attach(LabeledGraph(n, edges), edge, build_cp_graph(member(q, anchors))).graph);
      },
      py::arg("n"), py::arg("edges"), py::arg("edge"), py::arg("q"), py::arg("anchors") = py::none());

  m.def("reduced_graph", [](const std::vector<int>& q) { return json_to_py(weighted_graph_to_json(reduced_graph(validate_nonleaping(q)))); },
        py::arg("q"));
  m.def("reducing_matrix", [](const std::vector<int>& q, std::optional<std::vector<int>> anchors) {
        return matrix_to_py(reducing_matrix(member(q, anchors)));
      },
      py::arg("q"), py::arg("anchors") = py::none());
  m.def("congruence_reduce", [](const py::sequence& d, const py::sequence& e) {
        return matrix_to_py(congruence_reduce(matrix_from_py(d), matrix_from_py(e)));
      },
      py::arg("d"), py::arg("e"));

  m.def("determinant", [](const py::sequence& a) { return to_py(determinant(matrix_from_py(a))); }, py::arg("a"));
  m.def("inertia", [](const py::sequence& a) { return inertia_to_py(inertia_congruence(matrix_from_py(a))); }, py::arg("a"));
  m.def("inertia_leading_minors", [](const py::sequence& a) { return inertia_to_py(inertia_leading_minors(matrix_from_py(a))); },
        py::arg("a"));
  m.def("cofactor_sum", [](const py::sequence& a) { return to_py(cofactor_sum(matrix_from_py(a))); }, py::arg("a"));
  m.def("matrix_invariants", [](const py::sequence& a) { return invariants_to_py(matrix_invariants(matrix_from_py(a))); },
        py::arg("a"));
  m.def("graph_invariants", [](int n, const Edges& edges) { return invariants_to_py(distance_invariants(LabeledGraph(n, edges))); },
        py::arg("n"), py::arg("edges"));
  m.def("family_invariants", [](const std::vector<int>& q) { return invariants_to_py(family_invariants(validate_nonleaping(q))); },
        py::arg("q"));
  m.def("cp2_invariants", [](const std::string& literal) { return invariants_to_py(cp2_invariants(parse_clique_path_literal(literal))); },
        py::arg("literal"));

  m.def("verify_scheme", [](int n, const Edges& edges, int d, const std::vector<std::string>& addr) {
        return verify_scheme(LabeledGraph(n, edges), AddressScheme{d, addr});
      },
      py::arg("n"), py::arg("edges"), py::arg("d"), py::arg("addr"));
  m.def(
      "search_scheme",
      [](int n, const Edges& edges, int d, std::uint64_t budget) -> std::optional<std::vector<std::string>> {
        auto s = search_scheme(LabeledGraph(n, edges), d, budget);
        if (!s) return std::nullopt;
        return s->addresses;
      },
      py::arg("n"), py::arg("edges"), py::arg("d"), py::arg("budget") = kDefaultSearchBudget);
  m.def("exact_n", [](int n, const Edges& edges, std::uint64_t budget) { return exact_N(LabeledGraph(n, edges), budget); },
        py::arg("n"), py::arg("edges"), py::arg("budget") = kDefaultSearchBudget);

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, std::optional<int> scale) {
        SuiteResult r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, seed, scale);
        }
        return json_to_py(suite_result_to_json(r));
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("scale") = py::none());
}
