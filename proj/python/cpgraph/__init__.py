# Copyright 2026 The cpgraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact distance-matrix invariants of clique-path graphs."""

from ._core import (
    CpgraphError,
    attach,
    build_graph,
    cofactor_sum,
    congruence_reduce,
    count_family,
    cp2_invariants,
    determinant,
    distance_matrix,
    enumerate_family,
    exact_n,
    expand,
    family_invariants,
    graph_invariants,
    inertia,
    inertia_leading_minors,
    matrix_invariants,
    parse_graph,
    reduced_graph,
    reducing_matrix,
    run_suite,
    search_scheme,
    suite_names,
    validate,
    verify_scheme,
)

__all__ = [name for name in dir() if not name.startswith("_")]
