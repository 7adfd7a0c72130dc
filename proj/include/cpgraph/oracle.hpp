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

// Slow, independent reference routines. Test-only: nothing in the library
// calls these, and none of them reuse the elimination code in linalg.

#include <vector>

#include "cpgraph/graph.hpp"
#include "cpgraph/linalg.hpp"
#include "cpgraph/matrix.hpp"

namespace cpgraph::oracle {

/// Laplace expansion along rows, memoised over column subsets. O(n 2^n).
BigInt determinant(const IntMatrix& a);

/// Sum over all (i, j) of (-1)^(i+j) det(A with row i, column j removed).
BigInt cofactor_sum(const IntMatrix& a);

/// Coefficients c_0..c_n of det(xI - A), c_n = 1, by trace recursion.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& a);

/// Inertia of a symmetric matrix read off its characteristic polynomial:
/// zero count from the lowest nonzero coefficient, positive count from
/// Descartes sign changes (exact since all roots are real).
Inertia inertia(const IntMatrix& a);

/// Graph distance by Floyd-Warshall; -1 for unreachable pairs.
std::vector<std::vector<int>> floyd_distances(const LabeledGraph& g);

/// Every labeled tree on n vertices, found by testing each (n-1)-edge subset
/// of K_n for connectivity. Sorted by edge list.
std::vector<LabeledGraph> trees_by_edge_subsets(int n);

}  // namespace cpgraph::oracle
