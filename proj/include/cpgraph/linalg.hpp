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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

#include "cpgraph/matrix.hpp"

namespace cpgraph {

using Rational = boost::multiprecision::cpp_rational;

/// Counts of positive, negative and zero eigenvalues.
struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  std::size_t order() const noexcept { return n_plus + n_minus + n_zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
BigInt determinant(const IntMatrix& a);

/// Symmetric rational elimination. When every remaining diagonal entry is
/// zero but some off-diagonal a_ij is not, row/column j is added into
/// row/column i, which makes the new pivot 2*a_ij. Throws NotSymmetric.
Inertia inertia_congruence(const IntMatrix& a);

/// D_1..D_n, the leading principal minors.
std::vector<BigInt> leading_principal_minors(const IntMatrix& a);

/// Inertia from sign changes of 1, D_1, ..., D_n with zeros skipped.
/// Throws NotSymmetric, Singular, or ConsecutiveZeroMinors when two adjacent
/// minors vanish.
Inertia inertia_leading_minors(const IntMatrix& a);

/// Sum of all signed cofactors, as det(A + J) - det(A).
BigInt cofactor_sum(const IntMatrix& a);

/// det(A + J_{2,n}) - det(A), with J_2 in the top-left corner.
/// Throws DimensionTooSmall for n < 2.
BigInt reduced_cofactor_sum(const IntMatrix& a);

int sign(const BigInt& x);

}  // namespace cpgraph
