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

#include "cpgraph/linalg.hpp"

#include <utility>

#include "cpgraph/error.hpp"

namespace cpgraph {

int sign(const BigInt& x) { return x.sign(); }

BigInt determinant(const IntMatrix& a) {
  const std::size_t n = a.order();
  if (n == 0) return 1;
  IntMatrix m = a;
  BigInt prev = 1;
  int flips = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
      ++flips;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // exact by Sylvester's identity
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  BigInt det = m(n - 1, n - 1);
  return flips % 2 ? BigInt(-det) : det;
}

Inertia inertia_congruence(const IntMatrix& a) {
  if (!a.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "inertia needs a symmetric matrix");
  const std::size_t n = a.order();
  std::vector<Rational> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = Rational(a(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return m[i * n + j]; };

  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;

  Inertia result;
  while (!active.empty()) {
    std::size_t pivot_pos = active.size();
    for (std::size_t p = 0; p < active.size(); ++p) {
      if (at(active[p], active[p]) != 0) {
        pivot_pos = p;
        break;
      }
    }
    if (pivot_pos == active.size()) {
      // all remaining diagonal entries vanish; look for a_ij != 0
      std::size_t pi = active.size(), pj = active.size();
      for (std::size_t p = 0; p < active.size() && pi == active.size(); ++p)
        for (std::size_t q = p + 1; q < active.size(); ++q)
          if (at(active[p], active[q]) != 0) {
            pi = p;
            pj = q;
            break;
          }
      if (pi == active.size()) {
        result.n_zero += active.size();
        break;
      }
      const std::size_t i = active[pi], j = active[pj];
      for (std::size_t c : active) at(i, c) += at(j, c);
      for (std::size_t r : active) at(r, i) += at(r, j);
      pivot_pos = pi;
    }
    const std::size_t piv = active[pivot_pos];
    const Rational d = at(piv, piv);
    (d > 0 ? result.n_plus : result.n_minus) += 1;
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    for (std::size_t r : active) {
      if (at(r, piv) == 0) continue;
      const Rational factor = at(r, piv) / d;
      for (std::size_t c : active) at(r, c) -= factor * at(piv, c);
    }
  }
  return result;
}

std::vector<BigInt> leading_principal_minors(const IntMatrix& a) {
  std::vector<BigInt> minors;
  minors.reserve(a.order());
  for (std::size_t k = 1; k <= a.order(); ++k) minors.push_back(determinant(a.leading(k)));
  return minors;
}

Inertia inertia_leading_minors(const IntMatrix& a) {
  if (!a.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "inertia needs a symmetric matrix");
  const std::size_t n = a.order();
  const auto minors = leading_principal_minors(a);
  if (n > 0 && minors.back() == 0) throw Error(ErrorKind::Singular, "matrix is singular");
  for (std::size_t k = 1; k < minors.size(); ++k) {
    if (minors[k] == 0 && minors[k - 1] == 0) {
      throw Error(ErrorKind::ConsecutiveZeroMinors, "leading minors D_" + std::to_string(k) + " and D_" +
                                                        std::to_string(k + 1) + " both vanish",
                  static_cast<long>(k));
    }
  }
  int last = 1;
  std::size_t changes = 0;
  for (const auto& d : minors) {
    const int s = sign(d);
    if (s == 0) continue;
    if (s != last) ++changes;
    last = s;
  }
  return Inertia{n - changes, changes, 0};
}

BigInt cofactor_sum(const IntMatrix& a) {
  return determinant(a + IntMatrix::all_ones(a.order())) - determinant(a);
}

BigInt reduced_cofactor_sum(const IntMatrix& a) {
  if (a.order() < 2) throw Error(ErrorKind::DimensionTooSmall, "reduced cofactor sum needs order >= 2");
  IntMatrix shifted = a;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) shifted(i, j) += 1;
  return determinant(shifted) - determinant(a);
}

}  // namespace cpgraph
