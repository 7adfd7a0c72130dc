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

#include "cpgraph/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace cpgraph::oracle {

namespace {

// det of the submatrix on the given rows (ascending) and the columns in
// `cols` (same popcount). f[m] = det of the first popcount(m) rows against
// the columns in m, expanded along its last row.
BigInt minor_laplace(const IntMatrix& a, const std::vector<std::size_t>& rows, std::uint32_t cols) {
  std::vector<std::uint32_t> subs;
  for (std::uint32_t m = cols;; m = (m - 1) & cols) {
    subs.push_back(m);
    if (m == 0) break;
  }
  std::sort(subs.begin(), subs.end(), [](auto x, auto y) { return std::popcount(x) < std::popcount(y); });
  std::vector<BigInt> f(std::size_t{1} << a.order());
  f[0] = 1;
  for (std::uint32_t m : subs) {
    if (m == 0) continue;
    const auto r = static_cast<std::size_t>(std::popcount(m)) - 1;
    BigInt acc = 0;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (!(m >> j & 1u)) continue;
      const BigInt& entry = a(rows[r], j);
      if (entry != 0) {
        const BigInt term = entry * f[m & ~(1u << j)];
        if ((r + pos) % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++pos;
    }
    f[m] = acc;
  }
  return f[cols];
}

std::uint32_t full_mask(std::size_t n) { return n == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1); }

void require_small(const IntMatrix& a) {
  if (a.order() > 20) throw std::invalid_argument("oracle routines are for n <= 20");
}

}  // namespace

BigInt determinant(const IntMatrix& a) {
  require_small(a);
  std::vector<std::size_t> rows(a.order());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return minor_laplace(a, rows, full_mask(a.order()));
}

BigInt cofactor_sum(const IntMatrix& a) {
  require_small(a);
  const std::size_t n = a.order();
  if (n == 0) return 0;
  if (n == 1) return 1;
  BigInt total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < n; ++r)
      if (r != i) rows.push_back(r);
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt m = minor_laplace(a, rows, full_mask(n) & ~(1u << j));
      total += ((i + j) % 2 == 0) ? m : BigInt(-m);
    }
  }
  return total;
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& a) {
  // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k) / k, M_{k+1} = A M_k + c_{n-k} I.
  const std::size_t n = a.order();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    const IntMatrix am = a * m;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long long>(k);  // exact for integer matrices
    m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k];
  }
  return c;
}

Inertia inertia(const IntMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("oracle inertia needs a symmetric matrix");
  const auto c = characteristic_polynomial(a);
  const std::size_t n = a.order();
  std::size_t zeros = 0;
  while (zeros < n && c[zeros] == 0) ++zeros;
  auto changes = [](const std::vector<BigInt>& coeffs) {
    std::size_t out = 0;
    int last = 0;
    for (const auto& x : coeffs) {
      const int s = x.sign();
      if (s == 0) continue;
      if (last != 0 && s != last) ++out;
      last = s;
    }
    return out;
  };
  // roots of p(-x) count the negative eigenvalues
  std::vector<BigInt> flipped(c);
  for (std::size_t k = 1; k < flipped.size(); k += 2) flipped[k] = -flipped[k];
  return Inertia{changes(c), changes(flipped), zeros};
}

std::vector<std::vector<int>> floyd_distances(const LabeledGraph& g) {
  const int n = g.order();
  constexpr int inf = 1 << 28;
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u - 1][v - 1] = d[v - 1][u - 1] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

std::vector<LabeledGraph> trees_by_edge_subsets(int n) {
  std::vector<std::pair<int, int>> all;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all.emplace_back(u, v);
  std::vector<LabeledGraph> out;
  if (n == 1) out.emplace_back(1);
  if (n < 2) return out;
  // choose n-1 of the edges via a selection mask in lexicographic order
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.begin(), pick.begin() + (n - 1), true);
  do {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) edges.push_back(all[i]);
    LabeledGraph g(n, edges);
    const auto d = floyd_distances(g);
    if (std::none_of(d[0].begin(), d[0].end(), [](int x) { return x < 0; })) out.push_back(std::move(g));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end(), [](const LabeledGraph& a, const LabeledGraph& b) { return a.edges() < b.edges(); });
  return out;
}

}  // namespace cpgraph::oracle
