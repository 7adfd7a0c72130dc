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

#include "cpgraph/addressing.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>

#include "cpgraph/error.hpp"
#include "cpgraph/linalg.hpp"

namespace cpgraph {

int address_distance(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "addresses of lengths " + std::to_string(a.size()) + " and " +
                                               std::to_string(b.size()));
  }
  int dist = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (char c : {a[i], b[i]}) {
      if (c != '0' && c != '1' && c != '*') {
        throw Error(ErrorKind::InvalidAddress, std::string("symbol '") + c + "' is not in {0,1,*}");
      }
    }
    if ((a[i] == '0' && b[i] == '1') || (a[i] == '1' && b[i] == '0')) ++dist;
  }
  return dist;
}

bool verify_scheme(const LabeledGraph& g, const AddressScheme& scheme) {
  const auto n = static_cast<std::size_t>(g.order());
  if (scheme.addresses.size() != n) {
    throw Error(ErrorKind::SizeMismatch, "scheme has " + std::to_string(scheme.addresses.size()) +
                                             " addresses for " + std::to_string(n) + " vertices");
  }
  for (const auto& a : scheme.addresses) {
    if (static_cast<int>(a.size()) != scheme.d) throw Error(ErrorKind::LengthMismatch, "address length differs from d");
  }
  const auto dist = distance_table(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (address_distance(scheme.addresses[i], scheme.addresses[j]) != dist[i][j]) return false;
  return true;
}

namespace {

// symbol order used for the column constraint: 0 < 1 < *
struct Word {
  std::uint32_t zeros = 0;
  std::uint32_t ones = 0;
  std::vector<std::uint8_t> symbols;
};

int word_distance(const Word& a, const Word& b) {
  return std::popcount((a.zeros & b.ones) | (a.ones & b.zeros));
}

class SchemeSearch {
 public:
  SchemeSearch(const LabeledGraph& g, int d, std::uint64_t budget)
      : d_(d), budget_(budget), dist_(distance_table(g)) {
    // breadth-first assignment order
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::deque<int> queue{1};
    seen[1] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      order_.push_back(u - 1);
      for (int v : g.neighbors(u))
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
    }
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      Word w;
      std::size_t c = code;
      w.symbols.resize(static_cast<std::size_t>(d));
      // most significant symbol first so codes enumerate words lexicographically
      for (int pos = d - 1; pos >= 0; --pos) {
        const auto s = static_cast<std::uint8_t>(c % 3);
        c /= 3;
        w.symbols[static_cast<std::size_t>(pos)] = s;
        if (s == 0) w.zeros |= 1u << pos;
        if (s == 1) w.ones |= 1u << pos;
      }
      words_.push_back(std::move(w));
    }
    chosen_.assign(order_.size(), 0);
  }

  std::optional<AddressScheme> run() {
    std::vector<char> tied(d_ > 0 ? static_cast<std::size_t>(d_ - 1) : 0, 1);
    if (!extend(0, tied)) return std::nullopt;
    AddressScheme scheme;
    scheme.d = d_;
    scheme.addresses.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      std::string s;
      for (auto sym : words_[chosen_[i]].symbols) s.push_back(sym == 0 ? '0' : sym == 1 ? '1' : '*');
      scheme.addresses[static_cast<std::size_t>(order_[i])] = std::move(s);
    }
    return scheme;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool extend(std::size_t depth, const std::vector<char>& tied) {
    if (depth == order_.size()) return true;
    const int vertex = order_[depth];
    std::vector<char> next_tied(tied.size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const Word& word = words_[w];
      bool ok = true;
      for (std::size_t j = 0; j < tied.size() && ok; ++j)
        if (tied[j] && word.symbols[j] > word.symbols[j + 1]) ok = false;
      for (std::size_t prev = 0; prev < depth && ok; ++prev) {
        const int u = order_[prev];
        if (word_distance(word, words_[chosen_[prev]]) !=
            dist_[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(u)])
          ok = false;
      }
      if (!ok) continue;
      if (++nodes_ > budget_) {
        throw Error(ErrorKind::BudgetExceeded, "search stopped after " + std::to_string(budget_) + " nodes");
      }
      for (std::size_t j = 0; j < tied.size(); ++j)
        next_tied[j] = tied[j] && word.symbols[j] == word.symbols[j + 1];
      chosen_[depth] = w;
      if (extend(depth + 1, next_tied)) return true;
    }
    return false;
  }

  int d_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<int>> dist_;
  std::vector<int> order_;  // 0-based vertex indices
  std::vector<Word> words_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<AddressScheme> search_scheme(const LabeledGraph& g, int d, std::uint64_t budget, SearchStats* stats) {
  if (g.order() > kMaxSearchVertices) {
    throw Error(ErrorKind::TooLarge, "exhaustive search is limited to " + std::to_string(kMaxSearchVertices) +
                                         " vertices");
  }
  if (d < 0) throw Error(ErrorKind::DimensionTooSmall, "address length must be nonnegative");
  if (d > 16) throw Error(ErrorKind::TooLarge, "address length above 16");
  if (g.order() == 0) return AddressScheme{d, {}};
  SchemeSearch search(g, d, budget);
  std::optional<AddressScheme> found;
  try {
    found = search.run();
  } catch (...) {
    if (stats) stats->nodes = search.nodes();
    throw;
  }
  if (stats) stats->nodes = search.nodes();
  return found;
}

int exact_N(const LabeledGraph& g, std::uint64_t budget) {
  const int n = g.order();
  if (n > kMaxSearchVertices) {
    throw Error(ErrorKind::TooLarge, "exhaustive search is limited to " + std::to_string(kMaxSearchVertices) +
                                         " vertices");
  }
  if (n <= 1) return 0;
  const Inertia in = inertia_congruence(all_pairs_distances(g));
  const int lower = static_cast<int>(std::max(in.n_plus, in.n_minus));
  for (int d = lower; d <= n - 1; ++d) {
    if (search_scheme(g, d, budget)) return d;
  }
  throw Error(ErrorKind::CrossCheckFailed, "no scheme of length n-1 found");
}

}  // namespace cpgraph
