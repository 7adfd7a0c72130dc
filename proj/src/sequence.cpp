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

#include "cpgraph/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "cpgraph/error.hpp"

namespace cpgraph {

NonLeapingSequence::NonLeapingSequence(std::vector<int> q) : q_(std::move(q)) {
  if (q_.size() < 2) {
    throw Error(ErrorKind::LengthTooShort, "a non-leaping sequence needs at least two terms");
  }
  if (q_[0] != 0 || q_[1] != 1) {
    throw Error(ErrorKind::HeadMismatch, "sequence must start with 0,1");
  }
  for (std::size_t i = 2; i < q_.size(); ++i) {
    if (q_[i] < 2 || q_[i] > q_[i - 1] + 1) {
      const long k = static_cast<long>(i) + 1;
      throw Error(ErrorKind::LeapViolation,
                  "q_" + std::to_string(k) + " = " + std::to_string(q_[i]) +
                      " must lie in [2, " + std::to_string(q_[i - 1] + 1) + "]",
                  k);
    }
  }
}

NonLeapingSequence NonLeapingSequence::prefix(int m) const {
  if (m < 2 || m > size()) throw Error(ErrorKind::IndexOutOfRange, "prefix length out of range");
  return NonLeapingSequence(std::vector<int>(q_.begin(), q_.begin() + m));
}

NonLeapingSequence validate_nonleaping(std::vector<int> q) { return NonLeapingSequence(std::move(q)); }

int CliquePathSpec::vertex_count() const {
  int n = 2;
  for (int p : parts) n += p - 2;
  return n;
}

NonLeapingSequence expand_clique_path_spec(const CliquePathSpec& spec) {
  std::vector<int> q{0, 1};
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    const int p = spec.parts[i];
    if (p < 3) {
      throw Error(ErrorKind::PartTooSmall, "clique size " + std::to_string(p) + " is below 3",
                  static_cast<long>(i) + 1);
    }
    for (int v = 2; v <= p - 1; ++v) q.push_back(v);
  }
  return NonLeapingSequence(std::move(q));
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) return values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorKind::ParseError, "bad integer '" + std::string(item) + "'",
                  static_cast<long>(values.size()) + 1);
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

CliquePathSpec parse_clique_path_literal(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 2 || s[0] != '2' || s[1] != ':') {
    throw Error(ErrorKind::ParseError, "clique-path literal must start with '2:'");
  }
  return CliquePathSpec{parse_int_list(std::string_view(s).substr(2))};
}

NonLeapingSequence parse_sequence_literal(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() >= 2 && s[0] == '2' && s[1] == ':') {
    return expand_clique_path_spec(parse_clique_path_literal(s));
  }
  return NonLeapingSequence(parse_int_list(s));
}

std::string to_literal(const NonLeapingSequence& s) {
  std::ostringstream os;
  for (int k = 1; k <= s.size(); ++k) os << (k > 1 ? "," : "") << s.q(k);
  return os.str();
}

std::string to_literal(const CliquePathSpec& spec) {
  std::ostringstream os;
  os << "2:";
  for (std::size_t i = 0; i < spec.parts.size(); ++i) os << (i ? "," : "") << spec.parts[i];
  return os.str();
}

// --- neighborhood sequences -------------------------------------------------

namespace {

// W_{k} built from a_k (with a_2 = 1, b_2 = 2 giving W_2 = {1}).
std::vector<int> window_of(const NonLeapingSequence& base, int k, int a_k) {
  if (k == 1) return {};
  std::vector<int> w{a_k};
  for (int x = base.b(k); x <= k - 1; ++x) w.push_back(x);
  return w;
}

}  // namespace

NeighborhoodSequence::NeighborhoodSequence(NonLeapingSequence base, std::vector<int> anchors)
    : base_(std::move(base)), anchors_(std::move(anchors)) {
  const int n = base_.size();
  if (static_cast<int>(anchors_.size()) != n - 2) {
    throw Error(ErrorKind::IndexOutOfRange,
                "expected " + std::to_string(n - 2) + " anchors, got " + std::to_string(anchors_.size()));
  }
  for (int k = 3; k <= n; ++k) {
    const auto allowed =
        admissible_anchors(base_, k, std::span<const int>(anchors_.data(), static_cast<std::size_t>(k - 3)));
    const int a = anchors_[static_cast<std::size_t>(k - 3)];
    if (std::find(allowed.begin(), allowed.end(), a) == allowed.end()) {
      throw Error(ErrorKind::InvalidAnchor, "a_" + std::to_string(k) + " = " + std::to_string(a) + " is not admissible",
                  k);
    }
  }
}

int NeighborhoodSequence::anchor(int k) const {
  if (k == 2) return 1;
  if (k < 2 || k > size()) throw Error(ErrorKind::IndexOutOfRange, "anchor index out of range", k);
  return anchors_[static_cast<std::size_t>(k - 3)];
}

std::vector<int> NeighborhoodSequence::window(int k) const {
  if (k < 1 || k > size()) throw Error(ErrorKind::IndexOutOfRange, "window index out of range", k);
  if (k == 1) return {};
  return window_of(base_, k, anchor(k));
}

std::vector<int> admissible_anchors(const NonLeapingSequence& base, int k, std::span<const int> prior_anchors) {
  if (k < 3 || k > base.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "anchor position must lie in [3, n]", k);
  }
  if (static_cast<int>(prior_anchors.size()) != k - 3) {
    throw Error(ErrorKind::IndexOutOfRange, "need exactly the anchors a_3..a_{k-1}", k);
  }
  const int prev_anchor = k == 3 ? 1 : prior_anchors.back();
  std::vector<int> out;
  for (int x : window_of(base, k - 1, prev_anchor))
    if (x < base.b(k)) out.push_back(x);
  return out;
}

int admissible_anchor_count(const NonLeapingSequence& base, int k) {
  if (k < 3 || k > base.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "anchor position must lie in [3, n]", k);
  }
  const int lo = base.b(k - 1);
  const int hi = std::min(k - 2, base.b(k) - 1);
  return 1 + std::max(0, hi - lo + 1);
}

NeighborhoodSequenceStream::NeighborhoodSequenceStream(NonLeapingSequence base, std::vector<int> fixed_prefix)
    : base_(std::move(base)), fixed_(fixed_prefix.size()), anchors_(std::move(fixed_prefix)) {
  const std::size_t free = static_cast<std::size_t>(base_.size() - 2);
  if (fixed_ > free) throw Error(ErrorKind::IndexOutOfRange, "fixed prefix longer than the anchor vector");
  // validate the prefix against the admissible sets
  for (std::size_t i = 0; i < fixed_; ++i) {
    const int k = static_cast<int>(i) + 3;
    const auto allowed = admissible_anchors(base_, k, std::span<const int>(anchors_.data(), i));
    if (std::find(allowed.begin(), allowed.end(), anchors_[i]) == allowed.end()) {
      throw Error(ErrorKind::InvalidAnchor, "prefix anchor is not admissible", k);
    }
  }
  anchors_.resize(free);
  choices_.resize(free);
  cursor_.resize(free);
}

// Fill positions [from, end) with their smallest admissible choice.
bool NeighborhoodSequenceStream::descend(std::size_t from) {
  for (std::size_t i = from; i < anchors_.size(); ++i) {
    choices_[i] = admissible_anchors(base_, static_cast<int>(i) + 3, std::span<const int>(anchors_.data(), i));
    if (choices_[i].empty()) return false;
    cursor_[i] = 0;
    anchors_[i] = choices_[i][0];
  }
  return true;
}

std::optional<NeighborhoodSequence> NeighborhoodSequenceStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (!descend(fixed_)) {
      done_ = true;
      return std::nullopt;
    }
    return NeighborhoodSequence(base_, anchors_);
  }
  // advance the odometer from the right
  std::size_t i = anchors_.size();
  while (i > fixed_) {
    --i;
    if (cursor_[i] + 1 < choices_[i].size()) {
      anchors_[i] = choices_[i][++cursor_[i]];
      if (descend(i + 1)) return NeighborhoodSequence(base_, anchors_);
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<NeighborhoodSequence> enumerate_neighborhood_sequences(const NonLeapingSequence& base,
                                                                   std::optional<std::size_t> limit) {
  std::vector<NeighborhoodSequence> out;
  NeighborhoodSequenceStream stream(base);
  while (!limit || out.size() < *limit) {
    auto ns = stream.next();
    if (!ns) break;
    out.push_back(std::move(*ns));
  }
  return out;
}

BigInt count_neighborhood_sequences(const NonLeapingSequence& base) {
  BigInt total = 1;
  for (int k = 3; k <= base.size(); ++k) total *= admissible_anchor_count(base, k);
  return total;
}

NeighborhoodSequence random_neighborhood_sequence(const NonLeapingSequence& base, std::mt19937_64& rng) {
  std::vector<int> anchors;
  for (int k = 3; k <= base.size(); ++k) {
    const auto allowed = admissible_anchors(base, k, anchors);
    std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
    anchors.push_back(allowed[pick(rng)]);
  }
  return NeighborhoodSequence(base, std::move(anchors));
}

std::vector<NonLeapingSequence> all_nonleaping_sequences(int n) {
  std::vector<NonLeapingSequence> out;
  if (n < 2) return out;
  std::vector<int> q{0, 1};
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(q.size()) == n) {
      out.emplace_back(q);
      return;
    }
    const int hi = q.back() + 1;
    for (int v = 2; v <= hi; ++v) {
      q.push_back(v);
      self(self);
      q.pop_back();
    }
  };
  rec(rec);
  return out;
}

NonLeapingSequence random_nonleaping_sequence(int n, std::mt19937_64& rng) {
  std::vector<int> q{0, 1};
  for (int k = 3; k <= n; ++k) {
    std::uniform_int_distribution<int> pick(2, q.back() + 1);
    q.push_back(pick(rng));
  }
  q.resize(static_cast<std::size_t>(std::max(n, 2)));
  return NonLeapingSequence(std::move(q));
}

}  // namespace cpgraph
