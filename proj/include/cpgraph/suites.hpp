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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpgraph/io.hpp"

namespace cpgraph {

struct CaseResult {
  std::string label;
  bool ok = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  int scale = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Failing cases in input order, at most kMaxReportedFailures of them.
  std::vector<CaseResult> failures;
  /// Suite-specific numbers (cases per size, members checked, ...).
  Json details = Json::object();

  bool ok() const noexcept { return failed == 0; }
};

inline constexpr std::size_t kMaxReportedFailures = 20;

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

/// Default size cap of a suite (largest n, largest m, or case count, as the
/// suite defines it). Throws UnknownSuite.
int default_scale(std::string_view name);

/// Runs every case of the named suite. Random inputs are drawn from `seed`
/// before any case runs, so the result does not depend on scheduling.
/// Throws UnknownSuite.
SuiteResult run_suite(std::string_view name, std::uint64_t seed, std::optional<int> scale = std::nullopt);

/// Worker count: CPGRAPH_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_count();

/// Runs job(i) for i in [0, count) on worker_count() threads; results are
/// stored by index.
std::vector<CaseResult> run_cases(std::size_t count, const std::function<CaseResult(std::size_t)>& job);

Json suite_result_to_json(const SuiteResult& r);

}  // namespace cpgraph
