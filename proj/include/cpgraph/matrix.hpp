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
#include <initializer_list>
#include <string>
#include <vector>

namespace cpgraph {

using BigInt = boost::multiprecision::cpp_int;

/// Dense square matrix of arbitrary-precision integers, row-major.
///
/// Indices are 0-based: row/column `i` corresponds to vertex `i + 1`.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t order);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t order);
  static IntMatrix all_ones(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  bool empty() const noexcept { return order_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

  bool is_symmetric() const;
  IntMatrix transposed() const;

  /// Leading principal submatrix on the first `k` rows and columns.
  IntMatrix leading(std::size_t k) const;
  /// Principal submatrix with rows/columns taken in the given order.
  IntMatrix permuted(const std::vector<std::size_t>& order) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t order_ = 0;
  std::vector<BigInt> data_;
};

std::string to_string(const IntMatrix& m);

}  // namespace cpgraph
