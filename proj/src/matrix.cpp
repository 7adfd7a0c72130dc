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

#include "cpgraph/matrix.hpp"

#include <sstream>

#include "cpgraph/error.hpp"

namespace cpgraph {

IntMatrix::IntMatrix(std::size_t order) : order_(order), data_(order * order) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix literal is not square");
    }
    std::size_t j = 0;
    for (long long v : row) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t order) {
  IntMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t order) {
  IntMatrix m(order);
  for (auto& x : m.data_) x = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = i + 1; j < order_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(order_);
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::leading(std::size_t k) const {
  if (k > order_) throw Error(ErrorKind::DimensionMismatch, "leading block larger than matrix");
  IntMatrix sub(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
  return sub;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& order) const {
  IntMatrix sub(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (order[i] >= order_ || order[j] >= order_) {
        throw Error(ErrorKind::IndexOutOfRange, "permutation index outside matrix");
      }
      sub(i, j) = (*this)(order[i], order[j]);
    }
  }
  return sub;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.order_ != b.order_) throw Error(ErrorKind::DimensionMismatch, "matrix sum of different orders");
  IntMatrix c(a.order_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.order_ != b.order_) throw Error(ErrorKind::DimensionMismatch, "matrix difference of different orders");
  IntMatrix c(a.order_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
  return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.order_ != b.order_) throw Error(ErrorKind::DimensionMismatch, "matrix product of different orders");
  const std::size_t n = a.order_;
  IntMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cpgraph
