/*
 * Copyright 2026 The lms Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LMS_MATRIX_HPP
#define LMS_MATRIX_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace lms {

using PointIndex = std::size_t;

/// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<PointIndex>;

/// Thrown for malformed inputs and violated preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major n x n matrix.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, const T& fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<const T> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

  SquareMatrix transposed() const {
    SquareMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out(j, i) = (*this)(i, j);
      }
    }
    return out;
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace lms

#endif  // LMS_MATRIX_HPP
