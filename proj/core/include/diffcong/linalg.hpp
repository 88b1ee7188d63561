// Copyright 2026 The diffcong Authors
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

#ifndef DIFFCONG_LINALG_HPP_
#define DIFFCONG_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diffcong/fq.hpp"

namespace diffcong::linalg {

using Vector = std::vector<std::uint32_t>;

// Dense row-major matrix over GF(q).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  explicit Matrix(std::size_t cols) : Matrix(0, cols) {}

  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  void append_row(std::span<const std::uint32_t> values);
  void truncate_rows(std::size_t rows);

  std::vector<Vector> to_rows() const;

  // Copy restricted to the given column indices, in that order.
  Matrix select_columns(std::span<const std::size_t> columns) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

// In-place reduced row echelon form; drops zero rows. Returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, const PrimeField& field);

std::size_t rank(Matrix m, const PrimeField& field);

// Basis of {x : m x = 0}, returned as the rows of an RREF matrix.
Matrix nullspace(const Matrix& m, const PrimeField& field);

// m * x, one entry per row.
Vector multiply(const Matrix& m, std::span<const std::uint32_t> x, const PrimeField& field);

bool is_rref(const Matrix& m);

}  // namespace diffcong::linalg

#endif  // DIFFCONG_LINALG_HPP_
