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

#include "diffcong/linalg.hpp"

#include <algorithm>
#include <utility>

namespace diffcong::linalg {

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(cols);
  for (const Vector& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const std::uint32_t> values) {
  if (values.size() != cols_) throw UsageError("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::truncate_rows(std::size_t rows) {
  rows_ = std::min(rows, rows_);
  data_.resize(rows_ * cols_);
}

std::vector<Vector> Matrix::to_rows() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto v = row(r);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) out(r, c) = (*this)(r, columns[c]);
  }
  return out;
}

std::vector<std::size_t> rref(Matrix& m, const PrimeField& field) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pivot = lead;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(lead, k));
    }
    const std::uint32_t inv = field.inv(m(lead, c));
    for (std::size_t k = c; k < cols; ++k) m(lead, k) = field.mul(m(lead, k), inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c) == 0) continue;
      const std::uint32_t factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        m(r, k) = field.sub(m(r, k), field.mul(factor, m(lead, k)));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  m.truncate_rows(lead);
  return pivots;
}

std::size_t rank(Matrix m, const PrimeField& field) { return rref(m, field).size(); }

Matrix nullspace(const Matrix& m, const PrimeField& field) {
  Matrix reduced = m;
  const std::vector<std::size_t> pivots = rref(reduced, field);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  Matrix basis(cols);
  Vector v(cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(reduced(i, free));
    basis.append_row(v);
  }
  rref(basis, field);
  return basis;
}

Vector multiply(const Matrix& m, std::span<const std::uint32_t> x, const PrimeField& field) {
  if (x.size() != m.cols()) throw UsageError("vector length does not match matrix width");
  Vector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint32_t acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = field.add(acc, field.mul(m(r, c), x[c]));
    out[r] = acc;
  }
  return out;
}

bool is_rref(const Matrix& m) {
  std::size_t prev_pivot = 0;
  bool have_prev = false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t c = 0;
    while (c < m.cols() && m(r, c) == 0) ++c;
    if (c == m.cols()) return false;  // zero rows are not kept
    if (m(r, c) != 1) return false;
    if (have_prev && c <= prev_pivot) return false;
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other != r && m(other, c) != 0) return false;
    }
    prev_pivot = c;
    have_prev = true;
  }
  return true;
}

}  // namespace diffcong::linalg
