// Copyright 2026 The birkhoff Authors.
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

#include "birkhoff/elimination.hpp"

#include <omp.h>

#include <stdexcept>

namespace birkhoff {

namespace {

// Below this many update rows the OpenMP region costs more than the loop.
constexpr int kParallelRowCutoff = 16;

void check_rectangular(const RationalMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.front().size()) throw std::invalid_argument("ragged matrix");
  }
}

// row -= row[col] * pivot, zeroing column col of row. The pivot row is
// normalized, so no division appears here.
void subtract_multiple(std::vector<Rational>& row, const std::vector<Rational>& pivot, int col) {
  const Rational factor = row[static_cast<size_t>(col)];
  if (factor == 0) return;
  for (size_t j = static_cast<size_t>(col); j < row.size(); ++j) {
    row[j] -= factor * pivot[j];
  }
}

// Entering a libgomp region is not free even with a team of one, so the
// serial path must stay a plain loop; callers already inside a parallel
// region (batch drivers) also take it, rather than opening nested teams.
void eliminate_rows(RationalMatrix& m, const std::vector<Rational>& pivot_row, int col, int first,
                    int last, bool threaded) {
  if (threaded && last - first >= kParallelRowCutoff) {
#pragma omp parallel for schedule(dynamic)
    for (int i = first; i < last; ++i) {
      subtract_multiple(m[static_cast<size_t>(i)], pivot_row, col);
    }
  } else {
    for (int i = first; i < last; ++i) {
      subtract_multiple(m[static_cast<size_t>(i)], pivot_row, col);
    }
  }
}

}  // namespace

RowReduction row_reduce(RationalMatrix m, Exec exec) {
  if (m.empty()) return {0, {}, std::move(m)};
  check_rectangular(m);
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());
  const bool threaded =
      exec == Exec::parallel && omp_get_max_threads() > 1 && !omp_in_parallel();

  // Forward pass to row echelon form. The updates below a pivot touch
  // disjoint rows, so they spread over threads.
  std::vector<int> pivot_columns;
  int next_row = 0;
  for (int col = 0; col < cols && next_row < rows; ++col) {
    int pivot = -1;
    for (int i = next_row; i < rows; ++i) {
      if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(next_row)]);
    std::vector<Rational>& pivot_row = m[static_cast<size_t>(next_row)];
    const Rational lead = pivot_row[static_cast<size_t>(col)];
    for (int j = col; j < cols; ++j) pivot_row[static_cast<size_t>(j)] /= lead;
    eliminate_rows(m, pivot_row, col, next_row + 1, rows, threaded);
    pivot_columns.push_back(col);
    ++next_row;
  }

  // Back-substitution to the reduced form; the rows above each pivot are
  // again independent.
  for (int r = next_row - 1; r >= 0; --r) {
    const int col = pivot_columns[static_cast<size_t>(r)];
    eliminate_rows(m, m[static_cast<size_t>(r)], col, 0, r, threaded);
  }

  return {next_row, std::move(pivot_columns), std::move(m)};
}

RowReduction row_reduce_serial_reference(RationalMatrix m) {
  if (m.empty()) return {0, {}, std::move(m)};
  check_rectangular(m);
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m.front().size());

  // Forward pass to row echelon form.
  std::vector<int> pivot_columns;
  int next_row = 0;
  for (int col = 0; col < cols && next_row < rows; ++col) {
    int pivot = -1;
    for (int i = next_row; i < rows; ++i) {
      if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(next_row)]);
    const Rational lead = m[static_cast<size_t>(next_row)][static_cast<size_t>(col)];
    for (int j = col; j < cols; ++j) m[static_cast<size_t>(next_row)][static_cast<size_t>(j)] /= lead;
    for (int i = next_row + 1; i < rows; ++i) {
      const Rational factor = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j) {
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= factor * m[static_cast<size_t>(next_row)][static_cast<size_t>(j)];
      }
    }
    pivot_columns.push_back(col);
    ++next_row;
  }
  // Back-substitution to the reduced form.
  for (int r = next_row - 1; r >= 0; --r) {
    const int col = pivot_columns[static_cast<size_t>(r)];
    for (int i = 0; i < r; ++i) {
      const Rational factor = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j) {
        m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= factor * m[static_cast<size_t>(r)][static_cast<size_t>(j)];
      }
    }
  }
  return {next_row, std::move(pivot_columns), std::move(m)};
}

int matrix_rank(const RationalMatrix& m, Exec exec) { return row_reduce(m, exec).rank; }

std::vector<std::vector<Rational>> nullspace_from_reduction(const RowReduction& red, int cols) {
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : red.pivot_columns) is_pivot[static_cast<size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    std::vector<Rational> v(static_cast<size_t>(cols));
    v[static_cast<size_t>(free_col)] = 1;
    for (int r = 0; r < red.rank; ++r) {
      const int pc = red.pivot_columns[static_cast<size_t>(r)];
      v[static_cast<size_t>(pc)] = -red.rref[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace birkhoff
