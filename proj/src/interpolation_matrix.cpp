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

#include "birkhoff/interpolation_matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace birkhoff {

InterpolationMatrix::InterpolationMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 1) throw std::invalid_argument("bad matrix shape");
  bits_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
}

size_t InterpolationMatrix::index(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
  return static_cast<size_t>(row) * static_cast<size_t>(cols_) + static_cast<size_t>(col);
}

InterpolationMatrix InterpolationMatrix::parse(std::string_view text) {
  std::vector<std::string_view> row_texts;
  size_t start = 0;
  while (true) {
    const size_t sep = text.find(';', start);
    row_texts.push_back(text.substr(start, sep == std::string_view::npos ? sep : sep - start));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  if (row_texts.empty() || row_texts.front().empty()) {
    throw std::invalid_argument("empty matrix text");
  }
  const int cols = static_cast<int>(row_texts.front().size());
  InterpolationMatrix result(static_cast<int>(row_texts.size()), cols);
  for (int i = 0; i < result.rows(); ++i) {
    const auto& row = row_texts[static_cast<size_t>(i)];
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("ragged matrix rows");
    for (int k = 0; k < cols; ++k) {
      const char c = row[static_cast<size_t>(k)];
      if (c != '0' && c != '1') throw std::invalid_argument("matrix entries must be 0 or 1");
      result.set(i, k, c == '1');
    }
  }
  return result;
}

std::string InterpolationMatrix::text() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    if (i > 0) out += ';';
    for (int k = 0; k < cols_; ++k) out += bit(i, k) ? '1' : '0';
  }
  return out;
}

int InterpolationMatrix::ones() const {
  int total = 0;
  for (uint8_t b : bits_) total += b;
  return total;
}

int InterpolationMatrix::ones_in_row(int row) const {
  int total = 0;
  for (int k = 0; k < cols_; ++k) total += bit(row, k) ? 1 : 0;
  return total;
}

InterpolationMatrix InterpolationMatrix::columns(int first, int count) const {
  if (first < 0 || count < 1 || first + count > cols_) {
    throw std::invalid_argument("bad column slice");
  }
  InterpolationMatrix result(rows_, count);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < count; ++k) result.set(i, k, bit(i, first + k));
  }
  return result;
}

InterpolationMatrix InterpolationMatrix::padded_rows(int new_rows) const {
  if (new_rows < rows_) throw std::invalid_argument("padded_rows() cannot drop rows");
  InterpolationMatrix result(new_rows, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) result.set(i, k, bit(i, k));
  }
  return result;
}

bool InterpolationMatrix::contains(const InterpolationMatrix& other) const {
  if (other.cols_ != cols_ || other.rows_ > rows_) return false;
  for (int i = 0; i < other.rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      if (other.bit(i, k) && !bit(i, k)) return false;
    }
  }
  return true;
}

TailCounts tail_counts(const InterpolationMatrix& e) {
  TailCounts result;
  result.count.assign(static_cast<size_t>(e.cols()) + 1, 0);
  for (int t = 1; t <= e.cols(); ++t) {
    long column = 0;
    const int col = e.cols() - t;
    for (int i = 0; i < e.rows(); ++i) column += e.bit(i, col) ? 1 : 0;
    result.count[static_cast<size_t>(t)] = result.count[static_cast<size_t>(t) - 1] + column;
  }
  return result;
}

bool upper_polya(const InterpolationMatrix& e) {
  const TailCounts n = tail_counts(e);
  for (int r = 1; r <= e.cols(); ++r) {
    if (n[r] > r) return false;
  }
  return true;
}

bool polya(const InterpolationMatrix& e) {
  if (e.ones() != e.cols()) {
    throw std::invalid_argument("polya() needs |E| = d+1");
  }
  const TailCounts n = tail_counts(e);
  // With |E| = d+1 ones, "at least r in the first r columns" is
  // "at most d+1-r in the last d+1-r columns".
  for (int r = 1; r <= e.cols(); ++r) {
    const long first_r = n[e.cols()] - n[e.cols() - r];
    if (first_r < r) return false;
  }
  return true;
}

std::vector<SequenceSpan> sequences(const InterpolationMatrix& e) {
  std::vector<SequenceSpan> result;
  for (int i = 0; i < e.rows(); ++i) {
    int k = 0;
    while (k < e.cols()) {
      if (!e.bit(i, k)) {
        ++k;
        continue;
      }
      int end = k;
      while (end < e.cols() && e.bit(i, end)) ++end;
      result.push_back({i, k, end - k});
      k = end;
    }
  }
  return result;
}

std::vector<SequenceSpan> odd_supported_sequences(const InterpolationMatrix& e) {
  // first_one[i] = leftmost 1 of row i; a sequence starting at (i,k) is
  // supported iff some row above and some row below have a 1 left of k.
  const int m = e.rows();
  std::vector<int> first_one(static_cast<size_t>(m), std::numeric_limits<int>::max());
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < e.cols(); ++k) {
      if (e.bit(i, k)) {
        first_one[static_cast<size_t>(i)] = k;
        break;
      }
    }
  }
  std::vector<int> above(static_cast<size_t>(m) + 1, std::numeric_limits<int>::max());
  std::vector<int> below(static_cast<size_t>(m) + 1, std::numeric_limits<int>::max());
  for (int i = 0; i < m; ++i) {
    above[static_cast<size_t>(i) + 1] = std::min(above[static_cast<size_t>(i)], first_one[static_cast<size_t>(i)]);
  }
  for (int i = m - 1; i >= 0; --i) {
    below[static_cast<size_t>(i)] = std::min(below[static_cast<size_t>(i) + 1], first_one[static_cast<size_t>(i)]);
  }
  std::vector<SequenceSpan> result;
  for (const SequenceSpan& span : sequences(e)) {
    if (span.length % 2 == 0) continue;
    const bool supported = above[static_cast<size_t>(span.row)] < span.start_col &&
                           below[static_cast<size_t>(span.row) + 1] < span.start_col;
    if (supported) result.push_back(span);
  }
  return result;
}

bool atkinson_sharma(const InterpolationMatrix& e) {
  if (e.ones() != e.cols()) {
    throw std::invalid_argument("atkinson_sharma() needs |E| = d+1");
  }
  return polya(e) && odd_supported_sequences(e).empty();
}

bool tail_count_condition(const InterpolationMatrix& e) {
  const TailCounts n = tail_counts(e);
  if (n[1] > 1) return false;
  for (int r = 2; r <= e.cols(); ++r) {
    if (n[r] + n[r - 1] > r) return false;
  }
  return true;
}

bool odd_sequences_start_in_first_column(const InterpolationMatrix& e) {
  for (const SequenceSpan& span : sequences(e)) {
    if (span.length % 2 == 1 && span.start_col != 0) return false;
  }
  return true;
}

InterpolationMatrix complete_matrix(const InterpolationMatrix& f) {
  if (!tail_count_condition(f)) {
    throw std::invalid_argument("complete_matrix() needs the tail-count condition");
  }
  InterpolationMatrix e = f;
  // Left-extend every odd sequence that does not start in column 0. An
  // insertion can merge runs, so rescan the row after each one; a merged run
  // is either even or already starts in column 0, so this terminates with at
  // most one insertion per original odd sequence.
  for (int i = 0; i < e.rows(); ++i) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const SequenceSpan& span : sequences(e)) {
        if (span.row != i) continue;
        if (span.length % 2 == 1 && span.start_col > 0) {
          e.set(i, span.start_col - 1);
          changed = true;
          break;
        }
      }
    }
  }
  const int missing = e.cols() - e.ones();
  if (missing < 0) {
    throw std::logic_error("completion exceeded d+1 ones despite the tail-count condition");
  }
  // One-constraint rows at the bottom bring |E| up to d+1.
  InterpolationMatrix result = e.padded_rows(e.rows() + missing);
  for (int i = 0; i < missing; ++i) result.set(e.rows() + i, 0);
  return result;
}

std::vector<int> slope_split_indices(const std::vector<long>& u) {
  if (u.size() < 2) throw std::invalid_argument("slope_split_indices() needs n >= 1");
  const long n = static_cast<long>(u.size()) - 1;
  const long total_rise = u.back() - u.front();
  std::vector<int> result;
  for (long s = 0; s < n; ++s) {
    bool ok = true;
    for (long t = 1; t <= n - s; ++t) {
      // (u[s+t] - u[s]) / t <= total_rise / n, cross-multiplied
      if (n * (u[static_cast<size_t>(s + t)] - u[static_cast<size_t>(s)]) > t * total_rise) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(static_cast<int>(s));
  }
  return result;
}

}  // namespace birkhoff
