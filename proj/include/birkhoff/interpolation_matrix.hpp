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

#ifndef BIRKHOFF_INTERPOLATION_MATRIX_HPP
#define BIRKHOFF_INTERPOLATION_MATRIX_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace birkhoff {

/// 0/1 incidence matrix of a lacunary interpolation problem: row i holds the
/// constrained derivative orders at knot i, column k stands for the k-th
/// derivative. The column count is d+1 where d bounds the polynomial degree.
class InterpolationMatrix {
 public:
  InterpolationMatrix(int rows, int cols);

  /// Text format: rows of '0'/'1' joined by ';', e.g. "100;010;100".
  /// Ragged or empty rows are rejected.
  static InterpolationMatrix parse(std::string_view text);
  std::string text() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int ambient_degree() const { return cols_ - 1; }
  bool bit(int row, int col) const { return bits_[index(row, col)] != 0; }
  void set(int row, int col, bool value = true) { bits_[index(row, col)] = value ? 1 : 0; }
  /// |E|, the number of constraints.
  int ones() const;
  int ones_in_row(int row) const;

  /// Column slice [first, first+count) as a matrix in its own right.
  InterpolationMatrix columns(int first, int count) const;
  /// Same matrix with extra all-zero rows at the bottom.
  InterpolationMatrix padded_rows(int new_rows) const;
  /// Bitwise containment: other may have fewer rows (treated as zero-padded).
  bool contains(const InterpolationMatrix& other) const;

  bool operator==(const InterpolationMatrix&) const = default;

 private:
  size_t index(int row, int col) const;

  int rows_;
  int cols_;
  std::vector<uint8_t> bits_;
};

/// Maximal run of consecutive 1's inside one row.
struct SequenceSpan {
  int row = 0;
  int start_col = 0;
  int length = 0;
  bool operator==(const SequenceSpan&) const = default;
};

/// count[t] = number of 1's in the last t columns, t = 0..cols.
struct TailCounts {
  std::vector<long> count;
  long operator[](int t) const { return count[static_cast<size_t>(t)]; }
  int size() const { return static_cast<int>(count.size()); }
};

TailCounts tail_counts(const InterpolationMatrix& e);

/// At most r ones in the last r columns, for every r.
bool upper_polya(const InterpolationMatrix& e);

/// At least r ones in the first r columns, for every r. Only defined when
/// |E| = d+1 (throws otherwise), where it is equivalent to upper_polya.
bool polya(const InterpolationMatrix& e);

std::vector<SequenceSpan> sequences(const InterpolationMatrix& e);

/// Sequences of odd length whose first cell (i,k) has 1's strictly to the
/// northwest and southwest: positions (i1,k1), (i2,k2) with i1 < i < i2 and
/// k1, k2 < k. Their absence (plus polya) is the Atkinson-Sharma criterion.
std::vector<SequenceSpan> odd_supported_sequences(const InterpolationMatrix& e);

/// Atkinson-Sharma: polya(e) and no odd supported sequence. Requires
/// |E| = d+1; guarantees order regularity.
bool atkinson_sharma(const InterpolationMatrix& e);

/// N_1 <= 1 and N_r + N_{r-1} <= r for r = 2..d+1, where N = tail_counts(e).
/// Guarantees regularity of e for every knot set.
bool tail_count_condition(const InterpolationMatrix& e);

/// True when every odd sequence starts in column 0 (such sequences can never
/// be supported, so together with polya this gives regularity).
bool odd_sequences_start_in_first_column(const InterpolationMatrix& e);

/// Adds 1's (and fresh one-constraint rows at the bottom) to a matrix
/// passing tail_count_condition until |E| = d+1 with polya satisfied and all
/// odd sequences starting in column 0. Throws when the precondition fails.
InterpolationMatrix complete_matrix(const InterpolationMatrix& f);

/// All indices s in {0..n-1} with (u[s+t] - u[s])/t <= (u[n] - u[0])/n for
/// every t = 1..n-s; nonempty for every sequence with n >= 1. Ascending.
std::vector<int> slope_split_indices(const std::vector<long>& u);

}  // namespace birkhoff

#endif  // BIRKHOFF_INTERPOLATION_MATRIX_HPP
