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

#ifndef BIRKHOFF_LINEAR_SYSTEM_HPP
#define BIRKHOFF_LINEAR_SYSTEM_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birkhoff/elimination.hpp"
#include "birkhoff/interpolation_matrix.hpp"
#include "birkhoff/polynomial.hpp"

namespace birkhoff {

/// Pairwise distinct interpolation knots, one per matrix row.
class KnotSet {
 public:
  explicit KnotSet(std::vector<Rational> knots);

  int size() const { return static_cast<int>(knots_.size()); }
  const Rational& operator[](int i) const { return knots_[static_cast<size_t>(i)]; }
  const std::vector<Rational>& values() const { return knots_; }
  bool is_sorted() const;

  bool operator==(const KnotSet&) const = default;

 private:
  std::vector<Rational> knots_;
};

/// An interpolation problem: which derivative orders are constrained (the
/// matrix) and where (the knots). |E| may exceed d+1 here; operations that
/// need |E| <= d+1 check it themselves.
struct Problem {
  InterpolationMatrix matrix;
  KnotSet knots;

  Problem(InterpolationMatrix m, KnotSet x);
  int ambient_degree() const { return matrix.ambient_degree(); }
  bool operator==(const Problem&) const = default;
};

/// Rows of the problem permuted so the knots increase. Regularity is
/// unaffected; rules that need ordered knots apply to this form.
Problem sorted_by_knots(const Problem& p);

/// Constraint identity for one system row: derivative deriv_order at knot
/// knot_index.
struct ConstraintLabel {
  int knot_index = 0;
  int deriv_order = 0;
  bool operator==(const ConstraintLabel&) const = default;
};

/// Matrix of the homogeneous system in the x^j/j! coefficient basis: the row
/// for constraint (i,k) has entry x_i^{j-k}/(j-k)! in column j (zero for
/// j < k). Rows are ordered column-major over E -- all derivative order 0
/// constraints by ascending row, then order 1, and so on -- which makes the
/// column-split block structure literal.
class SystemMatrix {
 public:
  SystemMatrix(RationalMatrix entries, std::vector<ConstraintLabel> labels, int cols);

  int rows() const { return static_cast<int>(entries_.size()); }
  int cols() const { return cols_; }
  const RationalMatrix& entries() const { return entries_; }
  const std::vector<ConstraintLabel>& labels() const { return labels_; }
  std::string str() const;

 private:
  RationalMatrix entries_;
  std::vector<ConstraintLabel> labels_;
  int cols_;
};

SystemMatrix build_system(const Problem& p);

struct RankReport {
  int rank = 0;
  /// Basis of the solution space of the homogeneous problem, mapped back to
  /// standard-basis polynomials of the ambient degree.
  std::vector<Polynomial> nullspace;
  bool full_row_rank = false;
};

RankReport rank_and_nullspace(const SystemMatrix& a, Exec exec = Exec::parallel);

/// True iff the system has full row rank |E|, i.e. the solution set has the
/// expected dimension d+1-|E| for every right-hand side. Throws
/// std::domain_error when |E| > d+1 (the question is ill-posed there).
bool is_regular(const Problem& p, Exec exec = Exec::parallel);

/// Columns 0..r as a problem of ambient degree r, and columns r+1..d as a
/// problem of ambient degree d-r-1 (column k of the right part standing for
/// derivative order k of the lower-degree polynomial). Requires 0 <= r < d.
std::pair<Problem, Problem> split_problem(const Problem& p, int r);

/// Checks that under the canonical row order the system matrix is block
/// upper triangular with respect to the column split at r -- the blocks on
/// the diagonal being exactly the subproblem systems -- and that the rank is
/// at least the sum of the subproblem ranks.
bool verify_block_form(const Problem& p, int r, Exec exec = Exec::parallel);

/// "matrix @ knot,knot,..." e.g. "100;010;100 @ -1,0,1".
Problem parse_problem(std::string_view text);
std::string problem_text(const Problem& p);

}  // namespace birkhoff

#endif  // BIRKHOFF_LINEAR_SYSTEM_HPP
