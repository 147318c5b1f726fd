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

#ifndef BIRKHOFF_DUALITY_HPP
#define BIRKHOFF_DUALITY_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "birkhoff/linear_system.hpp"
#include "birkhoff/polynomial.hpp"

namespace birkhoff {

/// The interpolation problem dual to a shifted-power family: term (a, e)
/// contributes the constraint g^(d-e)(a) = 0, i.e. a 1 in the row of knot a
/// at column d-e. The family is linearly independent iff this problem is
/// regular.
struct DualProblem {
  Problem problem;
  /// term index -> (row, column) of the cell it produced.
  std::vector<std::pair<int, int>> cell_of_term;
};

/// Rows are ordered by ascending shift; regularity does not depend on the
/// row order.
DualProblem to_dual(const PowerFamily& family);

/// Independence decided through the regularity of the dual problem.
/// Throws std::domain_error when the family has more than d+1 terms.
bool independent_via_duality(const PowerFamily& family, Exec exec = Exec::parallel);

/// Independence decided directly: expand every term and take the exact rank
/// of the k x (d+1) coefficient matrix.
bool independent_via_oracle(const PowerFamily& family, Exec exec = Exec::parallel);

/// Coefficients of a vanishing linear combination of the terms, empty when
/// the family is independent.
std::vector<Rational> dependence_witness(const PowerFamily& family, Exec exec = Exec::parallel);

/// Sufficient counting condition for independence: with n_j the number of
/// terms of degree < j, requires n_1 <= 1 and n_j + n_{j-1} <= j for
/// j = 2..d+1. True implies independence; the converse fails.
bool independence_count_condition(const PowerFamily& family);

/// Counts n_j for j = 0..d+1 (index 0 unused, kept for direct indexing).
std::vector<int> degree_counts(const PowerFamily& family);

/// JSON: either an array of {"shift": "p/q", "exp": n} or an object
/// {"degree": d, "terms": [...]}. Without "degree" the ambient degree is the
/// largest exponent.
PowerFamily parse_family_json(std::string_view json_text);
std::string family_to_json(const PowerFamily& family);

}  // namespace birkhoff

#endif  // BIRKHOFF_DUALITY_HPP
