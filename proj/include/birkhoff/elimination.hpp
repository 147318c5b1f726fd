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

#ifndef BIRKHOFF_ELIMINATION_HPP
#define BIRKHOFF_ELIMINATION_HPP

#include <vector>

#include "birkhoff/rational.hpp"

namespace birkhoff {

/// Execution policy for the elimination kernels. The parallel kernel spreads
/// row updates over OpenMP threads; the serial kernel is the reference
/// implementation the tests compare against. Both produce the reduced row
/// echelon form, which is unique, so their outputs must agree bit for bit.
enum class Exec { serial, parallel };

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowReduction {
  int rank = 0;
  std::vector<int> pivot_columns;
  RationalMatrix rref;
};

/// Gaussian elimination over Q with first-nonzero pivoting: forward echelon
/// pass, then back-substitution, with the independent row updates of both
/// phases spread over OpenMP threads when the policy asks for it.
RowReduction row_reduce(RationalMatrix m, Exec exec = Exec::parallel);

/// Plain-loop serial implementation kept as the reference to test against.
RowReduction row_reduce_serial_reference(RationalMatrix m);

int matrix_rank(const RationalMatrix& m, Exec exec = Exec::parallel);

/// Basis of {x : Mx = 0} read off a reduction of M; one vector per free
/// column, with that free coordinate set to 1.
std::vector<std::vector<Rational>> nullspace_from_reduction(const RowReduction& red, int cols);

}  // namespace birkhoff

#endif  // BIRKHOFF_ELIMINATION_HPP
