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

#include <doctest.h>

#include "birkhoff/certificate.hpp"
#include "birkhoff/elimination.hpp"
#include "test_support.hpp"

using namespace birkhoff;

namespace {

RationalMatrix random_rational_matrix(testing::Rng& rng, int rows, int cols) {
  RationalMatrix m(static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(cols)));
  std::uniform_int_distribution<int> zero(0, 3);
  for (auto& row : m) {
    for (auto& cell : row) {
      cell = zero(rng) == 0 ? Rational(0) : testing::random_rational(rng, 9, 4);
    }
  }
  return m;
}

bool reductions_equal(const RowReduction& a, const RowReduction& b) {
  return a.rank == b.rank && a.pivot_columns == b.pivot_columns && a.rref == b.rref;
}

}  // namespace

TEST_CASE("parallel elimination matches the serial reference exactly") {
  // The reduced row echelon form is unique, so the OpenMP kernel, its serial
  // run, and the plain-loop reference must agree entry for entry.
  testing::Rng rng(401);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> rows(1, 12), cols(1, 10);
    const RationalMatrix m = random_rational_matrix(rng, rows(rng), cols(rng));
    const RowReduction parallel = row_reduce(m, Exec::parallel);
    const RowReduction serial = row_reduce(m, Exec::serial);
    const RowReduction reference = row_reduce_serial_reference(m);
    CHECK(reductions_equal(parallel, serial));
    CHECK(reductions_equal(parallel, reference));
  }
}

TEST_CASE("parallel elimination matches the reference above the OpenMP cutoff") {
  testing::Rng rng(403);
  for (int trial = 0; trial < 3; ++trial) {
    const RationalMatrix m = random_rational_matrix(rng, 40, 30);
    const RowReduction parallel = row_reduce(m, Exec::parallel);
    const RowReduction reference = row_reduce_serial_reference(m);
    CHECK(reductions_equal(parallel, reference));
  }
}

TEST_CASE("rank-one structure is detected identically by both kernels") {
  RationalMatrix m(30, std::vector<Rational>(8));
  for (size_t i = 0; i < m.size(); ++i) {
    for (size_t j = 0; j < m[i].size(); ++j) {
      m[i][j] = Rational(static_cast<long>(i + 1)) * Rational(static_cast<long>(2 * j + 1), 3);
    }
  }
  CHECK(matrix_rank(m, Exec::parallel) == 1);
  CHECK(matrix_rank(m, Exec::serial) == 1);
}

TEST_CASE("certification agrees across execution policies") {
  testing::Rng rng(405);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 6;
    std::uniform_int_distribution<int> rows(1, 4);
    const int m = rows(rng);
    std::uniform_int_distribution<int> ones(0, d + 1);
    const InterpolationMatrix e = testing::random_matrix(rng, m, d + 1, ones(rng));
    const Problem p(e, testing::random_knots(rng, m, false));
    const CertifyResult serial = certify_regular(p, Exec::serial);
    const CertifyResult parallel = certify_regular(p, Exec::parallel);
    CHECK(serial.regular() == parallel.regular());
    if (serial.regular()) {
      CHECK(certificate_to_json(*serial.certificate) == certificate_to_json(*parallel.certificate));
    } else {
      CHECK(*serial.witness == *parallel.witness);
    }
  }
}
