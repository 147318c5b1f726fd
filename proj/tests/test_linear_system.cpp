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

#include "birkhoff/linear_system.hpp"
#include "test_support.hpp"

using namespace birkhoff;

namespace {

std::vector<Rational> rational_row(const std::vector<const char*>& texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

Problem wide_example_problem() {
  return parse_problem("100100;100010;100100 @ 0,1,3");
}

}  // namespace

TEST_CASE("knot sets must be distinct") {
  CHECK_THROWS_AS(KnotSet({Rational(0), Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem("100;100 @ 1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_problem("100;100"), std::invalid_argument);
  CHECK_THROWS_AS(Problem(InterpolationMatrix(2, 3), KnotSet({Rational(0)})), std::invalid_argument);
}

TEST_CASE("system rows in the factorial-scaled basis") {
  const SystemMatrix a = build_system(wide_example_problem());
  REQUIRE(a.rows() == 6);
  // Column-major constraint order: the three evaluations first.
  CHECK(a.labels()[0] == ConstraintLabel{0, 0});
  CHECK(a.labels()[1] == ConstraintLabel{1, 0});
  CHECK(a.labels()[2] == ConstraintLabel{2, 0});
  CHECK(a.labels()[3] == ConstraintLabel{0, 3});
  CHECK(a.labels()[4] == ConstraintLabel{2, 3});
  CHECK(a.labels()[5] == ConstraintLabel{1, 4});
  // g(3): powers of 3 over factorials.
  CHECK(a.entries()[2] == rational_row({"1", "3", "9/2", "9/2", "27/8", "81/40"}));
  // g'''(0) and g''''(1).
  CHECK(a.entries()[3] == rational_row({"0", "0", "0", "1", "0", "0"}));
  CHECK(a.entries()[5] == rational_row({"0", "0", "0", "0", "1", "1"}));
}

TEST_CASE("rank and nullspace of the middle-derivative system") {
  const Problem p = parse_problem("100;010;100 @ -1,0,1");
  const RankReport report = rank_and_nullspace(build_system(p));
  CHECK(report.rank == 2);
  CHECK_FALSE(report.full_row_rank);
  REQUIRE(report.nullspace.size() == 1);
  CHECK(report.nullspace.front().monic() == parse_polynomial("x^2-1"));
  CHECK_FALSE(is_regular(p));
}

TEST_CASE("full interpolation systems have full rank") {
  testing::Rng rng(3);
  for (int d = 1; d <= 6; ++d) {
    InterpolationMatrix lagrange(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) lagrange.set(i, 0);
    const Problem p(lagrange, testing::random_knots(rng, d + 1, false));
    const RankReport report = rank_and_nullspace(build_system(p));
    CHECK(report.rank == d + 1);
    CHECK(report.nullspace.empty());
    CHECK(is_regular(p));
  }
}

TEST_CASE("the wide example is regular at knots 0,1,3") {
  const RankReport report = rank_and_nullspace(build_system(wide_example_problem()));
  CHECK(report.rank == 6);
  CHECK(report.nullspace.empty());
  CHECK(is_regular(wide_example_problem()));
  CHECK(is_regular(parse_problem("100;010;100 @ 0,1,3")));
}

TEST_CASE("too many constraints is an error, not a verdict") {
  CHECK_THROWS_AS(is_regular(parse_problem("111;111 @ 0,1")), std::domain_error);
}

TEST_CASE("nullspace members satisfy every constraint exactly") {
  testing::Rng rng(23);
  int checked = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 5;
    std::uniform_int_distribution<int> rows(1, 4);
    const int m = rows(rng);
    std::uniform_int_distribution<int> ones(1, d + 1);
    const InterpolationMatrix e = testing::random_matrix(rng, m, d + 1, ones(rng));
    const Problem p(e, testing::random_knots(rng, m, false));
    const RankReport report = rank_and_nullspace(build_system(p));
    for (const Polynomial& g : report.nullspace) {
      for (int i = 0; i < m; ++i) {
        for (int k = 0; k <= d; ++k) {
          if (!e.bit(i, k)) continue;
          ++checked;
          CHECK(eval_derivative(g, k, p.knots[i]) == 0);
        }
      }
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("rank agrees with the standard-basis system") {
  // Scaling column j by j! changes nothing about the rank.
  testing::Rng rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 5;
    std::uniform_int_distribution<int> rows(1, 4);
    const int m = rows(rng);
    std::uniform_int_distribution<int> ones(1, d + 1);
    const InterpolationMatrix e = testing::random_matrix(rng, m, d + 1, ones(rng));
    const Problem p(e, testing::random_knots(rng, m, false));

    RationalMatrix standard;
    for (int k = 0; k <= d; ++k) {
      for (int i = 0; i < m; ++i) {
        if (!e.bit(i, k)) continue;
        std::vector<Rational> row(static_cast<size_t>(d) + 1);
        for (int j = k; j <= d; ++j) {
          row[static_cast<size_t>(j)] =
              pow(p.knots[i], static_cast<unsigned long>(j - k)) *
              Rational(factorial(static_cast<unsigned long>(j)) /
                       factorial(static_cast<unsigned long>(j - k)));
        }
        standard.push_back(std::move(row));
      }
    }
    CHECK(rank_and_nullspace(build_system(p)).rank == matrix_rank(standard));
  }
}

TEST_CASE("splitting the wide example in the middle") {
  const auto [left, right] = split_problem(wide_example_problem(), 2);
  CHECK(left.matrix.text() == "100;100;100");
  CHECK(right.matrix.text() == "100;010;100");
  CHECK(left.ambient_degree() == 2);
  CHECK(right.ambient_degree() == 2);
  CHECK(is_regular(right));  // h(0)=0, h'(1)=0, h(3)=0 on degree <= 2
  CHECK_THROWS_AS(split_problem(wide_example_problem(), 5), std::invalid_argument);
}

TEST_CASE("split with an empty right part is trivially regular") {
  const Problem p = parse_problem("110;110 @ 0,1");
  const auto [left, right] = split_problem(p, 1);
  CHECK(right.matrix.ones() == 0);
  CHECK(is_regular(right));
}

TEST_CASE("block form of the wide example") {
  CHECK(verify_block_form(wide_example_problem(), 2));
  CHECK(verify_block_form(parse_problem("110;110 @ 0,1"), 1));
}

TEST_CASE("rank superadditivity under splits") {
  testing::Rng rng(53);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = 5;
    std::uniform_int_distribution<int> rows(1, 4);
    const int m = rows(rng);
    std::uniform_int_distribution<int> ones(0, d + 1);
    const InterpolationMatrix e = testing::random_matrix(rng, m, d + 1, ones(rng));
    const Problem p(e, testing::random_knots(rng, m, false));
    for (int r = 0; r < d; ++r) CHECK(verify_block_form(p, r));
  }
}

TEST_CASE("subproblems of regular problems stay regular") {
  testing::Rng rng(61);
  int regular_count = 0;
  for (int trial = 0; trial < 150 && regular_count < 40; ++trial) {
    const int d = 5;
    std::uniform_int_distribution<int> rows(1, 4);
    const int m = rows(rng);
    std::uniform_int_distribution<int> ones(1, d + 1);
    const InterpolationMatrix e = testing::random_matrix(rng, m, d + 1, ones(rng));
    const Problem p(e, testing::random_knots(rng, m, false));
    if (!is_regular(p)) continue;
    ++regular_count;
    // Drop every single 1 in turn; each subproblem must stay regular.
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k <= d; ++k) {
        if (!e.bit(i, k)) continue;
        InterpolationMatrix f = e;
        f.set(i, k, false);
        CHECK(is_regular(Problem(f, p.knots)));
      }
    }
  }
  CHECK(regular_count == 40);
}

TEST_CASE("split regularity propagates to the whole problem") {
  testing::Rng rng(67);
  int exercised = 0;
  for (int trial = 0; trial < 400 && exercised < 60; ++trial) {
    const int d = 5;
    std::uniform_int_distribution<int> rows(1, 4);
    const int m = rows(rng);
    std::uniform_int_distribution<int> ones(0, d + 1);
    const InterpolationMatrix e = testing::random_matrix(rng, m, d + 1, ones(rng));
    const Problem p(e, testing::random_knots(rng, m, false));
    std::uniform_int_distribution<int> split_at(0, d - 1);
    const int r = split_at(rng);
    const auto [left, right] = split_problem(p, r);
    if (left.matrix.ones() > r + 1 || right.matrix.ones() > d - r) continue;
    if (!is_regular(left) || !is_regular(right)) continue;
    ++exercised;
    CHECK(is_regular(p));
  }
  CHECK(exercised == 60);
}

TEST_CASE("the order criterion implies full rank at ordered knots") {
  testing::Rng rng(71);
  int passing = 0;
  for (int trial = 0; trial < 3000 && passing < 60; ++trial) {
    std::uniform_int_distribution<int> degree(5, 6);
    const int d = degree(rng);
    std::uniform_int_distribution<int> rows(2, d + 1);
    const int m = rows(rng);
    const InterpolationMatrix e = testing::random_matrix(rng, m, d + 1, d + 1);
    if (!atkinson_sharma(e)) continue;
    ++passing;
    for (int knot_trial = 0; knot_trial < 5; ++knot_trial) {
      const Problem p(e, testing::random_knots(rng, m, /*sorted=*/true));
      CHECK(rank_and_nullspace(build_system(p)).rank == d + 1);
    }
  }
  CHECK(passing == 60);
}

TEST_CASE("problem text round trip") {
  const Problem p = wide_example_problem();
  CHECK(problem_text(p) == "100100;100010;100100 @ 0,1,3");
  CHECK(parse_problem(problem_text(p)) == p);
}
