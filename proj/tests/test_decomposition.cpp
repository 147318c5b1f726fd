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

#include "birkhoff/decomposition.hpp"
#include "birkhoff/duality.hpp"
#include "test_support.hpp"

using namespace birkhoff;

TEST_CASE("greedy decomposition on the reference inputs") {
  const Decomposition two_terms = greedy_decompose(parse_polynomial("x^2+2x+3"));
  REQUIRE(two_terms.size() == 2);
  CHECK(two_terms.terms[0] == DecompositionTerm{Rational(1), Rational(1), 2});
  CHECK(two_terms.terms[1] == DecompositionTerm{Rational(2), Rational(0), 0});

  const Decomposition constant = greedy_decompose(parse_polynomial("5"));
  REQUIRE(constant.size() == 1);
  CHECK(constant.terms[0] == DecompositionTerm{Rational(5), Rational(0), 0});

  const Decomposition pure_cube = greedy_decompose(parse_polynomial("x^3"));
  REQUIRE(pure_cube.size() == 1);
  CHECK(pure_cube.terms[0] == DecompositionTerm{Rational(1), Rational(0), 3});

  CHECK(greedy_decompose(Polynomial(4)).size() == 0);

  // Degree 1 takes a single term: 2x+1 = 2(x+1/2).
  const Decomposition line = greedy_decompose(parse_polynomial("2x+1"));
  REQUIRE(line.size() == 1);
  CHECK(line.terms[0] == DecompositionTerm{Rational(2), Rational(1, 2), 1});
}

TEST_CASE("greedy decomposition reconstructs exactly within the term bound") {
  testing::Rng rng(301);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> degree(0, 20);
    const int d = degree(rng);
    Polynomial f = testing::random_polynomial(rng, d);
    const Decomposition dec = greedy_decompose(f);
    const int actual_degree = f.degree();
    CHECK(dec.size() <= (actual_degree + 2) / 2);  // ceil((deg+1)/2), zero -> 0
    CHECK(decomposition_sum(dec, d) == f);
    // Exponents strictly decrease, dropping by at least two between
    // non-final steps.
    for (size_t i = 0; i + 1 < dec.terms.size(); ++i) {
      CHECK(dec.terms[i].exponent > dec.terms[i + 1].exponent);
    }
  }
}

TEST_CASE("power sums of top degree expand correctly") {
  const Polynomial h = power_sum_poly({Rational(0), Rational(1)}, {Rational(1), Rational(-1)}, 3);
  CHECK(h.str() == "-3x^2-3x-1");
  CHECK_THROWS_AS(power_sum_poly({Rational(0), Rational(0)}, {Rational(1), Rational(1)}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(power_sum_poly({Rational(0)}, {Rational(0)}, 3), std::invalid_argument);
}

TEST_CASE("binomial differences") {
  CHECK(binomial_difference(1).str() == "2x+1");
  CHECK(binomial_difference(2).str() == "3x^2+3x+1");
  CHECK(symmetric_binomial_difference(4).str() == "10x^4+20x^2+2");

  for (int d = 1; d <= 20; ++d) {
    const Polynomial h2 = binomial_difference(d);
    const Polynomial h3 = symmetric_binomial_difference(d);
    CHECK(h2.degree() == d);
    CHECK(h3.degree() == d);
    int monomials = 0;
    for (int j = 0; j <= d; ++j) monomials += h3[j] != 0 ? 1 : 0;
    CHECK(monomials == (d + 2) / 2);  // ceil((d+1)/2)
  }
}

TEST_CASE("greedy decomposition of the binomial difference is extremal") {
  for (int d = 1; d <= 16; ++d) {
    const Decomposition dec = greedy_decompose(binomial_difference(d));
    CHECK(dec.size() == (d + 2) / 2);
    CHECK(decomposition_sum(dec, d) == binomial_difference(d));
  }
}

TEST_CASE("the symmetric difference witnesses sharpness of the counting bound") {
  for (int d = 3; d <= 12; ++d) {
    const int top = d + 1;
    std::vector<ShiftedPower> terms{{Rational(1), top}, {Rational(-1), top}};
    for (int e = d; e >= 0; e -= 2) terms.push_back({Rational(0), e});
    const PowerFamily family(terms, top);
    CHECK(family.size() == 2 + (d + 2) / 2);

    // Dependent: the two big powers minus the monomial expansion cancel.
    CHECK_FALSE(independent_via_oracle(family));

    // Degree counts match the closed forms, odd and even cases alike.
    const std::vector<int> n = degree_counts(family);
    for (int j = 1; j <= d + 1; ++j) {
      const int expected = (d % 2 == 1) ? j / 2 : (j + 1) / 2;
      CHECK(n[static_cast<size_t>(j)] == expected);
    }
    CHECK(n[static_cast<size_t>(d) + 2] == (d % 2 == 1 ? (d + 5) / 2 : (d + 6) / 2));

    // The pairwise counting condition fails exactly at the top index.
    CHECK_FALSE(independence_count_condition(family));
    CHECK(n[1] <= 1);
    for (int j = 2; j <= d + 1; ++j) {
      CHECK(n[static_cast<size_t>(j)] + n[static_cast<size_t>(j) - 1] <= j);
    }
    CHECK(n[static_cast<size_t>(d) + 2] + n[static_cast<size_t>(d) + 1] > d + 2);
  }
}

TEST_CASE("decomposition JSON round trip") {
  const Decomposition dec = greedy_decompose(parse_polynomial("x^2+2x+3"));
  const Decomposition back = parse_decomposition_json(decomposition_to_json(dec));
  CHECK(back.terms == dec.terms);
  CHECK(decomposition_str(dec) == "1*(x+1)^2 + 2*(x+0)^0");
  CHECK_THROWS_AS(parse_decomposition_json("{}"), std::invalid_argument);
}
