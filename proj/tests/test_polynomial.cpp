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

#include "birkhoff/polynomial.hpp"
#include "test_support.hpp"

using namespace birkhoff;

namespace {

// Independent expansion oracle: multiply (x + a) out e times.
Polynomial expand_by_repeated_multiplication(const Rational& a, int e, int ambient) {
  std::vector<Rational> acc{Rational(1)};
  for (int step = 0; step < e; ++step) {
    std::vector<Rational> next(acc.size() + 1);
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * a;
      next[j + 1] += acc[j];
    }
    acc = std::move(next);
  }
  acc.resize(static_cast<size_t>(ambient) + 1);
  return Polynomial(std::move(acc));
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(parse_rational("3/12")) == "1/4");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
}

TEST_CASE("expand matches the binomial theorem") {
  const Polynomial p = expand({Rational(1), 2}, 2);
  CHECK(p.coeffs() == std::vector<Rational>{1, 2, 1});  // x^2+2x+1

  const Polynomial q = expand({Rational(0), 5}, 5);
  CHECK(q.degree() == 5);
  CHECK(q[5] == 1);
  for (int j = 0; j < 5; ++j) CHECK(q[j] == 0);

  const Polynomial r = expand({Rational(3), 2}, 5);
  CHECK(r == expand_by_repeated_multiplication(Rational(3), 2, 5));
  CHECK(r.coeffs() == std::vector<Rational>{9, 6, 1, 0, 0, 0});

  CHECK_THROWS_AS(expand({Rational(1), 3}, 2), std::invalid_argument);
}

TEST_CASE("expand agrees with repeated multiplication on random inputs") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = testing::random_rational(rng);
    std::uniform_int_distribution<int> exp_dist(0, 9);
    const int e = exp_dist(rng);
    CHECK(expand({a, e}, 9) == expand_by_repeated_multiplication(a, e, 9));
  }
}

TEST_CASE("derivative basics") {
  const Polynomial g = parse_polynomial("x^2-1");
  CHECK(derivative(g, 1).str() == "2x");
  CHECK(derivative(g, 3).is_zero());

  const Polynomial h = parse_polynomial("x^5");
  CHECK(derivative(h, 3).str() == "60x^2");
  CHECK(derivative(h, 0) == h);
}

TEST_CASE("derivative is linear") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Polynomial g = testing::random_polynomial(rng, 8);
    const Polynomial h = testing::random_polynomial(rng, 8);
    const Rational alpha = testing::random_rational(rng);
    const Rational beta = testing::random_rational(rng);
    std::uniform_int_distribution<int> order(0, 10);
    const int k = order(rng);
    CHECK(derivative(alpha * g + beta * h, k) == alpha * derivative(g, k) + beta * derivative(h, k));
  }
}

TEST_CASE("eval_derivative on the reference points") {
  const Polynomial g = parse_polynomial("x^2-1");
  CHECK(eval_derivative(g, 0, Rational(-1)) == 0);
  CHECK(eval_derivative(g, 1, Rational(0)) == 0);
  const Polynomial h = parse_polynomial("x^5");
  CHECK(eval_derivative(h, 4, Rational(1)) == 120);
}

TEST_CASE("weyl form against evaluation and derivatives") {
  // <g, (x+1)^2> at d=2 equals g(1).
  const Polynomial g = parse_polynomial("x^2-1");
  CHECK(weyl_form(g, expand({Rational(1), 2}, 2)) == 0);

  testing::Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 6;
    const Polynomial p = testing::random_polynomial(rng, d);
    const Rational a = testing::random_rational(rng);
    CHECK(weyl_form(p, expand({a, d}, d)) == p.eval(a));
    std::uniform_int_distribution<int> order(0, d);
    const int k = order(rng);
    const Rational lhs = weyl_form(p, expand({a, d - k}, d));
    const Rational rhs = Rational(factorial(static_cast<unsigned long>(d - k))) /
                         Rational(factorial(static_cast<unsigned long>(d))) *
                         eval_derivative(p, k, a);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("weyl form is symmetric") {
  testing::Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial g = testing::random_polynomial(rng, 7);
    const Polynomial f = testing::random_polynomial(rng, 7);
    CHECK(weyl_form(g, f) == weyl_form(f, g));
  }
  CHECK_THROWS_AS(weyl_form(Polynomial(2), Polynomial(3)), std::invalid_argument);
}

TEST_CASE("duality kernel identity") {
  // d! <g, (x+a)^{d-k}> = (d-k)! g^(k)(a), exactly.
  testing::Rng rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = 8;
    const Polynomial g = testing::random_polynomial(rng, d);
    const Rational a = testing::random_rational(rng);
    std::uniform_int_distribution<int> order(0, d);
    const int k = order(rng);
    const Rational lhs = Rational(factorial(static_cast<unsigned long>(d))) *
                         weyl_form(g, expand({a, d - k}, d));
    const Rational rhs = Rational(factorial(static_cast<unsigned long>(d - k))) *
                         eval_derivative(g, k, a);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("expand then evaluate equals direct power evaluation") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Rational a = testing::random_rational(rng);
    const Rational x = testing::random_rational(rng);
    std::uniform_int_distribution<int> exp_dist(0, 10);
    const int e = exp_dist(rng);
    CHECK(expand({a, e}, 10).eval(x) == pow(x + a, static_cast<unsigned long>(e)));
  }
}

TEST_CASE("polynomial text round trip") {
  for (const char* text : {"x^5-10x^3+9x", "3/2x^2+1", "0", "-x+1/3", "2x", "x^2-1"}) {
    const Polynomial p = parse_polynomial(text);
    CHECK(p.str() == text);
    CHECK(parse_polynomial(p.str()) == p);
  }
  CHECK(parse_polynomial("1*x^2 + 2*x + 1") == parse_polynomial("x^2+2x+1"));
  CHECK_THROWS_AS(parse_polynomial(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("++x"), std::invalid_argument);
}

TEST_CASE("power family validation") {
  CHECK_THROWS_AS(PowerFamily({{Rational(1), 2}, {Rational(1), 2}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(PowerFamily({{Rational(1), 5}}, 4), std::invalid_argument);
  const PowerFamily fam = PowerFamily::with_default_degree({{Rational(1), 3}, {Rational(2), 1}});
  CHECK(fam.ambient_degree() == 3);
}
