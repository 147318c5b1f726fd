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

#ifndef BIRKHOFF_DECOMPOSITION_HPP
#define BIRKHOFF_DECOMPOSITION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "birkhoff/polynomial.hpp"

namespace birkhoff {

struct DecompositionTerm {
  Rational coeff;
  Rational shift;
  int exponent = 0;
  bool operator==(const DecompositionTerm&) const = default;
};

/// f = sum of coeff * (x + shift)^exponent, exactly.
struct Decomposition {
  std::vector<DecompositionTerm> terms;
  int size() const { return static_cast<int>(terms.size()); }
};

/// Writes f as a sum of at most ceil((deg f + 1)/2) shifted powers by
/// repeatedly peeling lead * (x + a_{e-1}/(e*a_e))^e, which cancels the two
/// top coefficients at once. Exponents come out strictly decreasing.
Decomposition greedy_decompose(const Polynomial& f);

/// Expands and sums the terms in the given ambient degree.
Polynomial decomposition_sum(const Decomposition& dec, int ambient_degree);

/// sum_i coeffs[i] * (x + shifts[i])^d with distinct shifts and nonzero
/// coefficients, expanded in ambient degree d.
Polynomial power_sum_poly(const std::vector<Rational>& shifts, const std::vector<Rational>& coeffs, int d);

/// (x+1)^{d+1} - x^{d+1}; degree exactly d.
Polynomial binomial_difference(int d);

/// (x+1)^{d+1} - (x-1)^{d+1}; degree exactly d with ceil((d+1)/2) monomials.
Polynomial symmetric_binomial_difference(int d);

/// JSON: array of {"coeff", "shift", "exp"}.
std::string decomposition_to_json(const Decomposition& dec);
Decomposition parse_decomposition_json(std::string_view json_text);

std::string decomposition_str(const Decomposition& dec);

}  // namespace birkhoff

#endif  // BIRKHOFF_DECOMPOSITION_HPP
