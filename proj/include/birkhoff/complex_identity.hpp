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

#ifndef BIRKHOFF_COMPLEX_IDENTITY_HPP
#define BIRKHOFF_COMPLEX_IDENTITY_HPP

#include <string>
#include <vector>

#include "birkhoff/polynomial.hpp"

namespace birkhoff {

struct MonomialTerm {
  int exponent = 0;
  Rational coeff;
  bool operator==(const MonomialTerm&) const = default;
};

/// With xi a primitive k-th root of unity,
///   sum_{j=1..k} xi^j (x + xi^j mu)^d
/// collapses over C to the monomial sum  k*C(d,i)*mu^i x^{d-i}  over the
/// exponents i = -1 (mod k), 0 <= i <= d. The left side stays symbolic in
/// xi; the right side is stored exactly.
struct ComplexIdentity {
  int order = 1;   // k
  int degree = 1;  // d
  Rational scale;  // mu
  std::vector<MonomialTerm> rhs;
};

ComplexIdentity roots_of_unity_identity(int k, int d, const Rational& mu);

/// Checks the identity two ways: the congruence that drives it -- the power
/// sum of xi^{j(i+1)} is k when k divides i+1 and 0 otherwise -- is matched
/// exactly against the stored right side, and both sides are evaluated at
/// d+2 sample points in high-precision complex floating point, requiring the
/// largest absolute discrepancy to stay within tol.
bool verify_complex_identity(const ComplexIdentity& id, double tol);

/// Right side as a polynomial string, e.g. "4x".
std::string identity_rhs_str(const ComplexIdentity& id);
/// Both sides in human form.
std::string identity_str(const ComplexIdentity& id);

}  // namespace birkhoff

#endif  // BIRKHOFF_COMPLEX_IDENTITY_HPP
