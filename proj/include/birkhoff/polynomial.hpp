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

#ifndef BIRKHOFF_POLYNOMIAL_HPP
#define BIRKHOFF_POLYNOMIAL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "birkhoff/rational.hpp"

namespace birkhoff {

/// Dense univariate polynomial over Q living in a fixed ambient degree
/// bound d: coeffs() always has size d+1 and coeffs()[j] multiplies x^j.
/// The actual degree may be anything <= d.
class Polynomial {
 public:
  /// Zero polynomial of the given ambient degree.
  explicit Polynomial(int ambient_degree);
  /// Takes the ambient degree from the coefficient count (must be >= 1).
  explicit Polynomial(std::vector<Rational> coeffs);

  int ambient_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Largest index with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  const Rational& operator[](int j) const { return coeffs_[static_cast<size_t>(j)]; }
  Rational& operator[](int j) { return coeffs_[static_cast<size_t>(j)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same polynomial embedded in a larger ambient degree.
  Polynomial padded(int new_ambient_degree) const;
  /// Scales so the leading coefficient is 1; identity on the zero polynomial.
  Polynomial monic() const;

  Rational eval(const Rational& at) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Rational& scalar, Polynomial p) { return p *= scalar; }
  bool operator==(const Polynomial&) const = default;

  /// Compact human form, e.g. "x^5-10x^3+9x" or "3/2x^2+1".
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

/// (x + shift)^exponent.
struct ShiftedPower {
  Rational shift;
  int exponent = 0;
  bool operator==(const ShiftedPower&) const = default;
};

/// Family of pairwise distinct shifted powers inside a common ambient degree.
class PowerFamily {
 public:
  /// Validates exponents <= ambient_degree and pairwise distinct (shift, exponent).
  PowerFamily(std::vector<ShiftedPower> terms, int ambient_degree);
  /// Ambient degree defaults to the largest exponent present (0 if empty).
  static PowerFamily with_default_degree(std::vector<ShiftedPower> terms);

  const std::vector<ShiftedPower>& terms() const { return terms_; }
  int ambient_degree() const { return ambient_degree_; }
  int size() const { return static_cast<int>(terms_.size()); }
  /// Same terms with a larger ambient degree.
  PowerFamily padded(int new_ambient_degree) const;

 private:
  std::vector<ShiftedPower> terms_;
  int ambient_degree_;
};

/// Binomial expansion of (x + a)^e embedded in the ambient degree.
/// Throws std::invalid_argument when e exceeds the ambient degree.
Polynomial expand(const ShiftedPower& p, int ambient_degree);

/// Exact k-th derivative; the ambient degree is preserved.
Polynomial derivative(const Polynomial& g, int order);

/// g^(order)(at), exactly.
Rational eval_derivative(const Polynomial& g, int order, const Rational& at);

/// The symmetric bilinear form  <g,f> = sum_k f_k g_{d-k} / C(d,k)
/// pairing the degree-d coefficient space with itself. Against f = (x+a)^d
/// it evaluates g at a; against f = (x+a)^{d-k} it picks out g^(k)(a) up to
/// the factor d!/(d-k)!. Throws on mismatched ambient degrees.
Rational weyl_form(const Polynomial& g, const Polynomial& f);

/// Parses the compact form produced by Polynomial::str(): signed terms
/// "c", "cx", "cx^e" with rational c, '*' between c and x optional.
Polynomial parse_polynomial(std::string_view text);

}  // namespace birkhoff

#endif  // BIRKHOFF_POLYNOMIAL_HPP
