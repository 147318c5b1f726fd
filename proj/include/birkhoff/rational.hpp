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

#ifndef BIRKHOFF_RATIONAL_HPP
#define BIRKHOFF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace birkhoff {

// Exact scalars. mpq_class keeps values canonical (reduced, positive
// denominator, 0/1 for zero) as long as every value it is built from is
// canonical; parse_rational is the only place raw user input enters.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Parses "p" or "p/q" (optional leading sign, decimal digits only).
/// Throws std::invalid_argument on anything else, including q = 0.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", with "/q" omitted when the denominator is 1.
std::string to_string(const Rational& value);

Rational pow(const Rational& base, unsigned long exponent);

}  // namespace birkhoff

#endif  // BIRKHOFF_RATIONAL_HPP
