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

#include "birkhoff/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace birkhoff {

Integer factorial(unsigned long n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Validate the shape ourselves: mpq_set_str silently ignores whitespace,
  // which would let "1 2" through as 12.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_token(num)) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  std::string body(num);
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_token(den) || den.front() == '-' || den.front() == '+') {
      throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
    }
    body += '/';
    body += den;
  }
  Rational value;
  if (mpq_set_str(value.get_mpq_t(), body.c_str(), 10) != 0) {
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  }
  if (mpz_sgn(mpq_denref(value.get_mpq_t())) == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational pow(const Rational& base, unsigned long exponent) {
  Rational result;
  mpz_pow_ui(mpq_numref(result.get_mpq_t()), mpq_numref(base.get_mpq_t()), exponent);
  mpz_pow_ui(mpq_denref(result.get_mpq_t()), mpq_denref(base.get_mpq_t()), exponent);
  // num/den are coprime, so their powers are as well.
  return result;
}

}  // namespace birkhoff
