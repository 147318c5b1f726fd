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

#include "birkhoff/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace birkhoff {

Polynomial::Polynomial(int ambient_degree) {
  if (ambient_degree < 0) throw std::invalid_argument("negative ambient degree");
  coeffs_.resize(static_cast<size_t>(ambient_degree) + 1);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("empty coefficient vector");
}

int Polynomial::degree() const {
  for (int j = ambient_degree(); j >= 0; --j) {
    if (coeffs_[static_cast<size_t>(j)] != 0) return j;
  }
  return -1;
}

Polynomial Polynomial::padded(int new_ambient_degree) const {
  if (new_ambient_degree < ambient_degree()) {
    throw std::invalid_argument("padded() cannot shrink the ambient degree");
  }
  Polynomial result(new_ambient_degree);
  for (int j = 0; j <= ambient_degree(); ++j) result[j] = coeffs_[static_cast<size_t>(j)];
  return result;
}

Polynomial Polynomial::monic() const {
  const int deg = degree();
  if (deg < 0) return *this;
  Polynomial result = *this;
  const Rational lead = coeffs_[static_cast<size_t>(deg)];
  for (auto& c : result.coeffs_) c /= lead;
  return result;
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc = 0;
  for (int j = ambient_degree(); j >= 0; --j) {
    acc = acc * at + coeffs_[static_cast<size_t>(j)];
  }
  return acc;
}

namespace {

void require_same_ambient(const Polynomial& a, const Polynomial& b) {
  if (a.ambient_degree() != b.ambient_degree()) {
    throw std::invalid_argument("ambient degree mismatch");
  }
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_ambient(*this, rhs);
  for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_ambient(*this, rhs);
  for (size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int j = degree(); j >= 0; --j) {
    const Rational& c = coeffs_[static_cast<size_t>(j)];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += (c < 0) ? '-' : '+';
    }
    const Rational mag = abs(c);
    if (mag != 1 || j == 0) out += to_string(mag);
    if (j >= 1) {
      out += 'x';
      if (j >= 2) out += '^' + std::to_string(j);
    }
  }
  return out;
}

PowerFamily::PowerFamily(std::vector<ShiftedPower> terms, int ambient_degree)
    : terms_(std::move(terms)), ambient_degree_(ambient_degree) {
  if (ambient_degree_ < 0) throw std::invalid_argument("negative ambient degree");
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exponent < 0 || terms_[i].exponent > ambient_degree_) {
      throw std::invalid_argument("family exponent outside ambient degree");
    }
    for (size_t j = i + 1; j < terms_.size(); ++j) {
      if (terms_[i] == terms_[j]) throw std::invalid_argument("duplicate term in family");
    }
  }
}

PowerFamily PowerFamily::with_default_degree(std::vector<ShiftedPower> terms) {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, t.exponent);
  return PowerFamily(std::move(terms), d);
}

PowerFamily PowerFamily::padded(int new_ambient_degree) const {
  if (new_ambient_degree < ambient_degree_) {
    throw std::invalid_argument("padded() cannot shrink the ambient degree");
  }
  return PowerFamily(terms_, new_ambient_degree);
}

Polynomial expand(const ShiftedPower& p, int ambient_degree) {
  if (p.exponent < 0) throw std::invalid_argument("negative exponent");
  if (p.exponent > ambient_degree) {
    throw std::invalid_argument("exponent exceeds ambient degree");
  }
  Polynomial result(ambient_degree);
  const unsigned long e = static_cast<unsigned long>(p.exponent);
  for (unsigned long j = 0; j <= e; ++j) {
    result[static_cast<int>(j)] = Rational(binomial(e, j)) * pow(p.shift, e - j);
  }
  return result;
}

Polynomial derivative(const Polynomial& g, int order) {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  const int d = g.ambient_degree();
  Polynomial result(d);
  if (order > d) return result;
  for (int j = 0; j + order <= d; ++j) {
    // falling factorial (j+order)(j+order-1)...(j+1)
    Integer factor = 1;
    for (int t = 1; t <= order; ++t) factor *= j + t;
    result[j] = g[j + order] * Rational(factor);
  }
  return result;
}

Rational eval_derivative(const Polynomial& g, int order, const Rational& at) {
  return derivative(g, order).eval(at);
}

Rational weyl_form(const Polynomial& g, const Polynomial& f) {
  require_same_ambient(g, f);
  const int d = g.ambient_degree();
  Rational acc = 0;
  for (int k = 0; k <= d; ++k) {
    acc += f[k] * g[d - k] / Rational(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(k)));
  }
  return acc;
}

namespace {

struct Scanner {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_ws();
    std::string out;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out += s[pos++];
    return out;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  Scanner sc{text};
  std::vector<std::pair<int, Rational>> terms;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-')) {
      sign = -1;
    } else if (!sc.accept('+') && !first) {
      throw std::invalid_argument("bad polynomial: expected '+' or '-'");
    }
    first = false;

    Rational coeff = 1;
    bool saw_coeff = false;
    std::string num = sc.digits();
    if (!num.empty()) {
      saw_coeff = true;
      std::string token = num;
      if (sc.accept('/')) {
        const std::string den = sc.digits();
        if (den.empty()) throw std::invalid_argument("bad polynomial: missing denominator");
        token += '/' + den;
      }
      coeff = parse_rational(token);
    }
    if (saw_coeff) sc.accept('*');

    int exponent = 0;
    if (sc.accept('x')) {
      exponent = 1;
      if (sc.accept('^')) {
        const std::string e = sc.digits();
        if (e.empty()) throw std::invalid_argument("bad polynomial: missing exponent");
        exponent = std::stoi(e);
      }
    } else if (!saw_coeff) {
      throw std::invalid_argument("bad polynomial: empty term");
    }
    if (sign < 0) coeff = -coeff;
    terms.emplace_back(exponent, coeff);
  }
  if (terms.empty()) throw std::invalid_argument("bad polynomial: empty input");
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, e);
  Polynomial result(d);
  for (const auto& [e, c] : terms) result[e] += c;
  return result;
}

}  // namespace birkhoff
