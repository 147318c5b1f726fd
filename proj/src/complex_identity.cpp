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

#include "birkhoff/complex_identity.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_complex.hpp>

namespace birkhoff {

namespace {

using Complex = boost::multiprecision::cpp_complex_50;
using Real = Complex::value_type;

Real to_real(const Rational& q) {
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Complex pow_n(Complex base, int e) {
  Complex acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

}  // namespace

ComplexIdentity roots_of_unity_identity(int k, int d, const Rational& mu) {
  if (k < 1 || d < 1) throw std::invalid_argument("need k >= 1 and d >= 1");
  ComplexIdentity id{k, d, mu, {}};
  for (int i = 0; i <= d; ++i) {
    if ((i + 1) % k != 0) continue;
    id.rhs.push_back({d - i, Rational(k) * Rational(binomial(static_cast<unsigned long>(d),
                                                             static_cast<unsigned long>(i))) *
                                 pow(mu, static_cast<unsigned long>(i))});
  }
  return id;
}

bool verify_complex_identity(const ComplexIdentity& id, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const int k = id.order;
  const int d = id.degree;
  if (k < 1 || d < 1) return false;

  // Exact side: the power sum of xi^{j(i+1)} is k exactly when k | i+1, so
  // the stored monomials must be k*C(d,i)*mu^i at x^{d-i} for those i and
  // nothing else.
  std::vector<MonomialTerm> expected;
  for (int i = 0; i <= d; ++i) {
    if ((i + 1) % k != 0) continue;
    expected.push_back({d - i, Rational(k) * Rational(binomial(static_cast<unsigned long>(d),
                                                               static_cast<unsigned long>(i))) *
                                   pow(id.scale, static_cast<unsigned long>(i))});
  }
  std::vector<MonomialTerm> stored = id.rhs;
  const auto by_exponent = [](const MonomialTerm& a, const MonomialTerm& b) {
    return a.exponent < b.exponent;
  };
  std::sort(expected.begin(), expected.end(), by_exponent);
  std::sort(stored.begin(), stored.end(), by_exponent);
  if (stored != expected) return false;

  // Numeric side: evaluate both sides as written at x = 0..d+1.
  const Real two_pi = 8 * atan(Real(1));
  const Real mu = to_real(id.scale);
  std::vector<Complex> xi_pow(static_cast<size_t>(k) + 1);
  for (int j = 1; j <= k; ++j) {
    const Real angle = two_pi * j / k;
    xi_pow[static_cast<size_t>(j)] = Complex(cos(angle), sin(angle));
  }

  Real worst(0);
  for (int t = 0; t <= d + 1; ++t) {
    const Complex x(t);
    Complex lhs(0);
    for (int j = 1; j <= k; ++j) {
      const Complex root = xi_pow[static_cast<size_t>(j)];
      lhs += root * pow_n(x + root * mu, d);
    }
    Complex rhs(0);
    for (const auto& term : id.rhs) {
      rhs += Complex(to_real(term.coeff)) * pow_n(x, term.exponent);
    }
    worst = std::max(worst, Real(abs(lhs - rhs)));
  }
  return worst <= Real(tol);
}

std::string identity_rhs_str(const ComplexIdentity& id) {
  Polynomial rhs(id.degree);
  for (const auto& term : id.rhs) rhs[term.exponent] += term.coeff;
  return rhs.str();
}

std::string identity_str(const ComplexIdentity& id) {
  std::string out = "sum_{j=1..k} xi^j*(x + xi^j*mu)^d  with  k=" + std::to_string(id.order) +
                    ", d=" + std::to_string(id.degree) + ", mu=" + to_string(id.scale) +
                    "  =  " + identity_rhs_str(id);
  return out;
}

}  // namespace birkhoff
