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

#include "birkhoff/decomposition.hpp"

#include <stdexcept>

#include <json.hpp>

namespace birkhoff {

Decomposition greedy_decompose(const Polynomial& f) {
  Decomposition result;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const int e = rest.degree();
    if (e == 0) {
      result.terms.push_back({rest[0], Rational(0), 0});
      break;
    }
    const Rational lead = rest[e];
    // Shift chosen so the x^{e-1} coefficient cancels along with the lead;
    // for e = 1 this absorbs the constant term and finishes.
    const Rational shift = rest[e - 1] / (Rational(e) * lead);
    result.terms.push_back({lead, shift, e});
    rest -= lead * expand({shift, e}, rest.ambient_degree());
  }
  return result;
}

Polynomial decomposition_sum(const Decomposition& dec, int ambient_degree) {
  Polynomial total(ambient_degree);
  for (const auto& term : dec.terms) {
    total += term.coeff * expand({term.shift, term.exponent}, ambient_degree);
  }
  return total;
}

Polynomial power_sum_poly(const std::vector<Rational>& shifts, const std::vector<Rational>& coeffs, int d) {
  if (shifts.size() != coeffs.size() || shifts.empty()) {
    throw std::invalid_argument("need matching nonempty shift/coefficient lists");
  }
  for (size_t i = 0; i < shifts.size(); ++i) {
    if (coeffs[i] == 0) throw std::invalid_argument("coefficients must be nonzero");
    for (size_t j = i + 1; j < shifts.size(); ++j) {
      if (shifts[i] == shifts[j]) throw std::invalid_argument("shifts must be distinct");
    }
  }
  Polynomial total(d);
  for (size_t i = 0; i < shifts.size(); ++i) {
    total += coeffs[i] * expand({shifts[i], d}, d);
  }
  return total;
}

namespace {

Polynomial binomial_power_difference(int d, const Rational& second_shift) {
  if (d < 0) throw std::invalid_argument("negative degree");
  const Polynomial diff =
      expand({Rational(1), d + 1}, d + 1) - expand({second_shift, d + 1}, d + 1);
  // The top coefficients cancel, leaving degree exactly d.
  Polynomial result(d);
  for (int j = 0; j <= d; ++j) result[j] = diff[j];
  return result;
}

}  // namespace

Polynomial binomial_difference(int d) { return binomial_power_difference(d, Rational(0)); }

Polynomial symmetric_binomial_difference(int d) { return binomial_power_difference(d, Rational(-1)); }

std::string decomposition_to_json(const Decomposition& dec) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& term : dec.terms) {
    doc.push_back({{"coeff", to_string(term.coeff)},
                   {"shift", to_string(term.shift)},
                   {"exp", term.exponent}});
  }
  return doc.dump();
}

Decomposition parse_decomposition_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("bad decomposition JSON: ") + err.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("decomposition JSON must be an array");
  Decomposition dec;
  for (const auto& item : doc) {
    DecompositionTerm term;
    term.coeff = parse_rational(item.at("coeff").get<std::string>());
    term.shift = parse_rational(item.at("shift").get<std::string>());
    term.exponent = item.at("exp").get<int>();
    if (term.exponent < 0) throw std::invalid_argument("decomposition exponent must be nonnegative");
    dec.terms.push_back(std::move(term));
  }
  return dec;
}

std::string decomposition_str(const Decomposition& dec) {
  if (dec.terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < dec.terms.size(); ++i) {
    const auto& term = dec.terms[i];
    if (i > 0) out += " + ";
    out += to_string(term.coeff);
    out += "*(x";
    if (term.shift >= 0) {
      out += '+' + to_string(term.shift);
    } else {
      out += to_string(term.shift);
    }
    out += ")^" + std::to_string(term.exponent);
  }
  return out;
}

}  // namespace birkhoff
