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

#include "birkhoff/duality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace birkhoff {

DualProblem to_dual(const PowerFamily& family) {
  const int d = family.ambient_degree();
  std::map<Rational, int> row_of_shift;
  for (const auto& term : family.terms()) row_of_shift.emplace(term.shift, 0);
  int next = 0;
  for (auto& [shift, row] : row_of_shift) row = next++;

  const int m = static_cast<int>(row_of_shift.size());
  InterpolationMatrix matrix(std::max(m, 1), d + 1);
  std::vector<Rational> knots;
  if (m == 0) {
    knots.push_back(0);  // empty family: one unconstrained knot row
  } else {
    knots.resize(static_cast<size_t>(m));
    for (const auto& [shift, row] : row_of_shift) knots[static_cast<size_t>(row)] = shift;
  }

  DualProblem dual{Problem(std::move(matrix), KnotSet(std::move(knots))), {}};
  for (const auto& term : family.terms()) {
    const int row = row_of_shift.at(term.shift);
    const int col = d - term.exponent;
    dual.problem.matrix.set(row, col);
    dual.cell_of_term.emplace_back(row, col);
  }
  return dual;
}

bool independent_via_duality(const PowerFamily& family, Exec exec) {
  if (family.size() > family.ambient_degree() + 1) {
    throw std::domain_error("family larger than the coefficient space dimension");
  }
  return is_regular(to_dual(family).problem, exec);
}

namespace {

RationalMatrix expanded_coefficients(const PowerFamily& family) {
  RationalMatrix rows;
  rows.reserve(static_cast<size_t>(family.size()));
  for (const auto& term : family.terms()) {
    rows.push_back(expand(term, family.ambient_degree()).coeffs());
  }
  return rows;
}

}  // namespace

bool independent_via_oracle(const PowerFamily& family, Exec exec) {
  if (family.size() == 0) return true;
  return matrix_rank(expanded_coefficients(family), exec) == family.size();
}

std::vector<Rational> dependence_witness(const PowerFamily& family, Exec exec) {
  if (family.size() == 0) return {};
  const RationalMatrix rows = expanded_coefficients(family);
  // A vanishing combination is a nullspace vector of the transpose.
  RationalMatrix transpose(static_cast<size_t>(family.ambient_degree()) + 1,
                           std::vector<Rational>(static_cast<size_t>(family.size())));
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = 0; j < rows[i].size(); ++j) transpose[j][i] = rows[i][j];
  }
  const auto basis = nullspace_from_reduction(row_reduce(transpose, exec), family.size());
  if (basis.empty()) return {};
  return basis.front();
}

std::vector<int> degree_counts(const PowerFamily& family) {
  const int d = family.ambient_degree();
  std::vector<int> n(static_cast<size_t>(d) + 2, 0);
  for (const auto& term : family.terms()) {
    for (int j = term.exponent + 1; j <= d + 1; ++j) ++n[static_cast<size_t>(j)];
  }
  return n;
}

bool independence_count_condition(const PowerFamily& family) {
  const std::vector<int> n = degree_counts(family);
  const int d = family.ambient_degree();
  if (n[1] > 1) return false;
  for (int j = 2; j <= d + 1; ++j) {
    if (n[static_cast<size_t>(j)] + n[static_cast<size_t>(j) - 1] > j) return false;
  }
  return true;
}

namespace {

ShiftedPower term_from_json(const nlohmann::json& item) {
  if (!item.is_object() || !item.contains("shift") || !item.contains("exp")) {
    throw std::invalid_argument("family term must be {\"shift\": ..., \"exp\": ...}");
  }
  ShiftedPower term;
  const auto& shift = item.at("shift");
  if (shift.is_string()) {
    term.shift = parse_rational(shift.get<std::string>());
  } else if (shift.is_number_integer()) {
    term.shift = Rational(static_cast<long>(shift.get<long long>()));
  } else {
    throw std::invalid_argument("family shift must be a string or integer");
  }
  if (!item.at("exp").is_number_integer()) throw std::invalid_argument("family exp must be an integer");
  term.exponent = item.at("exp").get<int>();
  if (term.exponent < 0) throw std::invalid_argument("family exp must be nonnegative");
  return term;
}

}  // namespace

PowerFamily parse_family_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& err) {
    throw std::invalid_argument(std::string("bad family JSON: ") + err.what());
  }
  const nlohmann::json* terms_json = nullptr;
  std::optional<int> degree;
  if (doc.is_array()) {
    terms_json = &doc;
  } else if (doc.is_object() && doc.contains("terms")) {
    terms_json = &doc.at("terms");
    if (doc.contains("degree")) degree = doc.at("degree").get<int>();
  } else {
    throw std::invalid_argument("family JSON must be an array or {\"degree\", \"terms\"}");
  }
  if (!terms_json->is_array()) throw std::invalid_argument("family terms must be an array");
  std::vector<ShiftedPower> terms;
  for (const auto& item : *terms_json) terms.push_back(term_from_json(item));
  if (degree) return PowerFamily(std::move(terms), *degree);
  return PowerFamily::with_default_degree(std::move(terms));
}

std::string family_to_json(const PowerFamily& family) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& term : family.terms()) {
    terms.push_back({{"shift", to_string(term.shift)}, {"exp", term.exponent}});
  }
  nlohmann::json doc = {{"degree", family.ambient_degree()}, {"terms", std::move(terms)}};
  return doc.dump();
}

}  // namespace birkhoff
