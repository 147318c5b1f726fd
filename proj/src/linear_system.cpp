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

#include "birkhoff/linear_system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace birkhoff {

KnotSet::KnotSet(std::vector<Rational> knots) : knots_(std::move(knots)) {
  for (size_t i = 0; i < knots_.size(); ++i) {
    for (size_t j = i + 1; j < knots_.size(); ++j) {
      if (knots_[i] == knots_[j]) throw std::invalid_argument("knots must be pairwise distinct");
    }
  }
}

bool KnotSet::is_sorted() const { return std::is_sorted(knots_.begin(), knots_.end()); }

Problem::Problem(InterpolationMatrix m, KnotSet x) : matrix(std::move(m)), knots(std::move(x)) {
  if (knots.size() != matrix.rows()) {
    throw std::invalid_argument("knot count must match matrix rows");
  }
}

Problem sorted_by_knots(const Problem& p) {
  std::vector<int> order(static_cast<size_t>(p.matrix.rows()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.knots[a] < p.knots[b]; });
  InterpolationMatrix m(p.matrix.rows(), p.matrix.cols());
  std::vector<Rational> knots;
  knots.reserve(order.size());
  for (int i = 0; i < p.matrix.rows(); ++i) {
    const int src = order[static_cast<size_t>(i)];
    knots.push_back(p.knots[src]);
    for (int k = 0; k < p.matrix.cols(); ++k) m.set(i, k, p.matrix.bit(src, k));
  }
  return Problem(std::move(m), KnotSet(std::move(knots)));
}

SystemMatrix::SystemMatrix(RationalMatrix entries, std::vector<ConstraintLabel> labels, int cols)
    : entries_(std::move(entries)), labels_(std::move(labels)), cols_(cols) {
  if (entries_.size() != labels_.size()) throw std::invalid_argument("labels/entries mismatch");
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("system row width mismatch");
  }
}

std::string SystemMatrix::str() const {
  std::string out;
  for (const auto& row : entries_) {
    out += '(';
    for (size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += to_string(row[j]);
    }
    out += ")\n";
  }
  return out;
}

SystemMatrix build_system(const Problem& p) {
  const int d = p.ambient_degree();
  RationalMatrix entries;
  std::vector<ConstraintLabel> labels;
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i < p.matrix.rows(); ++i) {
      if (!p.matrix.bit(i, k)) continue;
      std::vector<Rational> row(static_cast<size_t>(d) + 1);
      for (int j = k; j <= d; ++j) {
        row[static_cast<size_t>(j)] =
            pow(p.knots[i], static_cast<unsigned long>(j - k)) / Rational(factorial(static_cast<unsigned long>(j - k)));
      }
      entries.push_back(std::move(row));
      labels.push_back({i, k});
    }
  }
  return SystemMatrix(std::move(entries), std::move(labels), d + 1);
}

RankReport rank_and_nullspace(const SystemMatrix& a, Exec exec) {
  const int d_plus_1 = a.cols();
  RankReport report;
  const RowReduction red = row_reduce(a.entries(), exec);
  report.rank = red.rank;
  report.full_row_rank = red.rank == a.rows();
  // Unknown g_j is the coefficient of x^j/j!; divide by j! to return to the
  // standard basis.
  for (const auto& v : nullspace_from_reduction(red, d_plus_1)) {
    Polynomial g(d_plus_1 - 1);
    for (int j = 0; j < d_plus_1; ++j) {
      g[j] = v[static_cast<size_t>(j)] / Rational(factorial(static_cast<unsigned long>(j)));
    }
    report.nullspace.push_back(std::move(g));
  }
  return report;
}

bool is_regular(const Problem& p, Exec exec) {
  if (p.matrix.ones() > p.ambient_degree() + 1) {
    throw std::domain_error("more constraints than coefficients: |E| > d+1");
  }
  return rank_and_nullspace(build_system(p), exec).full_row_rank;
}

std::pair<Problem, Problem> split_problem(const Problem& p, int r) {
  const int d = p.ambient_degree();
  if (r < 0 || r >= d) throw std::invalid_argument("split column out of range");
  Problem left(p.matrix.columns(0, r + 1), p.knots);
  Problem right(p.matrix.columns(r + 1, d - r), p.knots);
  return {std::move(left), std::move(right)};
}

bool verify_block_form(const Problem& p, int r, Exec exec) {
  const auto [left, right] = split_problem(p, r);
  const SystemMatrix a = build_system(p);
  const SystemMatrix a1 = build_system(left);
  const SystemMatrix a2 = build_system(right);
  const int d = p.ambient_degree();
  const int rows1 = a1.rows();

  if (a.rows() != rows1 + a2.rows()) return false;
  for (int u = 0; u < a.rows(); ++u) {
    const ConstraintLabel& label = a.labels()[static_cast<size_t>(u)];
    if (u < rows1) {
      // Top block: derivative orders <= r; left columns must be A(E1,X).
      if (label.deriv_order > r) return false;
      if (a.labels()[static_cast<size_t>(u)] != a1.labels()[static_cast<size_t>(u)]) return false;
      for (int j = 0; j <= r; ++j) {
        if (a.entries()[static_cast<size_t>(u)][static_cast<size_t>(j)] !=
            a1.entries()[static_cast<size_t>(u)][static_cast<size_t>(j)]) {
          return false;
        }
      }
    } else {
      // Bottom block: zero left of the split, A(E2,X) right of it.
      if (label.deriv_order <= r) return false;
      const int v = u - rows1;
      const ConstraintLabel& sub = a2.labels()[static_cast<size_t>(v)];
      if (sub.knot_index != label.knot_index || sub.deriv_order != label.deriv_order - (r + 1)) return false;
      for (int j = 0; j <= r; ++j) {
        if (a.entries()[static_cast<size_t>(u)][static_cast<size_t>(j)] != 0) return false;
      }
      for (int j = r + 1; j <= d; ++j) {
        if (a.entries()[static_cast<size_t>(u)][static_cast<size_t>(j)] !=
            a2.entries()[static_cast<size_t>(v)][static_cast<size_t>(j - (r + 1))]) {
          return false;
        }
      }
    }
  }
  const int rank = matrix_rank(a.entries(), exec);
  return rank >= matrix_rank(a1.entries(), exec) + matrix_rank(a2.entries(), exec);
}

Problem parse_problem(std::string_view text) {
  const size_t at = text.find('@');
  if (at == std::string_view::npos) {
    throw std::invalid_argument("expected 'matrix @ knots'");
  }
  std::string_view matrix_text = text.substr(0, at);
  std::string_view knot_text = text.substr(at + 1);
  while (!matrix_text.empty() && matrix_text.back() == ' ') matrix_text.remove_suffix(1);
  InterpolationMatrix matrix = InterpolationMatrix::parse(matrix_text);
  std::vector<Rational> knots;
  size_t start = 0;
  while (start <= knot_text.size()) {
    const size_t sep = knot_text.find(',', start);
    const std::string_view item =
        knot_text.substr(start, sep == std::string_view::npos ? sep : sep - start);
    knots.push_back(parse_rational(item));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return Problem(std::move(matrix), KnotSet(std::move(knots)));
}

std::string problem_text(const Problem& p) {
  std::string out = p.matrix.text() + " @ ";
  for (int i = 0; i < p.knots.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(p.knots[i]);
  }
  return out;
}

}  // namespace birkhoff
