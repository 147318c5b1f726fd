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

// Command line front end. Exit codes: 0 positive verdict, 1 negative verdict
// (with a printed witness where one exists), 2 malformed input.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "birkhoff/certificate.hpp"
#include "birkhoff/complex_identity.hpp"
#include "birkhoff/decomposition.hpp"
#include "birkhoff/duality.hpp"

using namespace birkhoff;
using nlohmann::json;

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitBadInput = 2;

// Arguments may carry inline content or name a file as "@path".
std::string load_argument(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw std::invalid_argument("cannot read file: " + arg.substr(1));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json knots_json(const KnotSet& knots) {
  json out = json::array();
  for (int i = 0; i < knots.size(); ++i) out.push_back(to_string(knots[i]));
  return out;
}

BoundInstance parse_instance_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("bad instance JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("lhs") || !doc.contains("rhs")) {
    throw std::invalid_argument("instance JSON needs \"degree\", \"lhs\" and \"rhs\"");
  }
  BoundInstance inst;
  inst.degree = doc.at("degree").get<int>();
  for (const auto& item : doc.at("lhs")) {
    Rational coeff = item.contains("coeff") ? parse_rational(item.at("coeff").get<std::string>())
                                            : Rational(1);
    inst.lhs.emplace_back(std::move(coeff), parse_rational(item.at("shift").get<std::string>()));
  }
  for (const auto& item : doc.at("rhs")) {
    inst.rhs.push_back(
        {parse_rational(item.at("shift").get<std::string>()), item.at("exp").get<int>()});
  }
  return inst;
}

int run_check_matrix(const std::string& arg, bool as_json) {
  const InterpolationMatrix e = InterpolationMatrix::parse(load_argument(arg));
  const bool full_weight = e.ones() == e.cols();
  const std::optional<bool> polya_verdict =
      full_weight ? std::optional<bool>(polya(e)) : std::nullopt;
  const auto odd_spans = odd_supported_sequences(e);
  if (as_json) {
    json out;
    out["polya"] = polya_verdict ? json(*polya_verdict) : json(nullptr);
    out["upper_polya"] = upper_polya(e);
    out["odd_supported"] = json::array();
    for (const auto& span : odd_spans) {
      out["odd_supported"].push_back({{"row", span.row}, {"col", span.start_col}, {"len", span.length}});
    }
    out["tail_condition"] = tail_count_condition(e);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "polya: " << (polya_verdict ? yes_no(*polya_verdict) : "n/a (|E| != d+1)") << "\n";
    std::cout << "upper-polya: " << yes_no(upper_polya(e)) << "\n";
    if (odd_spans.empty()) {
      std::cout << "odd-supported: no\n";
    } else {
      std::cout << "odd-supported: yes";
      for (const auto& span : odd_spans) {
        std::cout << " (row " << span.row << ", col " << span.start_col << ", len " << span.length
                  << ")";
      }
      std::cout << "\n";
    }
    std::cout << "tail-condition: " << yes_no(tail_count_condition(e)) << "\n";
  }
  return kExitPositive;
}

int run_regular(const std::string& arg, bool as_json) {
  const Problem p = parse_problem(load_argument(arg));
  if (p.matrix.ones() > p.ambient_degree() + 1) {
    throw std::invalid_argument("more constraints than coefficients: |E| > d+1");
  }
  const RankReport report = rank_and_nullspace(build_system(p));
  const bool regular = report.full_row_rank;
  const std::string witness = regular ? "" : report.nullspace.front().monic().str();
  if (as_json) {
    json out;
    out["regular"] = regular;
    if (!regular) out["witness"] = witness;
    std::cout << out.dump(2) << "\n";
  } else if (regular) {
    std::cout << "regular\n";
  } else {
    std::cout << "not regular; witness: " << witness << "\n";
  }
  return regular ? kExitPositive : kExitNegative;
}

json independence_report(const PowerFamily& family) {
  json out;
  bool independent;
  try {
    independent = independent_via_duality(family);
  } catch (const std::domain_error&) {
    independent = false;  // more terms than the dimension allows
  }
  out["independent"] = independent;
  if (!independent) {
    json witness = json::array();
    for (const auto& c : dependence_witness(family)) witness.push_back(to_string(c));
    out["witness"] = std::move(witness);
  }
  return out;
}

int run_independence(const std::string& arg, bool as_json, bool batch) {
  const std::string text = load_argument(arg);
  std::vector<PowerFamily> families;
  if (batch) {
    const json doc = json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("--batch expects a JSON array of families");
    for (const auto& item : doc) families.push_back(parse_family_json(item.dump()));
  } else {
    families.push_back(parse_family_json(text));
  }

  std::vector<json> reports(families.size());
#pragma omp parallel for schedule(dynamic) if (batch)
  for (long i = 0; i < static_cast<long>(families.size()); ++i) {
    reports[static_cast<size_t>(i)] = independence_report(families[static_cast<size_t>(i)]);
  }

  bool all_independent = true;
  for (size_t i = 0; i < reports.size(); ++i) {
    const bool independent = reports[i].at("independent").get<bool>();
    all_independent = all_independent && independent;
    if (as_json) continue;
    if (batch) std::cout << "[" << i << "] ";
    if (independent) {
      std::cout << "independent\n";
    } else {
      std::cout << "dependent; witness coefficients: " << reports[i].at("witness").dump() << "\n";
    }
  }
  if (as_json) {
    std::cout << (batch ? json(reports).dump(2) : reports.front().dump(2)) << "\n";
  }
  return all_independent ? kExitPositive : kExitNegative;
}

json certify_report(const PowerFamily& family) {
  json out;
  try {
    const CertifyResult result = certify_regular(to_dual(family).problem);
    out["independent"] = result.regular();
    if (result.regular()) {
      out["certificate"] = certificate_to_json(*result.certificate);
      out["verified"] = verify_certificate(*result.certificate);
    } else {
      out["witness"] = result.witness->str();
    }
  } catch (const std::domain_error&) {
    out["independent"] = false;
    json witness = json::array();
    for (const auto& c : dependence_witness(family)) witness.push_back(to_string(c));
    out["witness"] = std::move(witness);
  }
  return out;
}

int run_certify(const std::string& arg, bool as_json, bool batch) {
  const std::string text = load_argument(arg);
  std::vector<PowerFamily> families;
  if (batch) {
    const json doc = json::parse(text);
    if (!doc.is_array()) throw std::invalid_argument("--batch expects a JSON array of families");
    for (const auto& item : doc) families.push_back(parse_family_json(item.dump()));
  } else {
    families.push_back(parse_family_json(text));
  }

  std::vector<json> reports(families.size());
#pragma omp parallel for schedule(dynamic) if (batch)
  for (long i = 0; i < static_cast<long>(families.size()); ++i) {
    reports[static_cast<size_t>(i)] = certify_report(families[static_cast<size_t>(i)]);
  }

  bool all_independent = true;
  for (size_t i = 0; i < reports.size(); ++i) {
    const bool independent = reports[i].at("independent").get<bool>();
    all_independent = all_independent && independent;
    if (as_json) continue;
    if (batch) std::cout << "[" << i << "] ";
    if (independent) {
      std::cout << "independent; certificate: " << reports[i].at("certificate").dump() << "\n";
    } else {
      std::cout << "dependent; witness: " << reports[i].at("witness").dump() << "\n";
    }
  }
  if (as_json) {
    std::cout << (batch ? json(reports).dump(2) : reports.front().dump(2)) << "\n";
  }
  return all_independent ? kExitPositive : kExitNegative;
}

int run_refute(const std::string& arg, bool as_json) {
  const BoundInstance inst = parse_instance_json(load_argument(arg));
  const CertifyResult result = refute_identity(inst);
  json out;
  out["refuted"] = result.regular();
  if (result.regular()) {
    out["certificate"] = certificate_to_json(*result.certificate);
    out["verified"] = verify_certificate(*result.certificate);
  } else {
    out["witness"] = result.witness->str();
  }
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else if (result.regular()) {
    std::cout << "refuted: no identity of this shape exists\n";
    std::cout << "certificate: " << out.at("certificate").dump() << "\n";
  } else {
    std::cout << "identity exists; dual witness: " << result.witness->str() << "\n";
  }
  return result.regular() ? kExitPositive : kExitNegative;
}

int run_decompose(const std::string& arg, bool as_json) {
  const Polynomial f = parse_polynomial(load_argument(arg));
  const Decomposition dec = greedy_decompose(f);
  if (as_json) {
    json out;
    out["count"] = dec.size();
    out["terms"] = json::parse(decomposition_to_json(dec));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << dec.size() << " terms: " << decomposition_str(dec) << "\n";
  }
  return kExitPositive;
}

int run_identity_complex(int k, int d, const std::string& mu_text, double tol, bool as_json) {
  const ComplexIdentity id = roots_of_unity_identity(k, d, parse_rational(mu_text));
  const bool verified = verify_complex_identity(id, tol);
  if (as_json) {
    json out;
    out["k"] = id.order;
    out["d"] = id.degree;
    out["mu"] = to_string(id.scale);
    out["rhs"] = identity_rhs_str(id);
    out["verified"] = verified;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << identity_str(id) << "\n";
    std::cout << "rhs: " << identity_rhs_str(id) << "\n";
    std::cout << "verified: " << yes_no(verified) << "\n";
  }
  return verified ? kExitPositive : kExitNegative;
}

int run_demo(bool as_json) {
  // End-to-end walkthrough of the six-constraint example: a family of six
  // shifted powers, its dual problem, the failed order-regularity test, and
  // the split certificate that settles regularity at the knots 0, 1, 3.
  const PowerFamily family({{Rational(0), 5},
                            {Rational(1), 5},
                            {Rational(3), 5},
                            {Rational(0), 2},
                            {Rational(1), 1},
                            {Rational(3), 2}},
                           5);
  const DualProblem dual = to_dual(family);
  const Problem& p = dual.problem;
  const SystemMatrix a = build_system(p);

  const Problem counterexample = parse_problem("100;010;100 @ -1,0,1");
  const RankReport counter_report = rank_and_nullspace(build_system(counterexample));
  const Polynomial counter_witness = counter_report.nullspace.front().monic();

  const auto [left, right] = split_problem(p, 2);
  const SystemMatrix a1 = build_system(left);
  const SystemMatrix a2 = build_system(right);
  const CertifyResult result = certify_regular(p);
  const bool verified = result.regular() && verify_certificate(*result.certificate);
  const RankReport right_report = rank_and_nullspace(build_system(right));

  if (as_json) {
    json out;
    out["family"] = json::parse(family_to_json(family));
    out["problem"] = problem_text(p);
    out["system"] = a.str();
    out["not_order_regular_at"] = knots_json(counterexample.knots);
    out["order_witness"] = counter_witness.str();
    out["split_col"] = 2;
    out["left_matrix"] = left.matrix.text();
    out["right_matrix"] = right.matrix.text();
    out["right_rank"] = right_report.rank;
    out["block_form"] = verify_block_form(p, 2);
    out["certificate"] = result.regular() ? certificate_to_json(*result.certificate) : json();
    out["verified"] = verified;
    out["verdict"] = result.regular() ? "regular" : "not regular";
    std::cout << out.dump(2) << "\n";
    return result.regular() && verified ? kExitPositive : kExitNegative;
  }

  std::cout << "Six shifted powers, exponents 5,5,5,2,1,2 at shifts 0,1,3:\n  "
            << family_to_json(family) << "\n\n";
  std::cout << "Dual interpolation problem: " << problem_text(p) << "\n";
  std::cout << "System matrix A(E,X) in the x^j/j! basis:\n" << a.str() << "\n";
  std::cout << "The matrix is not order regular: at knots -1,0,1 the pattern "
            << counterexample.matrix.text() << " admits " << counter_witness.str() << ".\n\n";
  std::cout << "Split after column 2:\n";
  std::cout << "E1 = " << left.matrix.text()
            << "  (tail-condition: " << yes_no(tail_count_condition(left.matrix)) << ")\n";
  std::cout << "A(E1,X):\n" << a1.str();
  std::cout << "E2 = " << right.matrix.text() << "\n";
  std::cout << "A(E2,X):\n" << a2.str();
  std::cout << "rank A(E2,X) = " << right_report.rank << " of " << right.matrix.ones() << "\n";
  std::cout << "Block form verified: " << yes_no(verify_block_form(p, 2)) << "\n\n";
  if (result.regular()) {
    std::cout << "Certificate: " << certificate_to_json(*result.certificate).dump() << "\n";
    std::cout << "Certificate verified: " << yes_no(verified) << "\n";
    std::cout << "Verdict: regular\n";
    return verified ? kExitPositive : kExitNegative;
  }
  std::cout << "Verdict: not regular\n";
  return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decision tools for lacunary interpolation problems and shifted-power families"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  int jobs = 0;
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs, "OpenMP threads for batched inputs (0 = default)");

  std::string matrix_arg;
  auto* check = app.add_subcommand("check-matrix", "evaluate the combinatorial criteria of a matrix");
  check->add_option("matrix", matrix_arg, "matrix text, rows of 0/1 joined by ';' (or @file)")
      ->required();

  std::string problem_arg;
  auto* regular = app.add_subcommand("regular", "decide regularity of 'matrix @ knots'");
  regular->add_option("problem", problem_arg, "e.g. '100;010;100 @ -1,0,1' (or @file)")->required();

  std::string family_arg;
  bool batch = false;
  auto* independence = app.add_subcommand("independence", "decide linear independence of a family");
  independence->add_option("family", family_arg, "family JSON (or @file)")->required();
  independence->add_flag("--batch", batch, "treat the input as an array of families");

  std::string certify_arg;
  bool certify_batch = false;
  auto* certify = app.add_subcommand("certify", "produce a re-checkable independence certificate");
  certify->add_option("family", certify_arg, "family JSON (or @file)")->required();
  certify->add_flag("--batch", certify_batch, "treat the input as an array of families");

  std::string instance_arg;
  auto* refute = app.add_subcommand("refute", "refute a candidate identity instance");
  refute->add_option("instance", instance_arg, "instance JSON (or @file)")->required();

  std::string poly_arg;
  auto* decompose = app.add_subcommand("decompose", "greedy shifted-power decomposition");
  decompose->add_option("polynomial", poly_arg, "e.g. 'x^2+2x+3' (or @file)")->required();

  int k = 0, d = 0;
  std::string mu_text;
  double tol = 1e-9;
  auto* identity = app.add_subcommand("identity-complex", "root-of-unity collapse identity");
  identity->add_option("k", k, "order of the root of unity")->required();
  identity->add_option("d", d, "degree")->required();
  identity->add_option("mu", mu_text, "rational scale")->required();
  identity->add_option("--tol", tol, "numeric tolerance (default 1e-9)");

  auto* demo = app.add_subcommand("demo-appendix", "walk through the six-constraint worked example");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  if (jobs > 0) omp_set_num_threads(jobs);
  const bool as_json = format == "json";

  try {
    if (check->parsed()) return run_check_matrix(matrix_arg, as_json);
    if (regular->parsed()) return run_regular(problem_arg, as_json);
    if (independence->parsed()) return run_independence(family_arg, as_json, batch);
    if (certify->parsed()) return run_certify(certify_arg, as_json, certify_batch);
    if (refute->parsed()) return run_refute(instance_arg, as_json);
    if (decompose->parsed()) return run_decompose(poly_arg, as_json);
    if (identity->parsed()) return run_identity_complex(k, d, mu_text, tol, as_json);
    if (demo->parsed()) return run_demo(as_json);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
