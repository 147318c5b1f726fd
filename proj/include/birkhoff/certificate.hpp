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

#ifndef BIRKHOFF_CERTIFICATE_HPP
#define BIRKHOFF_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "birkhoff/duality.hpp"
#include "birkhoff/linear_system.hpp"

namespace birkhoff {

/// Tree-shaped, independently re-checkable proof that an interpolation
/// problem is regular. Each node proves its own subject:
///   - tail_count:      the matrix passes tail_count_condition, so it is
///                      regular for every knot set (knot-free rule);
///   - atkinson_sharma: |E| = d+1, polya holds and no odd supported sequence
///                      exists once rows are sorted by knot;
///   - split:           columns are split after index split_col; the side
///                      conditions |E1| <= r+1, |E2| <= d-r hold and the two
///                      children prove the column slices regular;
///   - rank_base:       the system matrix has exact rank |E| at the stored
///                      knots.
struct Certificate {
  enum class Rule { tail_count, atkinson_sharma, split, rank_base };

  Rule rule = Rule::tail_count;
  InterpolationMatrix matrix;
  std::optional<KnotSet> knots;       // absent on knot-free nodes
  int split_col = -1;                 // split nodes
  int rank = -1;                      // rank_base nodes
  std::vector<Certificate> children;  // split nodes: {left, right}

  Certificate() : matrix(1, 1) {}
};

struct CertifyResult {
  std::optional<Certificate> certificate;  // set iff the problem is regular
  std::optional<Polynomial> witness;       // monic nonzero solution otherwise
  bool regular() const { return certificate.has_value(); }
};

/// Produces a regularity certificate, trying the cheap knot-free rules
/// before any exact rank computation: first the tail-count rule, then
/// Atkinson-Sharma, then column splits at the slope indices of the tail
/// counts (larger split first) with a recursively certified left part and an
/// exact-rank right part, and finally exact rank on the whole system. When
/// the problem is irregular, returns a nullspace witness instead. Rows are
/// sorted by knot up front; regularity is insensitive to that.
CertifyResult certify_regular(const Problem& p, Exec exec = Exec::parallel);

/// Re-validates every node of a certificate from scratch, without calling
/// certify_regular: tail counts, the Atkinson-Sharma scan, split side
/// conditions and child consistency, and exact ranks.
bool verify_certificate(const Certificate& c, Exec exec = Exec::parallel);

/// Whether an identity  sum_k alpha (x+x_i)^d = sum_l beta (x+y_i)^{e_i}
/// (e_i < d, distinct x_i, alpha not all zero) is arithmetically permitted,
/// i.e. k + l > (d+2)/2. Below the threshold no such identity exists.
bool identity_permitted(long k, long l, long d);

/// A candidate identity: degree-D shifted powers with nonzero coefficients
/// on the left, lower-order shifted powers on the right.
struct BoundInstance {
  std::vector<std::pair<Rational, Rational>> lhs;  // (coefficient, shift), exponent D
  std::vector<ShiftedPower> rhs;                   // exponents < D
  int degree = 0;                                  // D
};

/// Refutes the instance by certifying the combined shifted-power family
/// independent (through its dual problem). A certificate means no identity
/// of this shape exists for any choice of coefficients; a witness means the
/// combined family is dependent.
CertifyResult refute_identity(const BoundInstance& inst, Exec exec = Exec::parallel);

/// Verdict of one of the lower-bound rules on a concrete candidate.
struct BoundVerdict {
  long min_terms = 0;                       // certified minimum for l
  std::optional<bool> candidate_ok;         // candidate length respects the bound
  std::optional<CertifyResult> refutation;  // produced when it does not
};

/// Sum of k distinct degree-d powers, exponents of the representation
/// bounded by d: requires l >= k whenever k <= (d+2)/4.
BoundVerdict lb_power_sum(const std::vector<Rational>& lhs_shifts, int d,
                          const std::optional<std::vector<ShiftedPower>>& candidate,
                          Exec exec = Exec::parallel);

/// The difference (x+1)^{d+1} - x^{d+1}, exponents bounded by d: requires
/// l > (d-1)/2.
BoundVerdict lb_binomial_difference(int d, const std::optional<std::vector<ShiftedPower>>& candidate,
                                    Exec exec = Exec::parallel);

/// Same polynomial as lb_power_sum but with unbounded exponents: still
/// requires l >= k. Rearranges the candidate around its largest exponent.
BoundVerdict lb_power_sum_unbounded(const std::vector<Rational>& lhs_shifts, int d,
                                    const std::optional<std::vector<ShiftedPower>>& candidate,
                                    Exec exec = Exec::parallel);

/// {"rule": "tail|as|split|rank", "matrix": ..., "knots": [...]?,
///  "r": int?, "rank": int?, "children": [...]?}
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& doc);

}  // namespace birkhoff

#endif  // BIRKHOFF_CERTIFICATE_HPP
