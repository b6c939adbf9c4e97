// Copyright 2026 The rookcodes Authors.
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rookcodes {

/// Exponent sets P and Q of a Rook code: A_i is encoded with x^{p[i]} and
/// B_i with x^{q[i]}. Both lists are strictly increasing and of equal size.
class ExponentPair {
 public:
  /// Throws Error(kInvalidArgument) on empty, unequal-length or not strictly
  /// increasing lists.
  ExponentPair(std::vector<std::uint64_t> p, std::vector<std::uint64_t> q);

  std::size_t n() const { return p_.size(); }
  std::span<const std::uint64_t> p() const { return p_; }
  std::span<const std::uint64_t> q() const { return q_; }
  std::uint64_t max_exponent() const;
  bool symmetric() const { return p_ == q_; }

  friend bool operator==(const ExponentPair&, const ExponentPair&) = default;

 private:
  std::vector<std::uint64_t> p_;
  std::vector<std::uint64_t> q_;
};

struct SumSupport {
  std::vector<std::uint64_t> support;  // sorted distinct p_i + q_j
  std::vector<std::size_t> diag_index;  // position of p_k + q_k in support

  std::size_t size() const { return support.size(); }
};

/// P = {0..n-1}, Q = {0, n, ..., n(n-1)}; |P+Q| = n^2.
ExponentPair poly_code_exponents(std::size_t n);

/// P = Q = the n smallest integers whose base-3 digits are all 0 or 1.
ExponentPair base3_exponents(std::size_t n);

struct BehrendParameters {
  std::uint32_t digit_bound = 0;  // digits range over [0, digit_bound)
  std::uint32_t length = 0;       // number of digits
  std::uint64_t norm = 0;         // squared norm of the chosen shell
  std::uint64_t shell_size = 0;
  std::uint64_t max_element = 0;  // largest of the n values taken
};

struct BehrendSearchLimits {
  double length_scale = 2.0;       // length <= ceil(scale*sqrt(log2 n)) + 2
  std::uint32_t max_digit_bound = 64;
  std::uint32_t extra_digit_bounds = 3;  // tried past the first feasible one
};

/// Picks (digit_bound, length) for batch size n; throws
/// Error(kParameterSearchExhausted) when nothing within `limits` works.
BehrendParameters behrend_parameters(std::size_t n,
                                     const BehrendSearchLimits& limits = {});

/// 3-AP-free P = Q built from the largest squared-norm shell of digit
/// vectors in [0, digit_bound)^length, read in base 2*digit_bound-1.
ExponentPair behrend_exponents(std::size_t n,
                               const BehrendSearchLimits& limits = {});

/// Same construction with explicit parameters. Throws
/// Error(kParameterSearchExhausted) if the largest shell has fewer than n
/// points.
ExponentPair behrend_exponents_with(std::size_t n, std::uint32_t digit_bound,
                                    std::uint32_t length);

/// True iff each diagonal sum p_k + q_k occurs exactly once among all n^2
/// cross sums.
bool is_decodable(const ExponentPair& pair);

SumSupport sum_support(const ExponentPair& pair);

/// True iff no three distinct elements a < b < c satisfy a + c = 2b.
/// `values` must be sorted and distinct.
bool is_3ap_free(std::span<const std::uint64_t> values);

struct MinRecoveryLimits {
  std::size_t max_n = 4;
  std::uint64_t max_exponent = 12;
  std::uint64_t max_candidates = 50'000'000;  // ordered (P, Q) pairs visited
};

struct MinRecoveryResult {
  std::size_t l_min = 0;
  ExponentPair witness;
};

/// Minimum |P+Q| over decodable pairs with 0 in both sets and all elements
/// <= max_exponent. Throws Error(kSearchBudgetExceeded) outside `limits` and
/// Error(kParameterSearchExhausted) if no decodable pair exists.
MinRecoveryResult min_recovery_bruteforce(std::size_t n,
                                          std::uint64_t max_exponent,
                                          const MinRecoveryLimits& limits = {});

}  // namespace rookcodes
