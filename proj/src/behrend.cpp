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

// Behrend-style 3-AP-free sets.
//
// Digit vectors a in [0, d)^l with a fixed squared norm k lie on a sphere, and
// no point of a sphere is the midpoint of two others. Reading the vectors in
// base 2d-1 keeps that property for integers: a digit-wise sum is at most
// 2d-2, so adding two encodings never carries, and u + w = 2v on integers
// forces it digit by digit.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "rookcodes/errors.hpp"
#include "rookcodes/exponents.hpp"

namespace rookcodes {
namespace {

constexpr std::uint64_t kValueLimit = std::uint64_t{1} << 62;

// counts[j][k]: number of j-digit vectors over [0, d) with squared norm k.
class ShellTable {
 public:
  ShellTable(std::uint32_t digit_bound, std::uint32_t length)
      : d_(digit_bound), length_(length) {
    const std::uint64_t max_norm =
        static_cast<std::uint64_t>(length) * (d_ - 1) * (d_ - 1);
    counts_.assign(length + 1, std::vector<std::uint64_t>(max_norm + 1, 0));
    counts_[0][0] = 1;
    for (std::uint32_t j = 1; j <= length; ++j) {
      for (std::uint64_t k = 0; k <= max_norm; ++k) {
        std::uint64_t total = 0;
        for (std::uint64_t a = 0; a < d_ && a * a <= k; ++a) {
          total += counts_[j - 1][k - a * a];
        }
        counts_[j][k] = total;
      }
    }
    base_powers_.resize(length);
    std::uint64_t place = 1;
    for (std::uint32_t i = 0; i < length; ++i) {
      base_powers_[i] = place;
      place *= 2 * static_cast<std::uint64_t>(d_) - 1;
    }
  }

  // Largest shell; ties go to the smallest norm. Norm 0 (the zero vector)
  // is never the largest once length >= 2 and d >= 2.
  std::pair<std::uint64_t, std::uint64_t> largest_shell() const {
    const auto& top = counts_[length_];
    std::uint64_t best_k = 0;
    for (std::uint64_t k = 1; k < top.size(); ++k) {
      if (top[k] > top[best_k]) best_k = k;
    }
    return {best_k, top[best_k]};
  }

  // idx-th smallest integer (0-based) encoding a vector of norm k. Integer
  // order is lexicographic order read from the most significant digit.
  std::uint64_t kth_value(std::uint64_t norm, std::uint64_t idx) const {
    std::uint64_t value = 0;
    std::uint64_t rem = norm;
    for (std::uint32_t i = length_; i-- > 0;) {
      for (std::uint64_t a = 0; a < d_ && a * a <= rem; ++a) {
        const std::uint64_t c = counts_[i][rem - a * a];
        if (idx < c) {
          value += a * base_powers_[i];
          rem -= a * a;
          break;
        }
        idx -= c;
      }
    }
    return value;
  }

 private:
  std::uint32_t d_;
  std::uint32_t length_;
  std::vector<std::vector<std::uint64_t>> counts_;
  std::vector<std::uint64_t> base_powers_;
};

// True if (2d-1)^length and d^length stay below kValueLimit.
bool representable(std::uint32_t digit_bound, std::uint32_t length) {
  const double bits = length * std::log2(2.0 * digit_bound - 1.0);
  return bits < 61.5;
}

std::uint32_t max_length(std::size_t n, const BehrendSearchLimits& limits) {
  const double log_n = std::log2(static_cast<double>(n));
  return static_cast<std::uint32_t>(std::ceil(limits.length_scale * std::sqrt(log_n))) + 2;
}

}  // namespace

BehrendParameters behrend_parameters(std::size_t n,
                                     const BehrendSearchLimits& limits) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "n must be at least 1");
  std::optional<BehrendParameters> best;
  const std::uint32_t top_length = max_length(n, limits);
  for (std::uint32_t length = 2; length <= top_length; ++length) {
    std::optional<std::uint32_t> first_feasible;
    for (std::uint32_t d = 2; d <= limits.max_digit_bound; ++d) {
      if (first_feasible && d > *first_feasible + limits.extra_digit_bounds) break;
      if (!representable(d, length)) break;
      const ShellTable table(d, length);
      const auto [norm, size] = table.largest_shell();
      if (size < n) continue;
      if (!first_feasible) first_feasible = d;
      BehrendParameters candidate{d, length, norm, size,
                                  table.kth_value(norm, n - 1)};
      if (!best || candidate.max_element < best->max_element) best = candidate;
    }
  }
  if (!best) {
    fail(ErrorCode::kParameterSearchExhausted,
         "no digit bound <= " + std::to_string(limits.max_digit_bound) +
             " and length <= " + std::to_string(top_length) +
             " gives a shell of " + std::to_string(n) + " points");
  }
  return *best;
}

ExponentPair behrend_exponents_with(std::size_t n, std::uint32_t digit_bound,
                                    std::uint32_t length) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (digit_bound < 2 || length < 1) {
    fail(ErrorCode::kInvalidArgument, "need digit bound >= 2 and length >= 1");
  }
  if (!representable(digit_bound, length)) {
    fail(ErrorCode::kParameterSearchExhausted, "encoded values exceed 62 bits");
  }
  const ShellTable table(digit_bound, length);
  const auto [norm, size] = table.largest_shell();
  if (size < n) {
    fail(ErrorCode::kParameterSearchExhausted,
         "largest shell for d=" + std::to_string(digit_bound) +
             ", l=" + std::to_string(length) + " has " + std::to_string(size) +
             " < " + std::to_string(n) + " points");
  }
  std::vector<std::uint64_t> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = table.kth_value(norm, i);
  std::vector<std::uint64_t> copy = values;
  return ExponentPair(std::move(values), std::move(copy));
}

ExponentPair behrend_exponents(std::size_t n, const BehrendSearchLimits& limits) {
  const BehrendParameters params = behrend_parameters(n, limits);
  return behrend_exponents_with(n, params.digit_bound, params.length);
}

}  // namespace rookcodes
