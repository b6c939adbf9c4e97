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

#include "rookcodes/exponents.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>
#include <utility>

#include "rookcodes/errors.hpp"

namespace rookcodes {
namespace {

// Sums are tallied in a dense array when they span at most this many values.
constexpr std::uint64_t kDenseSumRange = std::uint64_t{1} << 26;

void require_increasing(const std::vector<std::uint64_t>& v, const char* name) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) {
      fail(ErrorCode::kInvalidArgument,
           std::string("exponent list ") + name + " is not strictly increasing");
    }
  }
}

std::uint64_t checked_sum_range(const ExponentPair& pair) {
  const std::uint64_t a = pair.p().back();
  const std::uint64_t b = pair.q().back();
  if (a > ~std::uint64_t{0} - b) {
    fail(ErrorCode::kInvalidArgument, "exponent sums overflow 64 bits");
  }
  return a + b;
}

}  // namespace

ExponentPair::ExponentPair(std::vector<std::uint64_t> p,
                           std::vector<std::uint64_t> q)
    : p_(std::move(p)), q_(std::move(q)) {
  if (p_.empty()) fail(ErrorCode::kInvalidArgument, "exponent lists are empty");
  if (p_.size() != q_.size()) {
    fail(ErrorCode::kInvalidArgument,
         "|P| = " + std::to_string(p_.size()) + " but |Q| = " +
             std::to_string(q_.size()));
  }
  require_increasing(p_, "P");
  require_increasing(q_, "Q");
}

std::uint64_t ExponentPair::max_exponent() const {
  return std::max(p_.back(), q_.back());
}

ExponentPair poly_code_exponents(std::size_t n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "n must be at least 1");
  std::vector<std::uint64_t> p(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = i;
    q[i] = static_cast<std::uint64_t>(n) * i;
  }
  return ExponentPair(std::move(p), std::move(q));
}

ExponentPair base3_exponents(std::size_t n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "n must be at least 1");
  // The k-th number with base-3 digits in {0,1} is k's binary digits read
  // in base 3.
  std::vector<std::uint64_t> p(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t value = 0;
    std::uint64_t place = 1;
    for (std::uint64_t bits = k; bits != 0; bits >>= 1) {
      if (bits & 1) value += place;
      place *= 3;
    }
    p[k] = value;
  }
  std::vector<std::uint64_t> q = p;
  return ExponentPair(std::move(p), std::move(q));
}

bool is_decodable(const ExponentPair& pair) {
  const auto p = pair.p();
  const auto q = pair.q();
  const std::size_t n = pair.n();
  const std::uint64_t range = checked_sum_range(pair) + 1;

  if (range <= kDenseSumRange) {
    // Saturating per-sum multiplicity.
    std::vector<std::uint8_t> count(range, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint8_t& c = count[p[i] + q[j]];
        c = static_cast<std::uint8_t>(c + (c < 2));
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (count[p[k] + q[k]] != 1) return false;
    }
    return true;
  }

  std::unordered_map<std::uint64_t, std::size_t> diag;
  diag.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) diag[p[k] + q[k]] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = diag.find(p[i] + q[j]);
      if (it != diag.end() && ++it->second > 1) return false;
    }
  }
  return true;
}

SumSupport sum_support(const ExponentPair& pair) {
  const auto p = pair.p();
  const auto q = pair.q();
  const std::size_t n = pair.n();
  const std::uint64_t range = checked_sum_range(pair) + 1;

  SumSupport out;
  if (range <= kDenseSumRange) {
    std::vector<bool> seen(range, false);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) seen[p[i] + q[j]] = true;
    }
    for (std::uint64_t s = 0; s < range; ++s) {
      if (seen[s]) out.support.push_back(s);
    }
  } else {
    out.support.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) out.support.push_back(p[i] + q[j]);
    }
    std::sort(out.support.begin(), out.support.end());
    out.support.erase(std::unique(out.support.begin(), out.support.end()),
                      out.support.end());
  }
  out.diag_index.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto it = std::lower_bound(out.support.begin(), out.support.end(),
                                     p[k] + q[k]);
    out.diag_index[k] = static_cast<std::size_t>(it - out.support.begin());
  }
  return out;
}

bool is_3ap_free(std::span<const std::uint64_t> values) {
  const std::size_t n = values.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 2; k < n; ++k) {
      const std::uint64_t gap = values[k] - values[i];
      if (gap & 1) continue;
      const std::uint64_t mid = values[i] + gap / 2;
      if (std::binary_search(values.begin() + i + 1, values.begin() + k, mid)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Subsets {0} u S with S a (n-1)-subset of [1, max_exponent], as bitmasks,
// in increasing order of their sorted element lists.
void enumerate_subsets(std::size_t remaining, std::uint64_t next,
                       std::uint64_t max_exponent, std::uint32_t mask,
                       std::vector<std::uint32_t>& out) {
  if (remaining == 0) {
    out.push_back(mask);
    return;
  }
  for (std::uint64_t v = next; v + remaining - 1 <= max_exponent; ++v) {
    enumerate_subsets(remaining - 1, v + 1, max_exponent, mask | (1u << v), out);
  }
}

std::vector<std::uint64_t> mask_elements(std::uint32_t mask) {
  std::vector<std::uint64_t> out;
  for (std::uint32_t m = mask; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::uint64_t>(std::countr_zero(m)));
  }
  return out;
}

}  // namespace

MinRecoveryResult min_recovery_bruteforce(std::size_t n,
                                          std::uint64_t max_exponent,
                                          const MinRecoveryLimits& limits) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "n must be at least 1");
  if (n > limits.max_n || max_exponent > limits.max_exponent ||
      max_exponent > 31) {
    fail(ErrorCode::kSearchBudgetExceeded,
         "exhaustive search limited to n <= " + std::to_string(limits.max_n) +
             " and max exponent <= " + std::to_string(limits.max_exponent));
  }

  std::vector<std::uint32_t> subsets;
  enumerate_subsets(n - 1, 1, max_exponent, 1u, subsets);
  const std::uint64_t candidates =
      static_cast<std::uint64_t>(subsets.size()) * subsets.size();
  if (candidates > limits.max_candidates) {
    fail(ErrorCode::kSearchBudgetExceeded,
         std::to_string(candidates) + " candidate pairs exceed the budget of " +
             std::to_string(limits.max_candidates));
  }

  std::size_t best = 0;
  std::uint32_t best_p = 0, best_q = 0;
  std::uint64_t count[64];
  for (std::uint32_t pm : subsets) {
    const auto p = mask_elements(pm);
    for (std::uint32_t qm : subsets) {
      const auto q = mask_elements(qm);
      std::fill(std::begin(count), std::end(count), 0);
      std::uint64_t sums = 0;
      for (std::uint64_t a : p) {
        for (std::uint64_t b : q) {
          ++count[a + b];
          sums |= std::uint64_t{1} << (a + b);
        }
      }
      bool decodable = true;
      for (std::size_t k = 0; k < n && decodable; ++k) {
        decodable = count[p[k] + q[k]] == 1;
      }
      if (!decodable) continue;
      const auto size = static_cast<std::size_t>(std::popcount(sums));
      if (best == 0 || size < best) {
        best = size;
        best_p = pm;
        best_q = qm;
      }
    }
  }
  if (best == 0) {
    fail(ErrorCode::kParameterSearchExhausted,
         "no decodable pair with elements <= " + std::to_string(max_exponent));
  }
  return MinRecoveryResult{best, ExponentPair(mask_elements(best_p),
                                              mask_elements(best_q))};
}

}  // namespace rookcodes
