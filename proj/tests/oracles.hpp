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

// Slow, deliberately naive reference implementations used only by the
// tests. Nothing here shares code with the library beyond value types.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rookcodes/field.hpp"
#include "rookcodes/matrix.hpp"

namespace rookcodes::oracle {

using Values = std::vector<std::uint64_t>;

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(u128{a} * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((u128{a} + b) % p);
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return addmod(a, p - b % p, p);
}

inline std::uint64_t powmod(std::uint64_t x, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (std::uint64_t i = 0; i < e; ++i) r = mulmod(r, x, p);
  return r;
}

// Fermat inverse by binary exponentiation (p prime).
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return r;
}

inline FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b, std::uint64_t p) {
  FieldMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) {
        acc = addmod(acc, mulmod(a(i, t).v, b(t, j).v, p), p);
      }
      out(i, j) = Fe{acc};
    }
  }
  return out;
}

// Gauss-Jordan with full column reduction. nullopt if v is singular.
inline std::optional<std::vector<FieldMatrix>> solve(const FieldMatrix& v,
                                                     std::vector<FieldMatrix> rhs,
                                                     std::uint64_t p) {
  const std::size_t n = v.rows();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = v(i, j).v;
  }
  const bool has_rhs = !rhs.empty();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    if (has_rhs) std::swap(rhs[piv], rhs[col]);
    const std::uint64_t inv = invmod(a[col][col], p);
    for (auto& x : a[col]) x = mulmod(x, inv, p);
    if (has_rhs) {
      for (auto& x : rhs[col].entries()) x.v = mulmod(x.v, inv, p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const std::uint64_t f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) a[r][j] = submod(a[r][j], mulmod(f, a[col][j], p), p);
      if (has_rhs) {
        auto dst = rhs[r].entries();
        auto src = rhs[col].entries();
        for (std::size_t t = 0; t < dst.size(); ++t) {
          dst[t].v = submod(dst[t].v, mulmod(f, src[t].v, p), p);
        }
      }
    }
  }
  return rhs;
}

// Property 1 verbatim: p_k + q_k = p_i + q_j only for i = j = k.
inline bool decodable(const Values& p, const Values& q) {
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if ((i != k || j != k) && p[i] + q[j] == p[k] + q[k]) return false;
      }
    }
  }
  return true;
}

inline std::set<std::uint64_t> sumset(const Values& p, const Values& q) {
  std::set<std::uint64_t> out;
  for (auto a : p) {
    for (auto b : q) out.insert(a + b);
  }
  return out;
}

inline bool ap3_free(const Values& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (i != j && j != k && i != k && a[i] + a[k] == 2 * a[j]) return false;
      }
    }
  }
  return true;
}

// The n smallest non-negative integers whose base-3 digits are all 0 or 1.
inline Values base3(std::size_t n) {
  Values out;
  for (std::uint64_t v = 0; out.size() < n; ++v) {
    std::uint64_t x = v;
    bool ok = true;
    while (x > 0 && ok) {
      ok = x % 3 <= 1;
      x /= 3;
    }
    if (ok) out.push_back(v);
  }
  return out;
}

// Every digit vector in {0..d-1}^len, grouped by squared norm; the largest
// shell (smallest norm on ties) mapped through base 2d-1, n smallest values.
inline Values behrend(std::size_t n, std::uint64_t d, std::size_t len) {
  std::map<std::uint64_t, Values> shells;
  std::vector<std::uint64_t> digits(len, 0);
  while (true) {
    std::uint64_t norm = 0, value = 0, scale = 1;
    for (std::size_t i = 0; i < len; ++i) {
      norm += digits[i] * digits[i];
      value += digits[i] * scale;
      scale *= 2 * d - 1;
    }
    shells[norm].push_back(value);
    std::size_t i = 0;
    while (i < len && ++digits[i] == d) digits[i++] = 0;
    if (i == len) break;
  }
  const Values* best = nullptr;
  for (const auto& [norm, values] : shells) {
    if (best == nullptr || values.size() > best->size()) best = &values;
  }
  Values out = *best;
  std::sort(out.begin(), out.end());
  out.resize(std::min(out.size(), n));
  return out;
}

namespace detail {
inline void subsets_with_zero(std::size_t n, std::uint64_t max, Values& cur,
                              std::vector<Values>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  const std::uint64_t start = cur.empty() ? 0 : cur.back() + 1;
  if (cur.empty()) {
    cur.push_back(0);
    subsets_with_zero(n, max, cur, out);
    cur.pop_back();
    return;
  }
  for (std::uint64_t v = start; v <= max; ++v) {
    cur.push_back(v);
    subsets_with_zero(n, max, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

// Minimum |P+Q| over decodable pairs of sorted n-sets containing 0 with
// elements <= max. 0 when nothing qualifies.
inline std::uint64_t min_recovery(std::size_t n, std::uint64_t max) {
  std::vector<Values> sets;
  Values cur;
  detail::subsets_with_zero(n, max, cur, sets);
  std::uint64_t best = 0;
  for (const auto& p : sets) {
    for (const auto& q : sets) {
      if (!decodable(p, q)) continue;
      const std::uint64_t l = sumset(p, q).size();
      if (best == 0 || l < best) best = l;
    }
  }
  return best;
}

}  // namespace rookcodes::oracle
