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

#include "rookcodes/field.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <string>

#include "rookcodes/errors.hpp"

namespace rookcodes {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  // The first twelve primes form a deterministic witness set below 3.3e24.
  static constexpr std::array<std::uint64_t, 12> kBases = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus)
    : p_(modulus), mersenne_(modulus == kMersenne61) {
  if (!is_prime_u64(modulus)) {
    fail(ErrorCode::kInvalidArgument,
         "field modulus " + std::to_string(modulus) + " is not prime");
  }
}

Fe PrimeField::from_signed(std::int64_t value) const {
  if (value >= 0) return make(static_cast<std::uint64_t>(value));
  // Two's complement magnitude avoids overflow on INT64_MIN.
  const std::uint64_t mag = ~static_cast<std::uint64_t>(value) + 1;
  return neg(make(mag));
}

Fe PrimeField::inv(Fe a, OpCounter& counter) const {
  if (a.v == 0) fail(ErrorCode::kInvalidArgument, "inverse of zero");
  ++counter.invs;
  // Extended Euclid on (p, a), tracking only the coefficient of a. The
  // coefficients alternate in sign, so magnitudes plus a parity flag suffice.
  std::uint64_t r0 = p_, r1 = a.v;
  std::uint64_t t0 = 0, t1 = 1;
  bool negative = false;  // sign of t1; t0 has the opposite sign
  while (r1 != 0) {
    const std::uint64_t q = r0 / r1;
    const std::uint64_t r2 = r0 - q * r1;
    const std::uint64_t t2 = t0 + q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
    negative = !negative;
  }
  // r0 == 1 and t0 is |coefficient| with sign given by !negative.
  const std::uint64_t mag = t0 % p_;
  return negative ? Fe{mag} : neg(Fe{mag});
}

Fe PrimeField::pow(Fe x, std::uint64_t e, OpCounter& counter) const {
  if (e == 0) return one();
  Fe r = x;
  for (int bit = 62 - std::countl_zero(e); bit >= 0; --bit) {
    r = mul(r, r);
    ++counter.muls;
    if ((e >> bit) & 1) {
      r = mul(r, x);
      ++counter.muls;
    }
  }
  return r;
}

std::string PrimeField::to_decimal(Fe x) { return std::to_string(x.v); }

Fe PrimeField::parse_decimal(const std::string& text) const {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    fail(ErrorCode::kParseError, "not a decimal field element: '" + text + "'");
  }
  if (value >= p_) {
    fail(ErrorCode::kParseError,
         "field element " + text + " is not below the modulus");
  }
  return Fe{value};
}

}  // namespace rookcodes
