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

#include <compare>
#include <cstdint>
#include <string>

namespace rookcodes {

__extension__ using u128 = unsigned __int128;

/// Canonical representative of a prime-field element, always in [0, p).
struct Fe {
  std::uint64_t v = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

/// Scalar operation tallies for one logical task (a worker, a master phase).
struct OpCounter {
  std::uint64_t muls = 0;
  std::uint64_t adds = 0;
  std::uint64_t invs = 0;

  void reset() { *this = OpCounter{}; }

  OpCounter& operator+=(const OpCounter& other) {
    muls += other.muls;
    adds += other.adds;
    invs += other.invs;
    return *this;
  }

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Arithmetic modulo a prime p < 2^64. Copyable value type; holds no
/// mutable state so one instance can be shared across threads.
class PrimeField {
 public:
  static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

  /// Throws Error(kInvalidArgument) unless `modulus` is prime.
  explicit PrimeField(std::uint64_t modulus = kMersenne61);

  std::uint64_t modulus() const { return p_; }
  bool is_mersenne61() const { return mersenne_; }

  Fe make(std::uint64_t value) const { return Fe{value % p_}; }
  Fe from_signed(std::int64_t value) const;
  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }

  Fe add(Fe a, Fe b) const {
    std::uint64_t s = a.v + b.v;
    if (s < a.v || s >= p_) s -= p_;
    return Fe{s};
  }

  Fe sub(Fe a, Fe b) const {
    return Fe{a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v)};
  }

  Fe neg(Fe a) const { return Fe{a.v == 0 ? 0 : p_ - a.v}; }

  Fe mul(Fe a, Fe b) const {
    const u128 z = static_cast<u128>(a.v) * b.v;
    if (mersenne_) return Fe{reduce_mersenne61(z)};
    return Fe{static_cast<std::uint64_t>(z % p_)};
  }

  /// z mod 2^61-1 for any z < 2^124.
  static std::uint64_t reduce_mersenne61(u128 z) {
    std::uint64_t r = (static_cast<std::uint64_t>(z) & kMersenne61) +
                      static_cast<std::uint64_t>(z >> 61);
    r = (r & kMersenne61) + (r >> 61);
    return r >= kMersenne61 ? r - kMersenne61 : r;
  }

  /// Multiplicative inverse via extended Euclid. Throws
  /// Error(kInvalidArgument) for zero. Bumps counter.invs.
  Fe inv(Fe a, OpCounter& counter) const;

  /// x^e by left-to-right square-and-multiply. Adds the number of field
  /// multiplications performed (at most 2*floor(log2 e)) to counter.muls.
  Fe pow(Fe x, std::uint64_t e, OpCounter& counter) const;

  /// Decimal rendering and parsing of elements; parse rejects values >= p.
  static std::string to_decimal(Fe x);
  Fe parse_decimal(const std::string& text) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t p_;
  bool mersenne_;
};

}  // namespace rookcodes
