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

// Bulk field kernels used by the dense solver and the decoders. The
// Mersenne-61 paths have an AVX-512 variant selected at run time; every
// path produces identical results once passed through canonical().

#pragma once

#include <cstddef>
#include <cstdint>

#include "rookcodes/field.hpp"

namespace rookcodes::kernels {

/// Extended Euclid for a modular inverse, advanced one division at a time
/// so the steps can be spread across other work. Produces the same value as
/// PrimeField::inv but does not touch any counter.
class PendingInverse {
 public:
  void start(const PrimeField& field, Fe a) {
    p_ = field.modulus();
    r0_ = p_;
    r1_ = a.v;
    t0_ = 0;
    t1_ = 1;
    negative_ = false;
  }
  bool done() const { return r1_ == 0; }
  void step() {
    const std::uint64_t q = r0_ / r1_;
    const std::uint64_t r2 = r0_ - q * r1_;
    const std::uint64_t t2 = t0_ + q * t1_;
    r0_ = r1_;
    r1_ = r2;
    t0_ = t1_;
    t1_ = t2;
    negative_ = !negative_;
  }
  Fe finish() {
    while (!done()) step();
    const std::uint64_t mag = t0_ % p_;
    return negative_ || mag == 0 ? Fe{mag} : Fe{p_ - mag};
  }

 private:
  std::uint64_t p_ = 0, r0_ = 0, r1_ = 0, t0_ = 0, t1_ = 0;
  bool negative_ = false;
};

/// rows[i * stride + j] += coeffs[i] * src[j] for i < row_count, j < count.
/// coeffs must be reduced. Under the Mersenne modulus rows and src may hold
/// partially reduced values in [0, p + 8) and the results are left in that
/// range; elsewhere everything stays reduced. If background is given it is
/// stepped between rows and left finished or partly done.
void add_scaled_rows(const PrimeField& field, Fe* rows, std::size_t stride,
                     std::size_t row_count, const Fe* coeffs, const Fe* src,
                     std::size_t count, PendingInverse* background = nullptr);

/// sum_j a[j] * b[j], reduced. Either side may be partially reduced as
/// above.
Fe dot(const PrimeField& field, const Fe* a, const Fe* b, std::size_t count);

/// Finishes the reduction of a value left partially reduced by
/// add_scaled_rows.
inline Fe canonical(const PrimeField& field, Fe a) {
  return a.v >= field.modulus() ? Fe{a.v - field.modulus()} : a;
}

/// xs[i] *= s.
void scale(const PrimeField& field, Fe* xs, std::size_t count, Fe s);

/// acc[i] *= by[i].
void mul_pointwise(const PrimeField& field, Fe* acc, const Fe* by,
                   std::size_t count);

/// out[i] = xs[i]^e, by the same square-and-multiply as PrimeField::pow.
/// Adds count times that multiplication count to counter.muls.
void pow_pointwise(const PrimeField& field, Fe* out, const Fe* xs,
                   std::size_t count, std::uint64_t e, OpCounter& counter);

}  // namespace rookcodes::kernels
