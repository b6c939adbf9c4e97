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

#include <bit>
#include <cstdint>
#include <vector>

#include "gtest/gtest.h"
#include "kernels.hpp"

#include "oracles.hpp"
#include "rookcodes/errors.hpp"
#include "rookcodes/field.hpp"
#include "rookcodes/matrix.hpp"
#include "rookcodes/random.hpp"

namespace rookcodes {
namespace {

constexpr std::uint64_t kP61 = PrimeField::kMersenne61;

FieldMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  FieldMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Fe{rows[r][c]};
  }
  return m;
}

TEST(PrimeFieldTest, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    EXPECT_EQ(is_prime_u64(n), oracle::is_prime_trial(n)) << n;
  }
  EXPECT_TRUE(is_prime_u64(kP61));
  EXPECT_TRUE(is_prime_u64(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(is_prime_u64(3215031751ull));           // strong pseudoprime to 2,3,5,7
  EXPECT_FALSE(is_prime_u64(kP61 * 3));
}

TEST(PrimeFieldTest, RejectsCompositeModulus) {
  EXPECT_THROW(PrimeField(100), Error);
  EXPECT_THROW(PrimeField(1), Error);
  try {
    PrimeField f(91);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(PrimeFieldTest, PowExamples) {
  const PrimeField big;
  const PrimeField small(101);
  OpCounter c;
  EXPECT_EQ(big.pow(Fe{7}, 0, c), Fe{1});
  EXPECT_EQ(big.pow(Fe{2}, 10, c), Fe{1024});
  EXPECT_EQ(small.pow(Fe{3}, 100, c), Fe{1});
}

TEST(PrimeFieldTest, PowMatchesRepeatedMultiplication) {
  for (std::uint64_t p : std::vector<std::uint64_t>{101, 65537, kP61, 18446744073709551557ull}) {
    const PrimeField f(p);
    RandomStream rs(7, p);
    for (int trial = 0; trial < 20; ++trial) {
      const Fe x{rs.below(p)};
      std::uint64_t acc = 1;
      for (std::uint64_t e = 0; e <= 64; ++e) {
        OpCounter c;
        EXPECT_EQ(f.pow(x, e, c).v, acc) << "p=" << p << " e=" << e;
        if (e >= 1) {
          EXPECT_LE(c.muls, 2 * static_cast<std::uint64_t>(std::bit_width(e) - 1));
        }
        acc = oracle::mulmod(acc, x.v, p);
      }
    }
  }
}

TEST(PrimeFieldTest, PowCountDependsOnlyOnExponent) {
  const PrimeField f;
  RandomStream rs(3, 3);
  for (std::uint64_t e : std::vector<std::uint64_t>{1, 2, 3, 1000, 123456789, kP61 - 2}) {
    OpCounter first;
    f.pow(Fe{rs.below(kP61)}, e, first);
    for (int i = 0; i < 5; ++i) {
      OpCounter again;
      f.pow(Fe{rs.below(kP61)}, e, again);
      EXPECT_EQ(again, first);
    }
  }
}

TEST(PrimeFieldTest, RingAxiomsSampled) {
  for (std::uint64_t p : std::vector<std::uint64_t>{101, kP61, 1000000007}) {
    const PrimeField f(p);
    RandomStream rs(11, p);
    OpCounter c;
    for (int i = 0; i < 2000; ++i) {
      const Fe a{rs.below(p)}, b{rs.below(p)}, d{rs.below(p)};
      EXPECT_EQ(f.mul(a, f.add(b, d)), f.add(f.mul(a, b), f.mul(a, d)));
      EXPECT_EQ(f.mul(a, b).v, oracle::mulmod(a.v, b.v, p));
      EXPECT_EQ(f.add(a, b).v, static_cast<std::uint64_t>((u128{a.v} + b.v) % p));
      EXPECT_EQ(f.add(f.sub(a, b), b), a);
      EXPECT_EQ(f.add(a, f.neg(a)), Fe{0});
      if (a.v != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a, c)), Fe{1});
      }
    }
  }
}

TEST(PrimeFieldTest, InverseOfZeroIsAnError) {
  const PrimeField f;
  OpCounter c;
  EXPECT_THROW(f.inv(Fe{0}, c), Error);
}

TEST(PrimeFieldTest, DecimalRoundTrip) {
  const PrimeField f;
  EXPECT_EQ(PrimeField::to_decimal(Fe{kP61 - 1}), "2305843009213693950");
  EXPECT_EQ(f.parse_decimal("2305843009213693950"), Fe{kP61 - 1});
  EXPECT_THROW(f.parse_decimal("2305843009213693951"), Error);
  EXPECT_THROW(f.parse_decimal("12a"), Error);
  EXPECT_THROW(f.parse_decimal(""), Error);
  EXPECT_EQ(f.from_signed(-1), Fe{kP61 - 1});
}

TEST(MatrixTest, MatMulExamples) {
  const PrimeField f(101);
  OpCounter c;
  const FieldMatrix m = from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  EXPECT_EQ(mat_mul(f, FieldMatrix::identity(3), m, c), m);
  EXPECT_EQ(mat_mul(f, from_rows({{3}}), from_rows({{2}}), c), from_rows({{6}}));
  OpCounter counted;
  EXPECT_EQ(mat_mul(f, from_rows({{1, 2}, {3, 4}}), from_rows({{5, 6}, {7, 8}}), counted),
            from_rows({{19, 22}, {43, 50}}));
  EXPECT_EQ(counted.muls, 8u);
}

TEST(MatrixTest, MatMulRejectsMismatch) {
  const PrimeField f(101);
  OpCounter c;
  try {
    mat_mul(f, FieldMatrix(2, 3), FieldMatrix(2, 3), c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  EXPECT_THROW(FieldMatrix(2, 2, std::vector<Fe>(3)), Error);
}

TEST(MatrixTest, MatMulCountsSchoolbook) {
  const PrimeField f;
  RandomStream rs(1, 9);
  OpCounter c;
  const FieldMatrix a = mat_random(f, 3, 5, rs);
  const FieldMatrix b = mat_random(f, 5, 4, rs);
  const FieldMatrix prod = mat_mul(f, a, b, c);
  EXPECT_EQ(c.muls, 3u * 5u * 4u);
  EXPECT_EQ(prod, oracle::mat_mul(a, b, kP61));
}

TEST(MatrixTest, SolveIdentityReturnsRhs) {
  const PrimeField f(101);
  RandomStream rs(5, 5);
  std::vector<FieldMatrix> rhs;
  for (int i = 0; i < 4; ++i) rhs.push_back(mat_random(f, 2, 3, rs));
  OpCounter c;
  EXPECT_EQ(solve_linear(f, FieldMatrix::identity(4), rhs, c), rhs);
}

TEST(MatrixTest, SolveRecoversCubicCoefficients) {
  // y(x) = 5 + 7x + 11x^2 evaluated at x = 1, 2, 3 over GF(101).
  const PrimeField f(101);
  const std::vector<std::uint64_t> coeffs{5, 7, 11};
  FieldMatrix v(3, 3);
  std::vector<FieldMatrix> rhs;
  for (std::uint64_t x = 1; x <= 3; ++x) {
    std::uint64_t power = 1, y = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      v(x - 1, j) = Fe{power};
      y = (y + coeffs[j] * power) % 101;
      power = power * x % 101;
    }
    rhs.push_back(from_rows({{y}}));
  }
  OpCounter c;
  const auto sol = solve_linear(f, v, rhs, c);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(sol[j](0, 0).v, coeffs[j]);
  EXPECT_EQ(c.invs, 3u);
}

TEST(MatrixTest, SolveDetectsSingular) {
  const PrimeField f(101);
  const FieldMatrix v = from_rows({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}});
  std::vector<FieldMatrix> rhs(3, from_rows({{1}}));
  OpCounter c;
  try {
    solve_linear(f, v, rhs, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
  }
}

TEST(MatrixTest, SolveRejectsBadShapes) {
  const PrimeField f(101);
  OpCounter c;
  std::vector<FieldMatrix> rhs(2, from_rows({{1}}));
  EXPECT_THROW(solve_linear(f, FieldMatrix(2, 3), rhs, c), Error);
  rhs[1] = FieldMatrix(2, 1);
  EXPECT_THROW(solve_linear(f, FieldMatrix::identity(2), rhs, c), Error);
}

// Forward-multiply random solutions then solve; compare with an
// independent Gauss-Jordan oracle as well.
TEST(MatrixTest, SolveInvertsForwardMultiply) {
  for (std::uint64_t p : std::vector<std::uint64_t>{kP61, 1000000007, 101}) {
    const PrimeField f(p);
    RandomStream rs(21, p);
    for (std::size_t l : {1u, 2u, 3u, 5u, 8u, 13u, 17u, 32u}) {
      for (std::size_t block : {1u, 3u}) {
        const FieldMatrix v = mat_random(f, l, l, rs);
        if (!oracle::solve(v, {}, p)) continue;  // singular sample over GF(101)
        std::vector<FieldMatrix> truth;
        for (std::size_t i = 0; i < l; ++i) truth.push_back(mat_random(f, block, 2, rs));
        std::vector<FieldMatrix> rhs;
        for (std::size_t i = 0; i < l; ++i) {
          FieldMatrix acc(block, 2);
          for (std::size_t j = 0; j < l; ++j) {
            for (std::size_t t = 0; t < acc.size(); ++t) {
              acc.entries()[t].v =
                  (acc.entries()[t].v + oracle::mulmod(v(i, j).v, truth[j].entries()[t].v, p)) % p;
            }
          }
          rhs.push_back(acc);
        }
        OpCounter c;
        EXPECT_EQ(solve_linear(f, v, rhs, c), truth) << "p=" << p << " L=" << l;
        EXPECT_EQ(c.invs, l);
        EXPECT_EQ(*oracle::solve(v, rhs, p), truth);
      }
    }
  }
}

TEST(PrimeFieldTest, SteppedInverseMatchesInv) {
  for (std::uint64_t p : std::vector<std::uint64_t>{kP61, 1000000007, 101, 2}) {
    const PrimeField f(p);
    RandomStream rs(5, p);
    for (int trial = 0; trial < 500; ++trial) {
      const Fe a{1 + rs.below(p - 1)};
      kernels::PendingInverse job;
      job.start(f, a);
      // Partial progress first, as when the elimination pass ends early.
      for (int k = 0; k < trial % 7 && !job.done(); ++k) job.step();
      OpCounter c;
      const Fe inv = job.finish();
      EXPECT_EQ(inv, f.inv(a, c)) << "p=" << p << " a=" << a.v;
      EXPECT_EQ(oracle::mulmod(inv.v, a.v, p), 1u % p);
    }
  }
}

// Zeros above the anti-diagonal leave no pivot on the diagonal, so every
// elimination step swaps rows and the precomputed next inverse is unused.
TEST(MatrixTest, SolveAntiTriangularNeedsSwaps) {
  for (std::uint64_t p : std::vector<std::uint64_t>{kP61, 101}) {
    const PrimeField f(p);
    RandomStream rs(33, p);
    for (std::size_t l : {2u, 5u, 16u, 33u}) {
      FieldMatrix v(l, l);
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = l - 1 - i; j < l; ++j) v(i, j) = Fe{1 + rs.below(p - 1)};
      }
      std::vector<FieldMatrix> rhs;
      for (std::size_t i = 0; i < l; ++i) rhs.push_back(mat_random(f, 2, 1, rs));
      OpCounter c;
      EXPECT_EQ(solve_linear(f, v, rhs, c), *oracle::solve(v, rhs, p)) << "L=" << l;
      EXPECT_EQ(c.invs, l);
    }
  }
}

TEST(MatrixTest, SolveCountsAreDataIndependent) {
  const PrimeField f;
  RandomStream rs(8, 8);
  std::vector<OpCounter> seen;
  for (int trial = 0; trial < 4; ++trial) {
    const FieldMatrix v = mat_random(f, 20, 20, rs);
    std::vector<FieldMatrix> rhs;
    for (int i = 0; i < 20; ++i) rhs.push_back(mat_random(f, 2, 2, rs));
    OpCounter c;
    solve_linear(f, v, rhs, c);
    seen.push_back(c);
  }
  for (const auto& c : seen) EXPECT_EQ(c, seen[0]);
}

TEST(MatrixTest, RandomIsDeterministicPerStream) {
  const PrimeField f;
  RandomStream a(42, 1), b(42, 1), other(42, 2);
  const FieldMatrix ma = mat_random(f, 4, 4, a);
  EXPECT_EQ(ma, mat_random(f, 4, 4, b));
  EXPECT_NE(ma, mat_random(f, 4, 4, other));
  for (Fe x : ma.entries()) EXPECT_LT(x.v, kP61);
  const FieldMatrix empty = mat_random(f, 0, 3, a);
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_TRUE(empty.empty());
}

TEST(MatrixTest, AddScaleAxpyAgree) {
  const PrimeField f(101);
  RandomStream rs(2, 2);
  OpCounter c;
  const FieldMatrix a = mat_random(f, 3, 3, rs);
  const FieldMatrix b = mat_random(f, 3, 3, rs);
  FieldMatrix acc = b;
  mat_axpy(f, Fe{5}, a, acc, c);
  EXPECT_EQ(acc, mat_add(f, b, mat_scale(f, Fe{5}, a, c), c));
}

TEST(RandomStreamTest, UnitAndBelowRanges) {
  RandomStream rs(1, 1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rs.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(rs.below(7), 7u);
    EXPECT_GE(rs.exponential(2.0), 0.0);
  }
  EXPECT_EQ(rs.exponential(0.0), 0.0);
  EXPECT_NE(mix_seed(1, 1), mix_seed(1, 2));
  EXPECT_NE(mix_seed(1, 1), mix_seed(2, 1));
}

}  // namespace
}  // namespace rookcodes
