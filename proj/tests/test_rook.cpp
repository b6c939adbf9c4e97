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

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "rookcodes/coding.hpp"
#include "rookcodes/errors.hpp"
#include "rookcodes/exponents.hpp"
#include "rookcodes/random.hpp"
#include "rookcodes/rook.hpp"

namespace rookcodes {
namespace {

constexpr std::uint64_t kP61 = PrimeField::kMersenne61;

FieldMatrix scalar(std::uint64_t v) { return FieldMatrix(1, 1, {Fe{v}}); }

BatchInputs worked_inputs() {
  return BatchInputs{{scalar(3), scalar(5)}, {scalar(2), scalar(7)}};
}

std::vector<Fe> points(std::initializer_list<std::uint64_t> xs) {
  std::vector<Fe> out;
  for (auto x : xs) out.push_back(Fe{x});
  return out;
}

std::vector<WorkerProduct> all_products(const RookScheme& scheme,
                                        const BatchInputs& inputs) {
  std::vector<WorkerProduct> out;
  OpCounter c;
  for (std::size_t w = 0; w < scheme.workers(); ++w) {
    out.push_back(rook_worker(scheme.field(), rook_encode_share(scheme, inputs, w, c), c));
  }
  return out;
}

ErrorCode code_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(GapPowersTest, Examples) {
  OpCounter c;
  const std::vector<std::uint64_t> p{0, 2, 3};
  EXPECT_EQ(gap_powers(PrimeField(7), p, Fe{2}, c), points({1, 4, 2}));
  const std::vector<std::uint64_t> run{0, 1, 2, 3};
  EXPECT_EQ(gap_powers(PrimeField(101), run, Fe{9}, c), points({1, 9, 9, 9}));
  const std::vector<std::uint64_t> single{5};
  EXPECT_EQ(gap_powers(PrimeField(101), single, Fe{2}, c), points({32}));
}

TEST(RookEncodeTest, WorkedExample) {
  const PrimeField f(101);
  const RookScheme scheme(ExponentPair({0, 1}, {0, 1}), f, points({1, 2, 3}));
  OpCounter c;
  const WorkerShare share = rook_encode_at(scheme, worked_inputs(), Fe{2}, c);
  EXPECT_EQ(share.a, scalar(13));
  EXPECT_EQ(share.b, scalar(16));
  const WorkerProduct product = rook_worker(f, share, c);
  EXPECT_EQ(product.e, scalar(6));
}

TEST(RookEncodeTest, SingleBlockAndZeroPoint) {
  const PrimeField f(101);
  const BatchInputs one{{scalar(42)}, {scalar(9)}};
  const RookScheme scheme(ExponentPair({0}, {0}), f, points({5}));
  OpCounter c;
  EXPECT_EQ(rook_encode_at(scheme, one, Fe{5}, c).a, scalar(42));

  const RookScheme three(ExponentPair({0, 1, 3}, {0, 1, 3}), f, points({1, 2, 3, 4, 5, 6}));
  const BatchInputs in{{scalar(10), scalar(20), scalar(30)}, {scalar(1), scalar(2), scalar(3)}};
  const WorkerShare at_zero = rook_encode_at(three, in, Fe{0}, c);
  EXPECT_EQ(at_zero.a, scalar(10));
  EXPECT_EQ(at_zero.b, scalar(1));
}

TEST(RookEncodeTest, MatchesDirectPolynomialEvaluation) {
  const PrimeField f;
  RandomStream rs(4, 4);
  for (const auto& pair : {poly_code_exponents(5), base3_exponents(6), behrend_exponents(7)}) {
    const auto inputs = random_inputs(f, pair.n(), Dims{2, 3, 2}, rs);
    const Fe x{rs.below(kP61 - 1) + 1};
    const RookScheme scheme(pair, f, {x});
    OpCounter c;
    const WorkerShare share = rook_encode_at(scheme, inputs, x, c);
    FieldMatrix a(2, 3), b(3, 2);
    for (std::size_t i = 0; i < pair.n(); ++i) {
      const std::uint64_t xp = oracle::powmod(x.v, pair.p()[i], kP61);
      const std::uint64_t xq = oracle::powmod(x.v, pair.q()[i], kP61);
      for (std::size_t t = 0; t < a.size(); ++t) {
        a.entries()[t].v = oracle::addmod(a.entries()[t].v,
                                          oracle::mulmod(inputs.a[i].entries()[t].v, xp, kP61), kP61);
      }
      for (std::size_t t = 0; t < b.size(); ++t) {
        b.entries()[t].v = oracle::addmod(b.entries()[t].v,
                                          oracle::mulmod(inputs.b[i].entries()[t].v, xq, kP61), kP61);
      }
    }
    EXPECT_EQ(share.a, a);
    EXPECT_EQ(share.b, b);
  }
}

TEST(RookEncodeTest, MultiplicationAccountingIdentity) {
  const PrimeField f;
  RandomStream rs(6, 6);
  for (std::size_t n : {1u, 2u, 3u, 8u, 20u}) {
    for (const auto& pair : {poly_code_exponents(n), base3_exponents(n), behrend_exponents(n)}) {
      const Dims dims{3, 2, 4};
      const auto inputs = random_inputs(f, n, dims, rs);
      const auto scheme = RookScheme::with_random_points(pair, f, 3, rs);
      for (std::size_t w = 0; w < 3; ++w) {
        OpCounter total, gaps;
        rook_encode_share(scheme, inputs, w, total, &gaps);
        const std::uint64_t bound = gaps.muls + (dims.rows + dims.cols) * dims.inner * n;
        EXPECT_LE(total.muls, bound);
        EXPECT_EQ(total.muls, bound);
        EXPECT_EQ(total.invs, 0u);
        EXPECT_EQ(gaps.invs, 0u);
      }
    }
  }
}

TEST(RookEncodeTest, RejectsDimensionMismatch) {
  const PrimeField f(101);
  const RookScheme scheme(ExponentPair({0, 1}, {0, 1}), f, points({1, 2, 3}));
  OpCounter c;
  BatchInputs bad = worked_inputs();
  bad.a[1] = FieldMatrix(2, 1);
  EXPECT_EQ(code_of([&] { rook_encode_share(scheme, bad, 0, c); }),
            ErrorCode::kDimensionMismatch);
  const BatchInputs three{{scalar(1), scalar(2), scalar(3)}, {scalar(1), scalar(2), scalar(3)}};
  EXPECT_EQ(code_of([&] { rook_encode_share(scheme, three, 0, c); }),
            ErrorCode::kDimensionMismatch);
}

TEST(RookWorkerTest, IdentityAndZero) {
  const PrimeField f(101);
  RandomStream rs(1, 1);
  OpCounter c;
  const FieldMatrix b = mat_random(f, 3, 2, rs);
  EXPECT_EQ(rook_worker(f, WorkerShare{0, Fe{1}, FieldMatrix::identity(3), b}, c).e, b);
  EXPECT_EQ(rook_worker(f, WorkerShare{0, Fe{1}, FieldMatrix(2, 3), b}, c).e, FieldMatrix(2, 2));
  OpCounter counted;
  rook_worker(f, WorkerShare{0, Fe{1}, FieldMatrix(4, 3), b}, counted);
  EXPECT_EQ(counted.muls, 4u * 3u * 2u);
}

TEST(RookDecodeTest, WorkedExample) {
  const PrimeField f(101);
  const RookScheme scheme(ExponentPair({0, 1}, {0, 1}), f, points({1, 2, 3}));
  const auto products = all_products(scheme, worked_inputs());
  EXPECT_EQ(products[0].e, scalar(72));
  EXPECT_EQ(products[1].e, scalar(6));
  EXPECT_EQ(products[2].e, scalar(10));
  OpCounter c;
  const DecodeResult r = rook_decode(scheme, products, c);
  EXPECT_EQ(r.products, (std::vector<FieldMatrix>{scalar(6), scalar(35)}));
  EXPECT_EQ(r.responses_used, 3u);
  EXPECT_FALSE(r.retried);
}

TEST(RookDecodeTest, SingleBlockDividesOutMonomial) {
  const PrimeField f(101);
  const RookScheme scheme(ExponentPair({2}, {3}), f, points({7}));
  const BatchInputs in{{scalar(4)}, {scalar(9)}};
  const auto products = all_products(scheme, in);
  EXPECT_EQ(products[0].e.entries()[0].v, 36 * oracle::powmod(7, 5, 101) % 101);
  OpCounter c;
  EXPECT_EQ(rook_decode(scheme, products, c).products[0], scalar(36));
}

TEST(RookDecodeTest, Errors) {
  const PrimeField f(101);
  const RookScheme scheme(ExponentPair({0, 1}, {0, 1}), f, points({1, 2, 3}));
  auto products = all_products(scheme, worked_inputs());
  OpCounter c;
  EXPECT_EQ(code_of([&] { rook_decode(scheme, std::span(products).first(2), c); }),
            ErrorCode::kNotEnoughProducts);
  products[2] = products[0];
  EXPECT_EQ(code_of([&] { rook_decode(scheme, products, c); }),
            ErrorCode::kDuplicateEvaluationPoint);
}

// Support {0, 2, 4}: rows (1, x^2, x^4) coincide for x and -x.
TEST(RookDecodeTest, SingularRetryPaths) {
  const PrimeField f(101);
  const ExponentPair pair({0, 2}, {0, 2});
  const BatchInputs in = worked_inputs();
  OpCounter c;

  const RookScheme recovers(pair, f, points({1, 2, 100, 3}));
  const DecodeResult r = rook_decode(recovers, all_products(recovers, in), c);
  EXPECT_TRUE(r.retried);
  EXPECT_EQ(r.products, (std::vector<FieldMatrix>{scalar(6), scalar(35)}));

  const RookScheme stuck(pair, f, points({1, 2, 100, 99}));
  EXPECT_EQ(code_of([&] { rook_decode(stuck, all_products(stuck, in), c); }),
            ErrorCode::kSingularAfterRetry);

  const RookScheme no_spare(pair, f, points({1, 2, 100}));
  EXPECT_EQ(code_of([&] { rook_decode(no_spare, all_products(no_spare, in), c); }),
            ErrorCode::kSingularMatrix);
}

TEST(RookDecodeTest, IgnoresProductsBeyondThreshold) {
  const PrimeField f;
  RandomStream rs(9, 9);
  const auto pair = base3_exponents(4);
  const auto scheme = RookScheme::with_random_points(pair, f, 14, rs);
  const auto inputs = random_inputs(f, 4, Dims{2, 2, 2}, rs);
  auto products = all_products(scheme, inputs);
  OpCounter c;
  const auto expected = direct_products(f, inputs, c);
  for (std::size_t extra = scheme.recovery_threshold(); extra < products.size(); ++extra) {
    products[extra].e = mat_random(f, 2, 2, rs);  // garbage after the first L
  }
  EXPECT_EQ(rook_decode(scheme, products, c).products, expected);
}

TEST(RookDecodeTest, ArrivalOrderDoesNotMatter) {
  const PrimeField f;
  RandomStream rs(10, 10);
  const auto pair = behrend_exponents(5);
  const auto scheme = RookScheme::with_random_points(pair, f, sum_support(pair).size(), rs);
  const auto inputs = random_inputs(f, 5, Dims{1, 2, 3}, rs);
  auto products = all_products(scheme, inputs);
  OpCounter c;
  const auto first = rook_decode(scheme, products, c).products;
  for (int i = 0; i < 10; ++i) {
    std::shuffle(products.begin(), products.end(), std::mt19937_64(i));
    EXPECT_EQ(rook_decode(scheme, products, c).products, first);
  }
}

TEST(RookSchemeTest, ValidatesConfiguration) {
  const PrimeField f(101);
  auto bad = [&](auto&& body) { EXPECT_EQ(code_of(body), ErrorCode::kConfigInvalid); };
  bad([&] { RookScheme(ExponentPair({0, 1, 2}, {0, 1, 2}), f, points({1, 2, 3, 4, 5})); });
  bad([&] { RookScheme(ExponentPair({0, 1}, {0, 1}), f, points({1, 2, 2})); });
  bad([&] { RookScheme(ExponentPair({0, 1}, {0, 1}), f, points({0, 1, 2})); });
  bad([&] { RookScheme(ExponentPair({0, 1}, {0, 1}), f, points({1, 2, 101})); });
  bad([&] { RookScheme(ExponentPair({0, 50}, {0, 50}), f, points({1, 2, 3})); });
  EXPECT_NO_THROW(RookScheme(ExponentPair({0, 49}, {0, 50}), f, points({1, 2, 3})));
}

TEST(RookSchemeTest, RecoveryThresholds) {
  const PrimeField f;
  RandomStream rs(2, 2);
  EXPECT_EQ(RookScheme::with_random_points(base3_exponents(2), f, 3, rs).recovery_threshold(), 3u);
  EXPECT_EQ(RookScheme::with_random_points(poly_code_exponents(3), f, 9, rs).recovery_threshold(), 9u);
  const ExponentPair example({7, 11, 27, 35}, {7, 11, 27, 35});
  EXPECT_EQ(RookScheme::with_random_points(example, f, 10, rs).recovery_threshold(),
            oracle::sumset({7, 11, 27, 35}, {7, 11, 27, 35}).size());
}

// Any L of the m workers decode to the direct products.
TEST(RookRoundtripTest, RandomSubsetsAcrossConstructions) {
  std::size_t trials = 0, singular = 0, singular_p61 = 0, trials_p61 = 0;
  for (std::uint64_t p : std::vector<std::uint64_t>{kP61, 101}) {
    const PrimeField f(p);
    RandomStream rs(31, p);
    for (std::size_t n : {1u, 2u, 4u, 8u, 16u, 32u}) {
      for (const auto& pair : {poly_code_exponents(n), base3_exponents(n), behrend_exponents(n)}) {
        const std::size_t l = sum_support(pair).size();
        if (sum_support(pair).support.back() >= p - 1 || l + 2 > p - 1) continue;
        const std::size_t m = std::min<std::size_t>(l + 2, p - 1);
        const std::size_t dim = l > 300 ? 2 : (l > 64 ? 4 : 8);
        const int reps = l > 300 ? 1 : 3;
        for (int rep = 0; rep < reps; ++rep) {
          const auto scheme = RookScheme::with_random_points(pair, f, m, rs);
          const auto inputs = random_inputs(f, n, Dims{dim, dim, dim}, rs);
          auto products = all_products(scheme, inputs);
          std::shuffle(products.begin(), products.end(), std::mt19937_64(rs.next_u64()));
          OpCounter c;
          const auto expected = direct_products(f, inputs, c);
          ++trials;
          if (p == kP61) ++trials_p61;
          try {
            const auto r = rook_decode(scheme, products, c);
            EXPECT_EQ(r.products, expected) << "p=" << p << " n=" << n;
            EXPECT_EQ(r.responses_used, l);
            if (r.retried) {
              ++singular;
              if (p == kP61) ++singular_p61;
            }
          } catch (const Error& e) {
            ASSERT_TRUE(e.code() == ErrorCode::kSingularAfterRetry ||
                        e.code() == ErrorCode::kSingularMatrix)
                << e.what();
            ASSERT_NE(p, kP61) << "unrecovered singular system at p = 2^61-1";
            ++singular;
          }
        }
      }
    }
  }
  EXPECT_GT(trials, 40u);
  EXPECT_LT(static_cast<double>(singular_p61), 0.01 * static_cast<double>(trials_p61));
  std::cout << "roundtrip trials=" << trials << " singular (any field)=" << singular << '\n';
}

}  // namespace
}  // namespace rookcodes
