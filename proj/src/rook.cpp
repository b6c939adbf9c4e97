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

#include "rookcodes/rook.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "kernels.hpp"
#include "rookcodes/errors.hpp"

namespace rookcodes {
namespace {

void check_points(std::span<const Fe> points) {
  std::vector<Fe> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front().v == 0) {
    fail(ErrorCode::kConfigInvalid, "evaluation point 0 is not allowed");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::kConfigInvalid, "evaluation points are not distinct");
  }
}

// f = g[n-1] * M[n-1];  f = g[i] * (M[i] + f) for i = n-2 .. 0.
FieldMatrix horner(const PrimeField& field, std::span<const Fe> gaps,
                   const std::vector<FieldMatrix>& blocks, OpCounter& counter) {
  const std::size_t n = blocks.size();
  FieldMatrix acc = mat_scale(field, gaps[n - 1], blocks[n - 1], counter);
  for (std::size_t i = n - 1; i-- > 0;) {
    acc = mat_add(field, blocks[i], acc, counter);
    acc = mat_scale(field, gaps[i], acc, counter);
  }
  return acc;
}

DecodeResult solve_rows(const RookScheme& scheme,
                        std::span<const WorkerProduct> products,
                        std::span<const std::size_t> rows, OpCounter& counter) {
  const auto& field = scheme.field();
  const auto& support = scheme.support();
  const std::size_t l = support.size();

  std::vector<Fe> xs(l);
  std::vector<FieldMatrix> rhs;
  rhs.reserve(l);
  for (std::size_t r = 0; r < l; ++r) {
    xs[r] = products[rows[r]].x;
    rhs.push_back(products[rows[r]].e);
  }

  // Column t holds x^{e_t}: the previous column times x^{e_t - e_{t-1}}.
  FieldMatrix v(l, l);
  std::vector<Fe> column(l);
  std::vector<Fe> step(l);
  std::uint64_t prev = 0;
  for (std::size_t t = 0; t < l; ++t) {
    const std::uint64_t e = support.support[t];
    kernels::pow_pointwise(field, step.data(), xs.data(), l, e - prev, counter);
    if (t == 0) {
      column = step;
    } else {
      kernels::mul_pointwise(field, column.data(), step.data(), l);
      counter.muls += l;
    }
    for (std::size_t r = 0; r < l; ++r) v(r, t) = column[r];
    prev = e;
  }
  auto coefficients = solve_linear(field, v, rhs, counter);

  DecodeResult result;
  result.responses_used = l;
  result.products.reserve(scheme.pair().n());
  for (std::size_t idx : support.diag_index) {
    result.products.push_back(coefficients[idx]);
  }
  return result;
}

}  // namespace

RookScheme::RookScheme(ExponentPair pair, PrimeField field,
                       std::vector<Fe> eval_points)
    : pair_(std::move(pair)),
      field_(field),
      eval_points_(std::move(eval_points)) {
  if (!is_decodable(pair_)) {
    fail(ErrorCode::kConfigInvalid, "exponent pair is not decodable");
  }
  support_ = sum_support(pair_);
  // x^e must be distinct functions on the multiplicative group.
  if (support_.support.back() >= field_.modulus() - 1) {
    fail(ErrorCode::kConfigInvalid,
         "largest exponent sum " + std::to_string(support_.support.back()) +
             " is not below p - 1 = " + std::to_string(field_.modulus() - 1));
  }
  for (Fe x : eval_points_) {
    if (x.v >= field_.modulus()) {
      fail(ErrorCode::kConfigInvalid, "evaluation point outside the field");
    }
  }
  check_points(eval_points_);
}

RookScheme RookScheme::with_random_points(ExponentPair pair, PrimeField field,
                                          std::size_t workers,
                                          RandomStream& stream) {
  auto points = distinct_points(field, workers, {}, stream);
  return RookScheme(std::move(pair), field, std::move(points));
}

std::vector<Fe> gap_powers(const PrimeField& field,
                           std::span<const std::uint64_t> exponents, Fe x,
                           OpCounter& counter) {
  std::vector<Fe> out;
  out.reserve(exponents.size());
  std::uint64_t prev = 0;
  for (std::uint64_t e : exponents) {
    out.push_back(field.pow(x, e - prev, counter));
    prev = e;
  }
  return out;
}

WorkerShare rook_encode_at(const RookScheme& scheme, const BatchInputs& inputs,
                           Fe x, OpCounter& counter, OpCounter* gap_counter) {
  validate_inputs(inputs);
  const auto& pair = scheme.pair();
  if (inputs.n() != pair.n()) {
    fail(ErrorCode::kDimensionMismatch,
         "scheme encodes " + std::to_string(pair.n()) + " pairs, got " +
             std::to_string(inputs.n()));
  }
  const auto& field = scheme.field();

  OpCounter gaps;
  const auto p_gaps = gap_powers(field, pair.p(), x, gaps);
  const auto q_gaps =
      pair.symmetric() ? p_gaps : gap_powers(field, pair.q(), x, gaps);
  counter += gaps;
  if (gap_counter != nullptr) *gap_counter += gaps;

  WorkerShare share;
  share.x = x;
  share.a = horner(field, p_gaps, inputs.a, counter);
  share.b = horner(field, q_gaps, inputs.b, counter);
  return share;
}

WorkerShare rook_encode_share(const RookScheme& scheme,
                              const BatchInputs& inputs,
                              std::uint64_t worker_id, OpCounter& counter,
                              OpCounter* gap_counter) {
  if (worker_id >= scheme.workers()) {
    fail(ErrorCode::kInvalidArgument,
         "worker " + std::to_string(worker_id) + " out of range");
  }
  WorkerShare share = rook_encode_at(scheme, inputs, scheme.eval_points()[worker_id],
                                     counter, gap_counter);
  share.worker_id = worker_id;
  return share;
}

WorkerProduct rook_worker(const PrimeField& field, const WorkerShare& share,
                          OpCounter& counter) {
  return worker_compute(field, share, counter);
}

DecodeResult rook_decode(const RookScheme& scheme,
                         std::span<const WorkerProduct> products,
                         OpCounter& counter) {
  const std::size_t l = scheme.recovery_threshold();
  if (products.size() < l) {
    fail(ErrorCode::kNotEnoughProducts,
         "need " + std::to_string(l) + " products, have " +
             std::to_string(products.size()));
  }
  require_distinct_points(products.first(l));

  std::vector<std::size_t> rows(l);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  try {
    return solve_rows(scheme, products, rows, counter);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingularMatrix || products.size() == l) throw;
  }

  // One retry with the next arrival in place of the newest row.
  rows.back() = l;
  std::vector<WorkerProduct> used;
  used.reserve(l);
  for (std::size_t r : rows) used.push_back(products[r]);
  require_distinct_points(used);
  try {
    DecodeResult result = solve_rows(scheme, products, rows, counter);
    result.retried = true;
    return result;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingularMatrix) throw;
    fail(ErrorCode::kSingularAfterRetry,
         "evaluation matrix singular after substituting one product");
  }
}

}  // namespace rookcodes
