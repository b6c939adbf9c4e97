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

#include "rookcodes/coding.hpp"
#include "rookcodes/exponents.hpp"
#include "rookcodes/field.hpp"

namespace rookcodes {

/// A Rook code bound to a field and a set of worker evaluation points.
///
/// Worker w receives A~(x_w) = sum_i A_i x_w^{p_i} and
/// B~(x_w) = sum_j B_j x_w^{q_j}. The product polynomial has support P+Q,
/// and since the pair is decodable each A_k B_k is the coefficient of the
/// unique monomial x^{p_k+q_k}. Any |P+Q| responses determine it.
class RookScheme {
 public:
  /// Validates decodability, distinct nonzero points and that every
  /// exponent in P+Q stays below p-1. Throws Error(kConfigInvalid).
  RookScheme(ExponentPair pair, PrimeField field, std::vector<Fe> eval_points);

  /// Draws `workers` distinct nonzero evaluation points from `stream`.
  static RookScheme with_random_points(ExponentPair pair, PrimeField field,
                                       std::size_t workers,
                                       RandomStream& stream);

  const ExponentPair& pair() const { return pair_; }
  const SumSupport& support() const { return support_; }
  const PrimeField& field() const { return field_; }
  std::span<const Fe> eval_points() const { return eval_points_; }
  std::size_t workers() const { return eval_points_.size(); }
  std::size_t recovery_threshold() const { return support_.size(); }

 private:
  ExponentPair pair_;
  SumSupport support_;
  PrimeField field_;
  std::vector<Fe> eval_points_;
};

/// x^{e_0}, x^{e_1 - e_0}, x^{e_2 - e_1}, ... for strictly increasing
/// exponents, each by square-and-multiply. Multiplications go to counter.
std::vector<Fe> gap_powers(const PrimeField& field,
                           std::span<const std::uint64_t> exponents, Fe x,
                           OpCounter& counter);

/// Horner encoding at an arbitrary point. `gap_counter`, when given,
/// additionally receives the multiplications spent in gap_powers, so that
/// counter.muls == gap_counter.muls + (rows + cols) * inner * n exactly.
/// Never divides.
WorkerShare rook_encode_at(const RookScheme& scheme, const BatchInputs& inputs,
                           Fe x, OpCounter& counter,
                           OpCounter* gap_counter = nullptr);

/// Encodes the share for worker `worker_id` at its evaluation point.
WorkerShare rook_encode_share(const RookScheme& scheme,
                              const BatchInputs& inputs,
                              std::uint64_t worker_id, OpCounter& counter,
                              OpCounter* gap_counter = nullptr);

WorkerProduct rook_worker(const PrimeField& field, const WorkerShare& share,
                          OpCounter& counter);

/// Uses the first L = |P+Q| products in the given order. If that system is
/// singular and an (L+1)-th product exists, retries once with it in place
/// of the L-th. Throws Error(kNotEnoughProducts), Error(kSingularAfterRetry)
/// or Error(kDuplicateEvaluationPoint).
DecodeResult rook_decode(const RookScheme& scheme,
                         std::span<const WorkerProduct> products,
                         OpCounter& counter);

}  // namespace rookcodes
