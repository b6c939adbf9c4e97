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

#include "rookcodes/coding.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "rookcodes/errors.hpp"

namespace rookcodes {

Dims validate_inputs(const BatchInputs& inputs) {
  if (inputs.a.empty()) fail(ErrorCode::kDimensionMismatch, "empty batch");
  if (inputs.a.size() != inputs.b.size()) {
    fail(ErrorCode::kDimensionMismatch,
         std::to_string(inputs.a.size()) + " A blocks but " +
             std::to_string(inputs.b.size()) + " B blocks");
  }
  const Dims dims{inputs.a[0].rows(), inputs.a[0].cols(), inputs.b[0].cols()};
  for (std::size_t i = 0; i < inputs.a.size(); ++i) {
    const auto& a = inputs.a[i];
    const auto& b = inputs.b[i];
    if (a.rows() != dims.rows || a.cols() != dims.inner ||
        b.rows() != dims.inner || b.cols() != dims.cols) {
      fail(ErrorCode::kDimensionMismatch,
           "pair " + std::to_string(i) + " does not match the shape of pair 0");
    }
  }
  return dims;
}

BatchInputs random_inputs(const PrimeField& field, std::size_t n,
                          const Dims& dims, RandomStream& stream) {
  BatchInputs inputs;
  inputs.a.reserve(n);
  inputs.b.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    inputs.a.push_back(mat_random(field, dims.rows, dims.inner, stream));
    inputs.b.push_back(mat_random(field, dims.inner, dims.cols, stream));
  }
  return inputs;
}

std::vector<FieldMatrix> direct_products(const PrimeField& field,
                                         const BatchInputs& inputs,
                                         OpCounter& counter) {
  validate_inputs(inputs);
  std::vector<FieldMatrix> out;
  out.reserve(inputs.n());
  for (std::size_t i = 0; i < inputs.n(); ++i) {
    out.push_back(mat_mul(field, inputs.a[i], inputs.b[i], counter));
  }
  return out;
}

WorkerProduct worker_compute(const PrimeField& field, const WorkerShare& share,
                             OpCounter& counter) {
  return WorkerProduct{share.worker_id, share.x,
                       mat_mul(field, share.a, share.b, counter)};
}

std::vector<Fe> distinct_points(const PrimeField& field, std::size_t count,
                                std::span<const Fe> excluded,
                                RandomStream& stream) {
  std::unordered_set<std::uint64_t> taken;
  taken.insert(0);
  for (Fe e : excluded) taken.insert(e.v);
  if (field.modulus() < taken.size() || field.modulus() - taken.size() < count) {
    fail(ErrorCode::kConfigInvalid,
         "field of size " + std::to_string(field.modulus()) + " has fewer than " +
             std::to_string(count) + " usable evaluation points");
  }
  std::vector<Fe> points;
  points.reserve(count);
  while (points.size() < count) {
    const std::uint64_t v = stream.below(field.modulus());
    if (taken.insert(v).second) points.push_back(Fe{v});
  }
  return points;
}

void require_distinct_points(std::span<const WorkerProduct> products) {
  std::vector<std::uint64_t> xs;
  xs.reserve(products.size());
  for (const auto& p : products) xs.push_back(p.x.v);
  std::sort(xs.begin(), xs.end());
  const auto dup = std::adjacent_find(xs.begin(), xs.end());
  if (dup != xs.end()) {
    fail(ErrorCode::kDuplicateEvaluationPoint,
         "evaluation point " + std::to_string(*dup) + " appears twice");
  }
}

}  // namespace rookcodes
