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
#include <string>
#include <utility>

#include "rookcodes/batchcodes.hpp"
#include "rookcodes/errors.hpp"

namespace rookcodes {
namespace {

void check_distinct(std::span<const Fe> values, const char* what) {
  std::vector<Fe> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::kConfigInvalid, std::string(what) + " are not distinct");
  }
}

std::vector<Fe> default_anchors(const PrimeField& field, std::size_t n) {
  if (n == 0) fail(ErrorCode::kConfigInvalid, "n must be at least 1");
  if (field.modulus() <= n) {
    fail(ErrorCode::kConfigInvalid, "field too small for the anchors");
  }
  std::vector<Fe> anchors(n);
  for (std::size_t i = 0; i < n; ++i) anchors[i] = Fe{i + 1};
  return anchors;
}

FieldMatrix combine(const PrimeField& field, std::span<const Fe> weights,
                    const std::vector<FieldMatrix>& blocks, OpCounter& counter) {
  FieldMatrix acc(blocks[0].rows(), blocks[0].cols());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    mat_axpy(field, weights[i], blocks[i], acc, counter);
  }
  return acc;
}

}  // namespace

LccScheme::LccScheme(PrimeField field, std::vector<Fe> anchors,
                     std::vector<Fe> eval_points)
    : field_(field),
      anchors_(std::move(anchors)),
      eval_points_(std::move(eval_points)) {
  if (anchors_.empty()) fail(ErrorCode::kConfigInvalid, "no anchors");
  check_distinct(anchors_, "anchors");
  check_distinct(eval_points_, "evaluation points");
  if (field_.modulus() < 2 * anchors_.size() - 1) {
    fail(ErrorCode::kConfigInvalid, "field smaller than 2n-1");
  }
}

LccScheme LccScheme::with_default_anchors(PrimeField field, std::size_t n,
                                          std::size_t workers,
                                          RandomStream& stream) {
  auto anchors = default_anchors(field, n);
  auto points = distinct_points(field, workers, anchors, stream);
  return LccScheme(field, std::move(anchors), std::move(points));
}

std::vector<Fe> lagrange_basis_at(const PrimeField& field,
                                  std::span<const Fe> nodes, Fe x,
                                  OpCounter& counter) {
  const std::size_t n = nodes.size();
  std::vector<Fe> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    Fe num = field.one();
    Fe den = field.one();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      num = field.mul(num, field.sub(x, nodes[j]));
      den = field.mul(den, field.sub(nodes[i], nodes[j]));
    }
    basis[i] = field.mul(num, field.inv(den, counter));
    counter.muls += 2 * (n - 1) + 1;
    counter.adds += 2 * (n - 1);
  }
  return basis;
}

WorkerShare lcc_encode_at(const LccScheme& scheme, const BatchInputs& inputs,
                          Fe x, OpCounter& counter) {
  validate_inputs(inputs);
  if (inputs.n() != scheme.n()) {
    fail(ErrorCode::kDimensionMismatch, "batch size does not match the scheme");
  }
  const auto basis = lagrange_basis_at(scheme.field(), scheme.anchors(), x, counter);
  WorkerShare share;
  share.x = x;
  share.a = combine(scheme.field(), basis, inputs.a, counter);
  share.b = combine(scheme.field(), basis, inputs.b, counter);
  return share;
}

WorkerShare lcc_encode_share(const LccScheme& scheme, const BatchInputs& inputs,
                             std::uint64_t worker_id, OpCounter& counter) {
  if (worker_id >= scheme.eval_points().size()) {
    fail(ErrorCode::kInvalidArgument, "worker out of range");
  }
  WorkerShare share =
      lcc_encode_at(scheme, inputs, scheme.eval_points()[worker_id], counter);
  share.worker_id = worker_id;
  return share;
}

DecodeResult lcc_decode(const LccScheme& scheme,
                        std::span<const WorkerProduct> products,
                        OpCounter& counter) {
  const auto& field = scheme.field();
  const std::size_t t = scheme.recovery_threshold();
  if (products.size() < t) {
    fail(ErrorCode::kNotEnoughProducts,
         "need " + std::to_string(t) + " products, have " +
             std::to_string(products.size()));
  }
  const auto used = products.first(t);
  require_distinct_points(used);

  std::vector<Fe> nodes(t);
  std::vector<FieldMatrix> values(t);
  for (std::size_t w = 0; w < t; ++w) {
    nodes[w] = used[w].x;
    values[w] = used[w].e;
  }

  DecodeResult result;
  result.responses_used = t;
  for (Fe z : scheme.anchors()) {
    const auto basis = lagrange_basis_at(field, nodes, z, counter);
    result.products.push_back(combine(field, basis, values, counter));
  }
  return result;
}

}  // namespace rookcodes
