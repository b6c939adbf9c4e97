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

bool contains(std::span<const Fe> values, Fe x) {
  return std::find(values.begin(), values.end(), x) != values.end();
}

void check_distinct(std::span<const Fe> values, const char* what) {
  std::vector<Fe> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(ErrorCode::kConfigInvalid, std::string(what) + " are not distinct");
  }
}

}  // namespace

CsaScheme::CsaScheme(PrimeField field, std::vector<Fe> anchors,
                     std::vector<Fe> eval_points)
    : field_(field),
      anchors_(std::move(anchors)),
      eval_points_(std::move(eval_points)) {
  if (anchors_.empty()) fail(ErrorCode::kConfigInvalid, "no anchors");
  check_distinct(anchors_, "anchors");
  check_distinct(eval_points_, "evaluation points");
  for (Fe x : eval_points_) {
    if (contains(anchors_, x)) {
      fail(ErrorCode::kConfigInvalid,
           "evaluation point " + std::to_string(x.v) + " is an anchor");
    }
  }
  residues_ = csa_residues(field_, anchors_);
}

CsaScheme CsaScheme::with_default_anchors(PrimeField field, std::size_t n,
                                          std::size_t workers,
                                          RandomStream& stream) {
  if (n == 0) fail(ErrorCode::kConfigInvalid, "n must be at least 1");
  if (field.modulus() <= n) fail(ErrorCode::kConfigInvalid, "field too small");
  std::vector<Fe> anchors(n);
  for (std::size_t i = 0; i < n; ++i) anchors[i] = Fe{i + 1};
  auto points = distinct_points(field, workers, anchors, stream);
  return CsaScheme(field, std::move(anchors), std::move(points));
}

std::vector<Fe> csa_residues(const PrimeField& field, std::span<const Fe> anchors) {
  std::vector<Fe> c(anchors.size(), field.one());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    for (std::size_t k = 0; k < anchors.size(); ++k) {
      if (k != i) c[i] = field.mul(c[i], field.sub(anchors[k], anchors[i]));
    }
  }
  return c;
}

WorkerShare csa_encode_at(const CsaScheme& scheme, const BatchInputs& inputs,
                          Fe x, OpCounter& counter) {
  validate_inputs(inputs);
  if (inputs.n() != scheme.n()) {
    fail(ErrorCode::kDimensionMismatch, "batch size does not match the scheme");
  }
  const auto& field = scheme.field();
  const auto anchors = scheme.anchors();
  if (contains(anchors, x)) {
    fail(ErrorCode::kPoleEvaluation,
         "cannot evaluate at anchor " + std::to_string(x.v));
  }

  // 1 / (z_i - x) and f(x) = prod_i (z_i - x).
  std::vector<Fe> pole(anchors.size());
  Fe f = field.one();
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    const Fe diff = field.sub(anchors[i], x);
    pole[i] = field.inv(diff, counter);
    f = field.mul(f, diff);
  }
  counter.muls += anchors.size();
  counter.adds += anchors.size();

  WorkerShare share;
  share.x = x;
  FieldMatrix a_sum(inputs.a[0].rows(), inputs.a[0].cols());
  FieldMatrix b_sum(inputs.b[0].rows(), inputs.b[0].cols());
  for (std::size_t i = 0; i < anchors.size(); ++i) {
    mat_axpy(field, pole[i], inputs.a[i], a_sum, counter);
    mat_axpy(field, pole[i], inputs.b[i], b_sum, counter);
  }
  share.a = mat_scale(field, f, a_sum, counter);
  share.b = std::move(b_sum);
  return share;
}

WorkerShare csa_encode_share(const CsaScheme& scheme, const BatchInputs& inputs,
                             std::uint64_t worker_id, OpCounter& counter) {
  if (worker_id >= scheme.eval_points().size()) {
    fail(ErrorCode::kInvalidArgument, "worker out of range");
  }
  WorkerShare share =
      csa_encode_at(scheme, inputs, scheme.eval_points()[worker_id], counter);
  share.worker_id = worker_id;
  return share;
}

DecodeResult csa_decode(const CsaScheme& scheme,
                        std::span<const WorkerProduct> products,
                        OpCounter& counter) {
  const auto& field = scheme.field();
  const std::size_t n = scheme.n();
  const std::size_t t = scheme.recovery_threshold();
  if (products.size() < t) {
    fail(ErrorCode::kNotEnoughProducts,
         "need " + std::to_string(t) + " products, have " +
             std::to_string(products.size()));
  }
  const auto used = products.first(t);
  require_distinct_points(used);

  // Columns: 1/(z_i - x) for the n poles, then x^j for the n-1 noise terms.
  FieldMatrix v(t, t);
  std::vector<FieldMatrix> rhs;
  rhs.reserve(t);
  for (std::size_t w = 0; w < t; ++w) {
    const Fe x = used[w].x;
    if (contains(scheme.anchors(), x)) {
      fail(ErrorCode::kPoleEvaluation,
           "product evaluated at anchor " + std::to_string(x.v));
    }
    for (std::size_t i = 0; i < n; ++i) {
      v(w, i) = field.inv(field.sub(scheme.anchors()[i], x), counter);
    }
    Fe power = field.one();
    for (std::size_t j = 0; j + 1 < n; ++j) {
      v(w, n + j) = power;
      power = field.mul(power, x);
    }
    counter.muls += n - 1;
    rhs.push_back(used[w].e);
  }
  auto solution = solve_linear(field, v, rhs, counter);

  DecodeResult result;
  result.responses_used = t;
  for (std::size_t i = 0; i < n; ++i) {
    const Fe scale = field.inv(scheme.residues()[i], counter);
    result.products.push_back(mat_scale(field, scale, solution[i], counter));
  }
  return result;
}

}  // namespace rookcodes
