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

#include <string>
#include <vector>

#include "rookcodes/batchcodes.hpp"
#include "rookcodes/errors.hpp"

namespace rookcodes {

ReplicationScheme::ReplicationScheme(std::size_t n, std::size_t lambda)
    : n_(n), lambda_(lambda) {
  if (n == 0 || lambda == 0) {
    fail(ErrorCode::kConfigInvalid, "replication needs n >= 1 and lambda >= 1");
  }
}

WorkerShare replication_share(const ReplicationScheme& scheme,
                              const BatchInputs& inputs,
                              std::uint64_t worker_id) {
  validate_inputs(inputs);
  if (inputs.n() != scheme.n()) {
    fail(ErrorCode::kDimensionMismatch, "batch size does not match the scheme");
  }
  if (worker_id >= scheme.workers()) {
    fail(ErrorCode::kInvalidArgument,
         "worker " + std::to_string(worker_id) + " out of range");
  }
  const std::size_t pair = scheme.pair_of(worker_id);
  // x only labels the response; replication never interpolates.
  return WorkerShare{worker_id, Fe{worker_id + 1}, inputs.a[pair], inputs.b[pair]};
}

DecodeResult replication_collect(const ReplicationScheme& scheme,
                                 std::span<const WorkerProduct> products) {
  std::vector<const WorkerProduct*> first(scheme.n(), nullptr);
  for (const auto& product : products) {
    if (product.worker_id >= scheme.workers()) {
      fail(ErrorCode::kInvalidArgument,
           "response from unknown worker " + std::to_string(product.worker_id));
    }
    auto& slot = first[scheme.pair_of(product.worker_id)];
    if (slot == nullptr) slot = &product;
  }
  DecodeResult result;
  for (std::size_t i = 0; i < scheme.n(); ++i) {
    if (first[i] == nullptr) {
      fail(ErrorCode::kUncoveredPair,
           "all " + std::to_string(scheme.lambda()) + " replicas of pair " +
               std::to_string(i) + " are missing");
    }
    result.products.push_back(first[i]->e);
  }
  result.responses_used = scheme.n();
  return result;
}

std::vector<FieldMatrix> replication_run(const PrimeField& field,
                                         const BatchInputs& inputs,
                                         std::size_t lambda,
                                         std::span<const std::uint64_t> alive_workers,
                                         OpCounter& counter) {
  const ReplicationScheme scheme(inputs.n(), lambda);
  std::vector<WorkerProduct> products;
  products.reserve(alive_workers.size());
  for (std::uint64_t w : alive_workers) {
    products.push_back(
        worker_compute(field, replication_share(scheme, inputs, w), counter));
  }
  return replication_collect(scheme, products).products;
}

}  // namespace rookcodes
