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

#include "rookcodes/field.hpp"
#include "rookcodes/matrix.hpp"

namespace rookcodes {

/// The n input pairs (A_i, B_i). All A_i are rows x inner and all B_i are
/// inner x cols.
struct BatchInputs {
  std::vector<FieldMatrix> a;
  std::vector<FieldMatrix> b;

  std::size_t n() const { return a.size(); }
};

struct Dims {
  std::size_t rows = 1;   // rows of A_i
  std::size_t inner = 1;  // cols of A_i, rows of B_i
  std::size_t cols = 1;   // cols of B_i

  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Throws Error(kDimensionMismatch) unless the batch is non-empty and
/// uniformly shaped.
Dims validate_inputs(const BatchInputs& inputs);

BatchInputs random_inputs(const PrimeField& field, std::size_t n,
                          const Dims& dims, RandomStream& stream);

/// Direct products A_i * B_i; the reference every decoder is checked
/// against.
std::vector<FieldMatrix> direct_products(const PrimeField& field,
                                         const BatchInputs& inputs,
                                         OpCounter& counter);

/// What the master sends to one worker.
struct WorkerShare {
  std::uint64_t worker_id = 0;
  Fe x;
  FieldMatrix a;
  FieldMatrix b;
};

/// What a worker sends back: E = share.a * share.b.
struct WorkerProduct {
  std::uint64_t worker_id = 0;
  Fe x;
  FieldMatrix e;
};

/// The worker step shared by every scheme.
WorkerProduct worker_compute(const PrimeField& field, const WorkerShare& share,
                             OpCounter& counter);

struct DecodeResult {
  std::vector<FieldMatrix> products;  // A_k * B_k for k in [n]
  std::size_t responses_used = 0;
  bool retried = false;  // the singular-matrix substitution path ran
};

/// Distinct nonzero field elements avoiding `excluded`, drawn from stream.
/// Throws Error(kConfigInvalid) if the field is too small.
std::vector<Fe> distinct_points(const PrimeField& field, std::size_t count,
                                std::span<const Fe> excluded,
                                RandomStream& stream);

/// Throws Error(kDuplicateEvaluationPoint) if two products share an x.
void require_distinct_points(std::span<const WorkerProduct> products);

}  // namespace rookcodes
