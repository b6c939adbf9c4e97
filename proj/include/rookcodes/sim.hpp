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
#include <string>
#include <vector>

#include "rookcodes/coding.hpp"
#include "rookcodes/field.hpp"
#include "rookcodes/scheme.hpp"

namespace rookcodes {

/// Fail-stop workers plus exponential straggling. A worker that does not
/// fail responds at base_delay * rows*inner*cols + Exp(straggle_mean).
struct FaultModel {
  double fail_prob = 0.0;
  double straggle_mean = 1.0;
  double base_delay = 1.0;
};

enum class EncodeAt { kMaster, kWorkers };

std::string_view encode_at_name(EncodeAt where);
EncodeAt parse_encode_at(std::string_view name);

struct SimConfig {
  SchemeDescriptor descriptor;
  std::size_t workers = 0;  // 0: threshold + 4 (replication: lambda * n)
  Dims dims;
  std::uint64_t seed = 1;
  EncodeAt encode_at = EncodeAt::kMaster;
  FaultModel fault;
  std::uint64_t modulus = PrimeField::kMersenne61;
  /// Workers forced to fail in addition to the sampled failures.
  std::vector<std::uint64_t> forced_failures;
  /// Encode/compute parallelism. Results do not depend on it.
  std::size_t threads = 1;
};

struct SimReport {
  std::string scheme;
  std::size_t n = 0;
  std::size_t workers = 0;
  std::string encode_at;
  bool success = false;
  std::string error;  // empty on success, else an error code name
  std::size_t responses_received = 0;
  std::size_t responses_used = 0;
  std::vector<std::uint64_t> failed_workers;
  std::size_t threshold = 0;
  std::uint64_t encode_muls = 0;
  std::uint64_t encode_invs = 0;
  std::uint64_t encode_gap_muls = 0;  // rook only: the gap-power share
  std::uint64_t worker_muls = 0;  // includes encoding when encode_at=workers
  std::uint64_t decode_muls = 0;
  std::uint64_t decode_invs = 0;
  std::size_t decode_attempts = 0;
  std::size_t singular_retries = 0;
  double wallclock_sim_units = 0.0;
  bool verified = false;
  std::vector<std::string> warnings;

  friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Resolves workers == 0 and validates the configuration. Throws
/// Error(kConfigInvalid).
SimConfig normalize_config(const SimConfig& config);

/// One seeded run. Configuration problems throw Error(kConfigInvalid); an
/// undecodable run is reported with success = false.
SimReport run_simulation(const SimConfig& config);

}  // namespace rookcodes
