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
#include <string>
#include <vector>

#include "rookcodes/scheme.hpp"
#include "rookcodes/sim.hpp"

namespace rookcodes {

struct SweepOptions {
  SimConfig base;  // descriptor.kind and n are overwritten per row
  std::vector<std::size_t> n_values;
  std::vector<SchemeKind> schemes;
  std::size_t trials = 1;
  std::size_t spare_workers = 4;  // used when base.workers == 0
};

struct SweepRow {
  std::string scheme;
  std::size_t n = 0;
  std::string trial;  // trial index, or "mean" on aggregate rows
  double threshold = 0;
  double responses_used = 0;
  double encode_muls = 0;
  double encode_invs = 0;
  double worker_muls = 0;
  double decode_time = 0;  // decode_muls + decode_invs
  double success = 0;
  double verified = 0;
};

/// One row per (scheme, n, trial) followed by a "mean" row per (scheme, n).
std::vector<SweepRow> sweep(const SweepOptions& options);

inline constexpr const char* kSweepCsvHeader =
    "scheme,n,trial,threshold,responses_used,encode_muls,encode_invs,"
    "worker_muls,decode_time,success,verified";

std::string sweep_csv(std::span<const SweepRow> rows);

struct DeltaRow {
  std::size_t n = 0;
  std::uint64_t delta_muls = 0;
  double ratio = 0;  // delta_muls / (n sqrt(log2 n)); raw count when n == 1
};

/// Gap-power multiplication counts of the Behrend exponents for each n.
std::vector<DeltaRow> bench_delta(std::span<const std::size_t> n_values);

/// Multiplications gap_powers spends on P and Q (Q skipped when P == Q).
std::uint64_t gap_power_muls(const ExponentPair& pair);

inline constexpr const char* kDeltaCsvHeader = "n,delta_muls,ratio";

std::string bench_delta_csv(std::span<const DeltaRow> rows);

}  // namespace rookcodes
