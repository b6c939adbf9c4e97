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

#include <cstdint>
#include <random>

namespace rookcodes {

/// Stream keys. Worker w draws from kWorkerBase + w so per-worker draws do
/// not depend on how many other streams were consumed or in which order.
namespace stream_key {
inline constexpr std::uint64_t kInputs = 1;
inline constexpr std::uint64_t kEvalPoints = 2;
inline constexpr std::uint64_t kTrials = 3;
inline constexpr std::uint64_t kWorkerBase = std::uint64_t{1} << 32;
}  // namespace stream_key

/// Deterministic pseudo-random stream identified by (seed, key). Built on
/// mt19937_64, whose output sequence is fixed by the standard, and does its
/// own range reduction so draws are identical across standard libraries.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t key);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

  /// Exponential variate with the given mean (0 when mean == 0).
  double exponential(double mean);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key);

}  // namespace rookcodes
