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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "rookcodes/batchcodes.hpp"
#include "rookcodes/coding.hpp"
#include "rookcodes/exponents.hpp"
#include "rookcodes/rook.hpp"

namespace rookcodes {

enum class SchemeKind {
  kRookPoly,
  kRookBase3,
  kRookBehrend,
  kLcc,
  kCsa,
  kReplication,
};

/// "rook-poly", "rook-base3", ... Throws Error(kInvalidArgument) on
/// unknown names.
SchemeKind parse_scheme_kind(std::string_view name);
std::string_view scheme_kind_name(SchemeKind kind);
bool is_rook(SchemeKind kind);

struct SchemeDescriptor {
  SchemeKind kind = SchemeKind::kRookBase3;
  std::size_t n = 1;
  std::size_t lambda = 2;  // replication only
  /// Rook only. Filled in from the construction when absent; when present
  /// it overrides the construction.
  std::optional<ExponentPair> exponents;
};

/// The exponent pair a rook descriptor resolves to.
ExponentPair resolve_exponents(const SchemeDescriptor& descriptor);

/// rook: |P+Q|; lcc, csa: 2n-1; replication: m - lambda + 1.
std::size_t scheme_threshold(const SchemeDescriptor& descriptor);

/// A descriptor bound to a field, a worker count and a seed: evaluation
/// points are fixed and every scheme exposes the same encode / decode
/// surface.
class BoundScheme {
 public:
  /// Throws Error(kConfigInvalid) if the scheme cannot be realised over the
  /// field with `workers` evaluation points.
  static BoundScheme bind(const SchemeDescriptor& descriptor,
                          const PrimeField& field, std::size_t workers,
                          std::uint64_t seed);

  const SchemeDescriptor& descriptor() const { return descriptor_; }
  const PrimeField& field() const { return field_; }
  std::size_t workers() const { return workers_; }
  std::size_t threshold() const { return threshold_; }
  /// Fewest responses that could possibly decode: the threshold for the
  /// coded schemes, n for replication.
  std::size_t min_responses() const;

  WorkerShare encode(const BatchInputs& inputs, std::uint64_t worker_id,
                     OpCounter& counter, OpCounter* gap_counter = nullptr) const;
  DecodeResult decode(std::span<const WorkerProduct> products,
                      OpCounter& counter) const;

  const RookScheme* rook() const { return std::get_if<RookScheme>(&impl_); }

 private:
  using Impl = std::variant<RookScheme, LccScheme, CsaScheme, ReplicationScheme>;
  BoundScheme(SchemeDescriptor descriptor, PrimeField field,
              std::size_t workers, Impl impl);

  SchemeDescriptor descriptor_;
  PrimeField field_;
  std::size_t workers_;
  std::size_t threshold_;
  Impl impl_;
};

}  // namespace rookcodes
