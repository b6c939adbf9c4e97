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

#include "rookcodes/scheme.hpp"

#include <string>
#include <utility>

#include "rookcodes/errors.hpp"

namespace rookcodes {

SchemeKind parse_scheme_kind(std::string_view name) {
  if (name == "rook-poly") return SchemeKind::kRookPoly;
  if (name == "rook-base3") return SchemeKind::kRookBase3;
  if (name == "rook-behrend") return SchemeKind::kRookBehrend;
  if (name == "lcc") return SchemeKind::kLcc;
  if (name == "csa") return SchemeKind::kCsa;
  if (name == "replication") return SchemeKind::kReplication;
  fail(ErrorCode::kInvalidArgument, "unknown scheme '" + std::string(name) + "'");
}

std::string_view scheme_kind_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kRookPoly: return "rook-poly";
    case SchemeKind::kRookBase3: return "rook-base3";
    case SchemeKind::kRookBehrend: return "rook-behrend";
    case SchemeKind::kLcc: return "lcc";
    case SchemeKind::kCsa: return "csa";
    case SchemeKind::kReplication: return "replication";
  }
  return "unknown";
}

bool is_rook(SchemeKind kind) {
  return kind == SchemeKind::kRookPoly || kind == SchemeKind::kRookBase3 ||
         kind == SchemeKind::kRookBehrend;
}

ExponentPair resolve_exponents(const SchemeDescriptor& descriptor) {
  if (!is_rook(descriptor.kind)) {
    fail(ErrorCode::kInvalidArgument,
         std::string(scheme_kind_name(descriptor.kind)) + " has no exponents");
  }
  if (descriptor.exponents) {
    if (descriptor.exponents->n() != descriptor.n) {
      fail(ErrorCode::kConfigInvalid, "exponent pair size differs from n");
    }
    return *descriptor.exponents;
  }
  switch (descriptor.kind) {
    case SchemeKind::kRookPoly: return poly_code_exponents(descriptor.n);
    case SchemeKind::kRookBase3: return base3_exponents(descriptor.n);
    default: return behrend_exponents(descriptor.n);
  }
}

std::size_t scheme_threshold(const SchemeDescriptor& descriptor) {
  if (descriptor.n == 0) fail(ErrorCode::kConfigInvalid, "n must be at least 1");
  switch (descriptor.kind) {
    case SchemeKind::kLcc:
    case SchemeKind::kCsa:
      return 2 * descriptor.n - 1;
    case SchemeKind::kReplication:
      return ReplicationScheme(descriptor.n, descriptor.lambda).recovery_threshold();
    default:
      return sum_support(resolve_exponents(descriptor)).size();
  }
}

BoundScheme::BoundScheme(SchemeDescriptor descriptor, PrimeField field,
                         std::size_t workers, Impl impl)
    : descriptor_(std::move(descriptor)),
      field_(field),
      workers_(workers),
      threshold_(0),
      impl_(std::move(impl)) {
  threshold_ = std::visit(
      [](const auto& s) -> std::size_t { return s.recovery_threshold(); }, impl_);
}

BoundScheme BoundScheme::bind(const SchemeDescriptor& descriptor,
                              const PrimeField& field, std::size_t workers,
                              std::uint64_t seed) {
  if (descriptor.n == 0) fail(ErrorCode::kConfigInvalid, "n must be at least 1");
  RandomStream points(seed, stream_key::kEvalPoints);
  SchemeDescriptor resolved = descriptor;
  switch (descriptor.kind) {
    case SchemeKind::kLcc:
      return BoundScheme(resolved, field, workers,
                         LccScheme::with_default_anchors(field, descriptor.n,
                                                         workers, points));
    case SchemeKind::kCsa:
      return BoundScheme(resolved, field, workers,
                         CsaScheme::with_default_anchors(field, descriptor.n,
                                                         workers, points));
    case SchemeKind::kReplication: {
      ReplicationScheme scheme(descriptor.n, descriptor.lambda);
      if (workers != scheme.workers()) {
        fail(ErrorCode::kConfigInvalid,
             "replication with n=" + std::to_string(descriptor.n) +
                 ", lambda=" + std::to_string(descriptor.lambda) + " needs " +
                 std::to_string(scheme.workers()) + " workers, got " +
                 std::to_string(workers));
      }
      return BoundScheme(resolved, field, workers, scheme);
    }
    default: {
      ExponentPair pair = resolve_exponents(descriptor);
      resolved.exponents = pair;
      return BoundScheme(resolved, field, workers,
                         RookScheme::with_random_points(std::move(pair), field,
                                                        workers, points));
    }
  }
}

std::size_t BoundScheme::min_responses() const {
  if (const auto* r = std::get_if<ReplicationScheme>(&impl_)) return r->n();
  return threshold_;
}

WorkerShare BoundScheme::encode(const BatchInputs& inputs,
                                std::uint64_t worker_id, OpCounter& counter,
                                OpCounter* gap_counter) const {
  if (const auto* s = std::get_if<RookScheme>(&impl_)) {
    return rook_encode_share(*s, inputs, worker_id, counter, gap_counter);
  }
  if (const auto* s = std::get_if<LccScheme>(&impl_)) {
    return lcc_encode_share(*s, inputs, worker_id, counter);
  }
  if (const auto* s = std::get_if<CsaScheme>(&impl_)) {
    return csa_encode_share(*s, inputs, worker_id, counter);
  }
  return replication_share(std::get<ReplicationScheme>(impl_), inputs, worker_id);
}

DecodeResult BoundScheme::decode(std::span<const WorkerProduct> products,
                                 OpCounter& counter) const {
  if (const auto* s = std::get_if<RookScheme>(&impl_)) {
    return rook_decode(*s, products, counter);
  }
  if (const auto* s = std::get_if<LccScheme>(&impl_)) {
    return lcc_decode(*s, products, counter);
  }
  if (const auto* s = std::get_if<CsaScheme>(&impl_)) {
    return csa_decode(*s, products, counter);
  }
  return replication_collect(std::get<ReplicationScheme>(impl_), products);
}

}  // namespace rookcodes
