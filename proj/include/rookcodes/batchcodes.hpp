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

#include "rookcodes/coding.hpp"
#include "rookcodes/field.hpp"

namespace rookcodes {

// Lagrange coded computing. A~ and B~ interpolate the inputs at anchors z_i,
// so (A~ B~)(z_i) = A_i B_i and the product has degree 2n-2.
class LccScheme {
 public:
  /// Throws Error(kConfigInvalid) on repeated anchors or points.
  LccScheme(PrimeField field, std::vector<Fe> anchors,
            std::vector<Fe> eval_points);

  /// Anchors 1..n, evaluation points random nonzero and off the anchors.
  static LccScheme with_default_anchors(PrimeField field, std::size_t n,
                                        std::size_t workers,
                                        RandomStream& stream);

  const PrimeField& field() const { return field_; }
  std::span<const Fe> anchors() const { return anchors_; }
  std::span<const Fe> eval_points() const { return eval_points_; }
  std::size_t n() const { return anchors_.size(); }
  std::size_t recovery_threshold() const { return 2 * n() - 1; }

 private:
  PrimeField field_;
  std::vector<Fe> anchors_;
  std::vector<Fe> eval_points_;
};

/// Lagrange basis values l_i(x); one inversion per basis polynomial.
std::vector<Fe> lagrange_basis_at(const PrimeField& field,
                                  std::span<const Fe> nodes, Fe x,
                                  OpCounter& counter);

WorkerShare lcc_encode_at(const LccScheme& scheme, const BatchInputs& inputs,
                          Fe x, OpCounter& counter);
WorkerShare lcc_encode_share(const LccScheme& scheme, const BatchInputs& inputs,
                             std::uint64_t worker_id, OpCounter& counter);

/// Interpolates from the first 2n-1 products and evaluates at each anchor.
DecodeResult lcc_decode(const LccScheme& scheme,
                        std::span<const WorkerProduct> products,
                        OpCounter& counter);

// Cross subspace alignment.
//   A~(x) = f(x) sum_i A_i / (z_i - x),  B~(x) = sum_i B_i / (z_i - x),
//   f(x) = prod_i (z_i - x),
// so A~ B~ = sum_i c_i A_i B_i / (z_i - x) + (polynomial of degree n-2) with
// c_i = prod_{k != i} (z_k - z_i).
class CsaScheme {
 public:
  /// Throws Error(kConfigInvalid) on repeated anchors or points, or if an
  /// evaluation point coincides with an anchor.
  CsaScheme(PrimeField field, std::vector<Fe> anchors,
            std::vector<Fe> eval_points);

  static CsaScheme with_default_anchors(PrimeField field, std::size_t n,
                                        std::size_t workers,
                                        RandomStream& stream);

  const PrimeField& field() const { return field_; }
  std::span<const Fe> anchors() const { return anchors_; }
  std::span<const Fe> eval_points() const { return eval_points_; }
  std::span<const Fe> residues() const { return residues_; }
  std::size_t n() const { return anchors_.size(); }
  std::size_t recovery_threshold() const { return 2 * n() - 1; }

 private:
  PrimeField field_;
  std::vector<Fe> anchors_;
  std::vector<Fe> eval_points_;
  std::vector<Fe> residues_;
};

/// c_i = prod_{k != i} (z_k - z_i).
std::vector<Fe> csa_residues(const PrimeField& field, std::span<const Fe> anchors);

/// Throws Error(kPoleEvaluation) if x is an anchor.
WorkerShare csa_encode_at(const CsaScheme& scheme, const BatchInputs& inputs,
                          Fe x, OpCounter& counter);
WorkerShare csa_encode_share(const CsaScheme& scheme, const BatchInputs& inputs,
                             std::uint64_t worker_id, OpCounter& counter);

/// Solves for the pole coefficients c_i A_i B_i and the n-1 noise blocks
/// from the first 2n-1 products, then divides out c_i.
DecodeResult csa_decode(const CsaScheme& scheme,
                        std::span<const WorkerProduct> products,
                        OpCounter& counter);

// Replication: each pair goes to `lambda` workers, worker w handling pair
// w / lambda.
class ReplicationScheme {
 public:
  ReplicationScheme(std::size_t n, std::size_t lambda);

  std::size_t n() const { return n_; }
  std::size_t lambda() const { return lambda_; }
  std::size_t workers() const { return n_ * lambda_; }
  std::size_t pair_of(std::uint64_t worker_id) const { return worker_id / lambda_; }
  /// Worst case: (n-1)*lambda + 1 = m - lambda + 1.
  std::size_t recovery_threshold() const { return workers() - lambda_ + 1; }

 private:
  std::size_t n_;
  std::size_t lambda_;
};

WorkerShare replication_share(const ReplicationScheme& scheme,
                              const BatchInputs& inputs,
                              std::uint64_t worker_id);

/// Collects one product per pair from the responders, in order. Throws
/// Error(kUncoveredPair) if some pair has no responder.
DecodeResult replication_collect(const ReplicationScheme& scheme,
                                 std::span<const WorkerProduct> products);

/// Runs the whole replicated batch with only `alive_workers` responding.
std::vector<FieldMatrix> replication_run(const PrimeField& field,
                                         const BatchInputs& inputs,
                                         std::size_t lambda,
                                         std::span<const std::uint64_t> alive_workers,
                                         OpCounter& counter);

}  // namespace rookcodes
