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

#include "rookcodes/sim.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <utility>

#include "rookcodes/errors.hpp"

namespace rookcodes {
namespace {

struct WorkerOutcome {
  bool failed = false;
  double finish_time = 0.0;
  OpCounter encode;
  OpCounter gaps;
  OpCounter compute;
  std::optional<WorkerProduct> product;
};

template <typename F>
void parallel_for(std::size_t count, std::size_t threads, F&& body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

bool finite_nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

std::string_view encode_at_name(EncodeAt where) {
  return where == EncodeAt::kMaster ? "master" : "workers";
}

EncodeAt parse_encode_at(std::string_view name) {
  if (name == "master") return EncodeAt::kMaster;
  if (name == "workers") return EncodeAt::kWorkers;
  fail(ErrorCode::kConfigInvalid,
       "encode-at must be 'master' or 'workers', got '" + std::string(name) + "'");
}

SimConfig normalize_config(const SimConfig& config) {
  SimConfig c = config;
  const auto& f = c.fault;
  if (!(f.fail_prob >= 0.0 && f.fail_prob <= 1.0)) {
    fail(ErrorCode::kConfigInvalid, "fail probability must lie in [0, 1]");
  }
  if (!finite_nonnegative(f.straggle_mean) || !finite_nonnegative(f.base_delay)) {
    fail(ErrorCode::kConfigInvalid, "delays must be finite and non-negative");
  }
  if (c.dims.rows == 0 || c.dims.inner == 0 || c.dims.cols == 0) {
    fail(ErrorCode::kConfigInvalid, "matrix dimensions must be positive");
  }
  if (c.descriptor.n == 0) fail(ErrorCode::kConfigInvalid, "n must be at least 1");
  if (c.descriptor.kind == SchemeKind::kReplication && c.descriptor.lambda == 0) {
    fail(ErrorCode::kConfigInvalid, "lambda must be at least 1");
  }
  if (c.workers == 0) {
    c.workers = c.descriptor.kind == SchemeKind::kReplication
                    ? c.descriptor.n * c.descriptor.lambda
                    : scheme_threshold(c.descriptor) + 4;
  }
  if (c.threads == 0) c.threads = 1;
  for (std::uint64_t w : c.forced_failures) {
    if (w >= c.workers) {
      fail(ErrorCode::kConfigInvalid,
           "forced failure of worker " + std::to_string(w) + " but only " +
               std::to_string(c.workers) + " workers");
    }
  }
  return c;
}

SimReport run_simulation(const SimConfig& raw) {
  const SimConfig config = normalize_config(raw);
  std::optional<PrimeField> maybe_field;
  try {
    maybe_field.emplace(config.modulus);
  } catch (const Error& e) {
    fail(ErrorCode::kConfigInvalid, e.what());
  }
  const PrimeField& field = *maybe_field;
  const BoundScheme scheme =
      BoundScheme::bind(config.descriptor, field, config.workers, config.seed);
  const std::size_t n = config.descriptor.n;
  const std::size_t m = config.workers;

  SimReport report;
  report.scheme = std::string(scheme_kind_name(config.descriptor.kind));
  report.n = n;
  report.workers = m;
  report.encode_at = std::string(encode_at_name(config.encode_at));
  report.threshold = scheme.threshold();
  if (m < scheme.threshold()) {
    report.warnings.push_back("workers (" + std::to_string(m) +
                              ") below the recovery threshold (" +
                              std::to_string(scheme.threshold()) + ")");
  }

  RandomStream input_stream(config.seed, stream_key::kInputs);
  const BatchInputs inputs = random_inputs(field, n, config.dims, input_stream);

  std::vector<bool> forced(m, false);
  for (std::uint64_t w : config.forced_failures) forced[w] = true;

  const double work = static_cast<double>(config.dims.rows) *
                      static_cast<double>(config.dims.inner) *
                      static_cast<double>(config.dims.cols);
  std::vector<WorkerOutcome> outcomes(m);
  parallel_for(m, config.threads, [&](std::size_t w) {
    WorkerOutcome& out = outcomes[w];
    RandomStream stream(config.seed, stream_key::kWorkerBase + w);
    const bool sampled_failure = stream.unit() < config.fault.fail_prob;
    out.failed = sampled_failure || forced[w];
    out.finish_time = config.fault.base_delay * work +
                      stream.exponential(config.fault.straggle_mean);
    WorkerShare share = scheme.encode(inputs, w, out.encode, &out.gaps);
    if (!out.failed) out.product = worker_compute(field, share, out.compute);
  });

  std::vector<std::size_t> order;
  for (std::size_t w = 0; w < m; ++w) {
    report.encode_muls += outcomes[w].encode.muls;
    report.encode_invs += outcomes[w].encode.invs;
    report.encode_gap_muls += outcomes[w].gaps.muls;
    if (outcomes[w].failed) {
      report.failed_workers.push_back(w);
      continue;
    }
    report.worker_muls += outcomes[w].compute.muls;
    if (config.encode_at == EncodeAt::kWorkers) {
      report.worker_muls += outcomes[w].encode.muls;
    }
    order.push_back(w);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (outcomes[a].finish_time != outcomes[b].finish_time) {
      return outcomes[a].finish_time < outcomes[b].finish_time;
    }
    return a < b;
  });

  OpCounter decode_counter;
  std::vector<WorkerProduct> arrived;
  arrived.reserve(order.size());
  std::optional<ErrorCode> last_error;
  for (std::size_t w : order) {
    arrived.push_back(*outcomes[w].product);
    report.wallclock_sim_units = outcomes[w].finish_time;
    if (arrived.size() < scheme.min_responses()) continue;
    ++report.decode_attempts;
    try {
      DecodeResult result = scheme.decode(arrived, decode_counter);
      report.success = true;
      report.responses_used = result.responses_used;
      if (result.retried) ++report.singular_retries;
      OpCounter oracle_counter;
      report.verified = result.products == direct_products(field, inputs, oracle_counter);
      break;
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::kSingularMatrix:
        case ErrorCode::kSingularAfterRetry:
        case ErrorCode::kUncoveredPair:
        case ErrorCode::kNotEnoughProducts:
          last_error = e.code();
          break;
        default:
          throw;
      }
    }
  }
  report.responses_received = arrived.size();
  report.decode_muls = decode_counter.muls;
  report.decode_invs = decode_counter.invs;
  if (!report.success) {
    const bool short_of_responses =
        order.size() < scheme.min_responses() || !last_error;
    report.error = short_of_responses ? "InsufficientWorkers"
                                      : std::string(error_code_name(*last_error));
  }
  return report;
}

}  // namespace rookcodes
