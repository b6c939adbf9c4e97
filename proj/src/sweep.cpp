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

#include "rookcodes/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "rookcodes/exponents.hpp"
#include "rookcodes/random.hpp"
#include "rookcodes/rook.hpp"

namespace rookcodes {
namespace {

std::string format_number(double v) {
  if (std::floor(v) == v && std::fabs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepOptions& options) {
  std::vector<SweepRow> rows;
  for (SchemeKind kind : options.schemes) {
    for (std::size_t n : options.n_values) {
      SimConfig config = options.base;
      config.descriptor.kind = kind;
      config.descriptor.n = n;
      config.descriptor.exponents.reset();
      if (config.workers == 0) {
        config.workers = kind == SchemeKind::kReplication
                             ? n * config.descriptor.lambda
                             : scheme_threshold(config.descriptor) +
                                   options.spare_workers;
      }

      SweepRow mean;
      mean.scheme = std::string(scheme_kind_name(kind));
      mean.n = n;
      mean.trial = "mean";
      for (std::size_t t = 0; t < options.trials; ++t) {
        SimConfig trial_config = config;
        trial_config.seed = mix_seed(options.base.seed, stream_key::kTrials + t);
        const SimReport r = run_simulation(trial_config);
        SweepRow row;
        row.scheme = mean.scheme;
        row.n = n;
        row.trial = std::to_string(t);
        row.threshold = static_cast<double>(r.threshold);
        row.responses_used = static_cast<double>(r.responses_used);
        row.encode_muls = static_cast<double>(r.encode_muls);
        row.encode_invs = static_cast<double>(r.encode_invs);
        row.worker_muls = static_cast<double>(r.worker_muls);
        row.decode_time = static_cast<double>(r.decode_muls + r.decode_invs);
        row.success = r.success ? 1 : 0;
        row.verified = r.verified ? 1 : 0;
        rows.push_back(row);

        mean.threshold += row.threshold;
        mean.responses_used += row.responses_used;
        mean.encode_muls += row.encode_muls;
        mean.encode_invs += row.encode_invs;
        mean.worker_muls += row.worker_muls;
        mean.decode_time += row.decode_time;
        mean.success += row.success;
        mean.verified += row.verified;
      }
      if (options.trials > 0) {
        const double k = static_cast<double>(options.trials);
        for (double* field : {&mean.threshold, &mean.responses_used,
                              &mean.encode_muls, &mean.encode_invs,
                              &mean.worker_muls, &mean.decode_time,
                              &mean.success, &mean.verified}) {
          *field /= k;
        }
        rows.push_back(mean);
      }
    }
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.scheme << ',' << r.n << ',' << r.trial << ','
        << format_number(r.threshold) << ',' << format_number(r.responses_used)
        << ',' << format_number(r.encode_muls) << ','
        << format_number(r.encode_invs) << ',' << format_number(r.worker_muls)
        << ',' << format_number(r.decode_time) << ','
        << format_number(r.success) << ',' << format_number(r.verified) << '\n';
  }
  return out.str();
}

std::uint64_t gap_power_muls(const ExponentPair& pair) {
  // The count depends only on the exponent bits, not on the point.
  const PrimeField field;
  const Fe x{3};
  OpCounter counter;
  gap_powers(field, pair.p(), x, counter);
  if (!pair.symmetric()) gap_powers(field, pair.q(), x, counter);
  return counter.muls;
}

std::vector<DeltaRow> bench_delta(std::span<const std::size_t> n_values) {
  std::vector<DeltaRow> rows;
  rows.reserve(n_values.size());
  for (std::size_t n : n_values) {
    DeltaRow row;
    row.n = n;
    row.delta_muls = gap_power_muls(behrend_exponents(n));
    const double log_n = std::log2(static_cast<double>(n));
    row.ratio = n <= 1 ? static_cast<double>(row.delta_muls)
                       : static_cast<double>(row.delta_muls) /
                             (static_cast<double>(n) * std::sqrt(log_n));
    rows.push_back(row);
  }
  return rows;
}

std::string bench_delta_csv(std::span<const DeltaRow> rows) {
  std::ostringstream out;
  out << kDeltaCsvHeader << '\n';
  for (const auto& r : rows) {
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
    out << r.n << ',' << r.delta_muls << ',' << ratio << '\n';
  }
  return out.str();
}

}  // namespace rookcodes
