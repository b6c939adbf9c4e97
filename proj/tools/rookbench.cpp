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

// rookbench: exponent generation, checking, threshold search, simulation
// and benchmarks on top of the rookcodes C API.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rookcodes/rookcodes.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitError = 2;

// Raised to unwind to main with exit code 2 and a message.
struct CommandError {
  std::string message;
};

void check(rk_status status, const std::string& context) {
  if (status != RK_OK) {
    throw CommandError{context + ": " + rk_status_name(status) + ": " +
                       rk_last_error()};
  }
}

struct StringDeleter {
  void operator()(char* s) const { rk_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ExponentsDeleter {
  void operator()(rk_exponents* e) const { rk_exponents_free(e); }
};
using OwnedExponents = std::unique_ptr<rk_exponents, ExponentsDeleter>;

struct ReportDeleter {
  void operator()(rk_sim_report* r) const { rk_sim_report_free(r); }
};
using OwnedReport = std::unique_ptr<rk_sim_report, ReportDeleter>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{"cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CommandError{"cannot write " + out_path};
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> values_of(
    const rk_exponents* e) {
  std::vector<std::uint64_t> p(rk_exponents_size(e));
  std::vector<std::uint64_t> q(p.size());
  check(rk_exponents_values(e, p.data(), q.data()), "exponents");
  return {std::move(p), std::move(q)};
}

// Seed precedence: --seed, then ROOKBENCH_SEED, then 1.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ROOKBENCH_SEED"); env != nullptr && *env) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0') throw CommandError{"ROOKBENCH_SEED is not an integer"};
    return value;
  }
  return 1;
}

struct SimFlags {
  std::string scheme = "rook-base3";
  std::uint64_t n = 2;
  std::uint64_t lambda = 2;
  std::uint64_t workers = 0;
  std::uint64_t rows = 1;
  std::uint64_t inner = 1;
  std::uint64_t cols = 1;
  double fail_prob = 0.0;
  double straggle_mean = 1.0;
  double base_delay = 1.0;
  std::optional<std::uint64_t> seed;
  std::string encode_at = "master";
  std::uint64_t modulus = rk_default_modulus();
  std::uint64_t threads = 1;
  std::vector<std::uint64_t> kill;
  std::string out;
};

void add_sim_flags(CLI::App* cmd, SimFlags& f, bool with_scheme) {
  if (with_scheme) {
    cmd->add_option("--scheme", f.scheme,
                    "rook-poly|rook-base3|rook-behrend|lcc|csa|replication")
        ->capture_default_str();
    cmd->add_option("--n", f.n, "batch size")->capture_default_str();
  }
  cmd->add_option("--lambda", f.lambda, "replication factor")->capture_default_str();
  cmd->add_option("--workers", f.workers, "worker count (0: threshold + 4)")
      ->capture_default_str();
  cmd->add_option("--rows", f.rows, "rows of each A_i")->capture_default_str();
  cmd->add_option("--inner", f.inner, "cols of A_i, rows of B_i")->capture_default_str();
  cmd->add_option("--cols", f.cols, "cols of each B_i")->capture_default_str();
  cmd->add_option("--fail-prob", f.fail_prob, "fail-stop probability per worker")
      ->capture_default_str();
  cmd->add_option("--straggle-mean", f.straggle_mean, "mean of the exponential straggle")
      ->capture_default_str();
  cmd->add_option("--base-delay", f.base_delay, "delay per unit of worker work")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "seed (default: $ROOKBENCH_SEED or 1)");
  cmd->add_option("--encode-at", f.encode_at, "master|workers")
      ->check(CLI::IsMember({"master", "workers"}))
      ->capture_default_str();
  cmd->add_option("--modulus", f.modulus, "prime field modulus")->capture_default_str();
  cmd->add_option("--threads", f.threads, "encode/compute threads")->capture_default_str();
  cmd->add_option("--kill", f.kill, "worker ids that always fail")->delimiter(',');
  cmd->add_option("--out", f.out, "output file (default: stdout)");
}

rk_sim_options to_options(const SimFlags& f, const std::uint64_t& seed) {
  rk_sim_options o;
  rk_sim_options_init(&o);
  o.scheme = f.scheme.c_str();
  o.n = f.n;
  o.lambda = f.lambda;
  o.workers = f.workers;
  o.rows = f.rows;
  o.inner = f.inner;
  o.cols = f.cols;
  o.seed = seed;
  o.encode_at_workers = f.encode_at == "workers" ? 1 : 0;
  o.fail_prob = f.fail_prob;
  o.straggle_mean = f.straggle_mean;
  o.base_delay = f.base_delay;
  o.modulus = f.modulus;
  o.threads = f.threads;
  o.forced_failures = f.kill.empty() ? nullptr : f.kill.data();
  o.forced_failure_count = f.kill.size();
  return o;
}

int cmd_gen(const std::string& scheme, std::uint64_t n, const std::string& out) {
  rk_exponents* raw = nullptr;
  check(rk_exponents_generate(scheme.c_str(), n, &raw), "gen");
  OwnedExponents e(raw);
  if (!out.empty()) {
    char* json = nullptr;
    check(rk_exponents_to_json(e.get(), &json), "gen");
    OwnedString owned(json);
    emit(json, out);
  }
  const bool decodable = rk_exponents_is_decodable(e.get()) == 1;
  std::cout << "L=" << rk_exponents_sum_support_size(e.get())
            << " decodable=" << (decodable ? "true" : "false") << '\n';
  return decodable ? kExitOk : kExitNegative;
}

int cmd_check(const std::string& path) {
  const std::string text = read_file(path);
  rk_exponents* raw = nullptr;
  check(rk_exponents_parse_json(text.c_str(), &raw), "check");
  OwnedExponents e(raw);
  const bool decodable = rk_exponents_is_decodable(e.get()) == 1;
  std::cout << "decodable=" << (decodable ? "true" : "false")
            << " L=" << rk_exponents_sum_support_size(e.get());
  const int ap_free = rk_exponents_is_3ap_free(e.get());
  if (ap_free >= 0) std::cout << " 3ap_free=" << (ap_free == 1 ? "true" : "false");
  std::cout << " max=" << rk_exponents_max(e.get()) << '\n';
  return decodable ? kExitOk : kExitNegative;
}

int cmd_minsearch(std::uint64_t n, std::uint64_t max_exponent) {
  std::uint64_t l_min = 0;
  rk_exponents* raw = nullptr;
  check(rk_min_recovery(n, max_exponent, &l_min, &raw), "minsearch");
  OwnedExponents witness(raw);
  const auto [p, q] = values_of(witness.get());
  std::cout << "Lmin=" << l_min << '\n'
            << "witness P=" << join(p) << " Q=" << join(q) << '\n';
  return kExitOk;
}

int cmd_simulate(const SimFlags& f) {
  const rk_sim_options o = to_options(f, resolve_seed(f.seed));
  rk_sim_report* raw = nullptr;
  check(rk_simulate(&o, &raw), "simulate");
  OwnedReport report(raw);
  char* json = nullptr;
  check(rk_sim_report_to_json(report.get(), &json), "simulate");
  OwnedString owned(json);
  emit(json, f.out);
  return rk_sim_report_success(report.get()) ? kExitOk : kExitNegative;
}

int cmd_sweep(const SimFlags& f, const std::vector<std::string>& schemes,
              const std::vector<std::uint64_t>& n_list, std::uint64_t trials) {
  const rk_sim_options o = to_options(f, resolve_seed(f.seed));
  std::vector<const char*> names;
  for (const auto& s : schemes) names.push_back(s.c_str());
  char* csv = nullptr;
  check(rk_sweep_csv(&o, n_list.data(), n_list.size(), names.data(), names.size(),
                     trials, &csv),
        "sweep");
  OwnedString owned(csv);
  emit(csv, f.out);
  return kExitOk;
}

int cmd_bench_delta(const std::vector<std::uint64_t>& n_list, const std::string& out) {
  char* csv = nullptr;
  check(rk_bench_delta_csv(n_list.data(), n_list.size(), &csv), "bench-delta");
  OwnedString owned(csv);
  emit(csv, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rook codes: exponent sets, recovery thresholds and a straggler simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rk_version()));

  std::string gen_scheme = "base3";
  std::uint64_t gen_n = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate an exponent pair");
  gen->add_option("--scheme", gen_scheme, "poly|base3|behrend")
      ->check(CLI::IsMember({"poly", "base3", "behrend"}))
      ->capture_default_str();
  gen->add_option("--n", gen_n, "batch size")->required();
  gen->add_option("--out", gen_out, "write the pair as JSON");

  std::string check_path;
  auto* chk = app.add_subcommand("check", "check an exponent pair file");
  chk->add_option("--exponents", check_path, "exponent pair JSON")->required();

  std::uint64_t ms_n = 0;
  std::uint64_t ms_max = 0;
  auto* ms = app.add_subcommand("minsearch", "exhaustive minimum recovery threshold");
  ms->add_option("--n", ms_n, "batch size")->required();
  ms->add_option("--max-exponent", ms_max,
                 "largest exponent allowed (default: 3n)");

  SimFlags sim_flags;
  auto* sim = app.add_subcommand("simulate", "run one master/worker simulation");
  add_sim_flags(sim, sim_flags, true);

  SimFlags sweep_flags;
  std::vector<std::string> sweep_schemes{"rook-poly", "rook-base3", "rook-behrend",
                                         "lcc", "csa"};
  std::vector<std::uint64_t> sweep_n{2, 4, 8};
  std::uint64_t sweep_trials = 1;
  auto* swp = app.add_subcommand("sweep", "simulate over schemes and batch sizes");
  swp->add_option("--scheme", sweep_schemes, "comma-separated scheme names")
      ->delimiter(',')
      ->capture_default_str();
  swp->add_option("--n-list", sweep_n, "comma-separated batch sizes")
      ->delimiter(',')
      ->capture_default_str();
  swp->add_option("--trials", sweep_trials, "trials per (scheme, n)")->capture_default_str();
  add_sim_flags(swp, sweep_flags, false);

  std::vector<std::uint64_t> delta_n;
  std::string delta_out;
  auto* delta = app.add_subcommand("bench-delta", "gap-power multiplications of Behrend pairs");
  delta->add_option("--n-list", delta_n, "comma-separated batch sizes")->delimiter(',');
  delta->add_option("--out", delta_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen) return cmd_gen(gen_scheme, gen_n, gen_out);
    if (*chk) return cmd_check(check_path);
    if (*ms) return cmd_minsearch(ms_n, ms->count("--max-exponent") ? ms_max : 3 * ms_n);
    if (*sim) return cmd_simulate(sim_flags);
    if (*swp) return cmd_sweep(sweep_flags, sweep_schemes, sweep_n, sweep_trials);
    if (*delta) return cmd_bench_delta(delta_n, delta_out);
  } catch (const CommandError& e) {
    std::cerr << "rookbench: " << e.message << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "rookbench: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
