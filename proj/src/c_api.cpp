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

#include "rookcodes/rookcodes.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rookcodes/errors.hpp"
#include "rookcodes/exponents.hpp"
#include "rookcodes/scheme.hpp"
#include "rookcodes/serialize.hpp"
#include "rookcodes/sim.hpp"
#include "rookcodes/sweep.hpp"

using namespace rookcodes;

struct rk_exponents {
  ExponentPair pair;
};

struct rk_session {
  BoundScheme scheme;
  std::optional<BatchInputs> inputs;
};

struct rk_sim_report {
  SimReport report;
};

namespace {

thread_local std::string g_last_error;

rk_status to_status(ErrorCode code) { return static_cast<rk_status>(code); }

// Runs body, translating exceptions into a status and the thread's last
// error message.
template <typename F>
rk_status guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return RK_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return RK_ERR_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string_view strip_rook_prefix(std::string_view name) {
  constexpr std::string_view kPrefix = "rook-";
  if (name.substr(0, kPrefix.size()) == kPrefix) name.remove_prefix(kPrefix.size());
  return name;
}

SimConfig config_from_options(const rk_sim_options* o) {
  require(o != nullptr, "options is NULL");
  SimConfig c;
  c.descriptor.kind = parse_scheme_kind(o->scheme ? o->scheme : "rook-base3");
  c.descriptor.n = o->n;
  c.descriptor.lambda = o->lambda;
  c.workers = o->workers;
  c.dims = Dims{o->rows, o->inner, o->cols};
  c.seed = o->seed;
  c.encode_at = o->encode_at_workers ? EncodeAt::kWorkers : EncodeAt::kMaster;
  c.fault = FaultModel{o->fail_prob, o->straggle_mean, o->base_delay};
  c.modulus = o->modulus;
  c.threads = o->threads;
  if (o->forced_failure_count > 0) {
    require(o->forced_failures != nullptr, "forced_failures is NULL");
    c.forced_failures.assign(o->forced_failures,
                             o->forced_failures + o->forced_failure_count);
  }
  return c;
}

}  // namespace

extern "C" {

RK_API const char* rk_status_name(rk_status status) {
  if (status == RK_OK) return "OK";
  static thread_local std::string name;
  name = std::string(error_code_name(static_cast<ErrorCode>(status)));
  return name.c_str();
}

RK_API const char* rk_last_error(void) { return g_last_error.c_str(); }

RK_API void rk_string_free(char* s) { std::free(s); }

RK_API const char* rk_version(void) { return "0.1.0"; }

RK_API uint64_t rk_default_modulus(void) { return PrimeField::kMersenne61; }

RK_API rk_status rk_exponents_generate(const char* construction, uint64_t n,
                                       rk_exponents** out) {
  return guard([&] {
    require(construction != nullptr && out != nullptr, "NULL argument");
    const std::string_view name = strip_rook_prefix(construction);
    std::optional<ExponentPair> pair;
    if (name == "poly") {
      pair = poly_code_exponents(n);
    } else if (name == "base3") {
      pair = base3_exponents(n);
    } else if (name == "behrend") {
      pair = behrend_exponents(n);
    } else {
      fail(ErrorCode::kInvalidArgument,
           "unknown construction '" + std::string(construction) + "'");
    }
    *out = new rk_exponents{std::move(*pair)};
  });
}

RK_API rk_status rk_exponents_behrend_with(uint64_t n, uint32_t digit_bound,
                                           uint32_t length, rk_exponents** out) {
  return guard([&] {
    require(out != nullptr, "NULL argument");
    *out = new rk_exponents{behrend_exponents_with(n, digit_bound, length)};
  });
}

RK_API rk_status rk_exponents_from_arrays(const uint64_t* p, const uint64_t* q,
                                          size_t n, rk_exponents** out) {
  return guard([&] {
    require(p != nullptr && q != nullptr && out != nullptr, "NULL argument");
    *out = new rk_exponents{ExponentPair(std::vector<std::uint64_t>(p, p + n),
                                         std::vector<std::uint64_t>(q, q + n))};
  });
}

RK_API rk_status rk_exponents_parse_json(const char* json, rk_exponents** out) {
  return guard([&] {
    require(json != nullptr && out != nullptr, "NULL argument");
    *out = new rk_exponents{exponents_from_json(parse_json(json))};
  });
}

RK_API rk_status rk_exponents_to_json(const rk_exponents* e, char** out) {
  return guard([&] {
    require(e != nullptr && out != nullptr, "NULL argument");
    *out = dup_string(exponents_to_json(e->pair).dump());
  });
}

RK_API void rk_exponents_free(rk_exponents* e) { delete e; }

RK_API size_t rk_exponents_size(const rk_exponents* e) {
  return e ? e->pair.n() : 0;
}

RK_API rk_status rk_exponents_values(const rk_exponents* e, uint64_t* p,
                                     uint64_t* q) {
  return guard([&] {
    require(e != nullptr, "NULL argument");
    if (p) std::copy(e->pair.p().begin(), e->pair.p().end(), p);
    if (q) std::copy(e->pair.q().begin(), e->pair.q().end(), q);
  });
}

RK_API uint64_t rk_exponents_max(const rk_exponents* e) {
  return e ? e->pair.max_exponent() : 0;
}

RK_API uint64_t rk_exponents_sum_support_size(const rk_exponents* e) {
  return e ? sum_support(e->pair).size() : 0;
}

RK_API int rk_exponents_is_decodable(const rk_exponents* e) {
  return e && is_decodable(e->pair) ? 1 : 0;
}

RK_API int rk_exponents_is_3ap_free(const rk_exponents* e) {
  if (e == nullptr || !e->pair.symmetric()) return -1;
  return is_3ap_free(e->pair.p()) ? 1 : 0;
}

RK_API uint64_t rk_exponents_gap_power_muls(const rk_exponents* e) {
  return e ? gap_power_muls(e->pair) : 0;
}

RK_API rk_status rk_min_recovery(uint64_t n, uint64_t max_exponent,
                                 uint64_t* l_min, rk_exponents** witness) {
  return guard([&] {
    require(l_min != nullptr, "NULL argument");
    MinRecoveryResult r = min_recovery_bruteforce(n, max_exponent);
    *l_min = r.l_min;
    if (witness) *witness = new rk_exponents{std::move(r.witness)};
  });
}

RK_API rk_status rk_scheme_threshold(const char* descriptor_json,
                                     uint64_t* threshold) {
  return guard([&] {
    require(descriptor_json != nullptr && threshold != nullptr, "NULL argument");
    *threshold = scheme_threshold(descriptor_from_json(parse_json(descriptor_json)));
  });
}

RK_API rk_status rk_session_create(const char* descriptor_json,
                                   uint64_t modulus, uint64_t workers,
                                   uint64_t seed, rk_session** out) {
  return guard([&] {
    require(descriptor_json != nullptr && out != nullptr, "NULL argument");
    const SchemeDescriptor d = descriptor_from_json(parse_json(descriptor_json));
    std::optional<PrimeField> field;
    try {
      field.emplace(modulus);
    } catch (const Error& e) {
      fail(ErrorCode::kConfigInvalid, e.what());
    }
    if (workers == 0) {
      workers = d.kind == SchemeKind::kReplication ? d.n * d.lambda
                                                   : scheme_threshold(d) + 4;
    }
    *out = new rk_session{BoundScheme::bind(d, *field, workers, seed), std::nullopt};
  });
}

RK_API void rk_session_free(rk_session* s) { delete s; }

RK_API uint64_t rk_session_threshold(const rk_session* s) {
  return s ? s->scheme.threshold() : 0;
}

RK_API uint64_t rk_session_workers(const rk_session* s) {
  return s ? s->scheme.workers() : 0;
}

RK_API rk_status rk_session_set_inputs(rk_session* s, const char* inputs_json) {
  return guard([&] {
    require(s != nullptr && inputs_json != nullptr, "NULL argument");
    BatchInputs inputs = inputs_from_json(parse_json(inputs_json), s->scheme.field());
    if (inputs.n() != s->scheme.descriptor().n) {
      fail(ErrorCode::kDimensionMismatch, "batch size does not match the scheme");
    }
    s->inputs = std::move(inputs);
  });
}

RK_API rk_status rk_session_random_inputs(rk_session* s, uint64_t rows,
                                          uint64_t inner, uint64_t cols,
                                          uint64_t seed) {
  return guard([&] {
    require(s != nullptr, "NULL argument");
    require(rows > 0 && inner > 0 && cols > 0, "dimensions must be positive");
    RandomStream stream(seed, stream_key::kInputs);
    s->inputs = random_inputs(s->scheme.field(), s->scheme.descriptor().n,
                              Dims{rows, inner, cols}, stream);
  });
}

RK_API rk_status rk_session_encode(const rk_session* s, uint64_t worker,
                                   char** share_json) {
  return guard([&] {
    require(s != nullptr && share_json != nullptr, "NULL argument");
    require(s->inputs.has_value(), "session has no inputs");
    require(worker < s->scheme.workers(), "worker out of range");
    OpCounter counter;
    *share_json =
        dup_string(share_to_json(s->scheme.encode(*s->inputs, worker, counter)).dump());
  });
}

RK_API rk_status rk_session_decode(const rk_session* s,
                                   const char* products_json,
                                   char** result_json) {
  return guard([&] {
    require(s != nullptr && products_json != nullptr && result_json != nullptr,
            "NULL argument");
    const Json j = parse_json(products_json);
    if (!j.is_array()) fail(ErrorCode::kParseError, "expected an array of products");
    std::vector<WorkerProduct> products;
    for (const auto& item : j) {
      products.push_back(product_from_json(item, s->scheme.field()));
    }
    OpCounter counter;
    const DecodeResult r = s->scheme.decode(products, counter);
    Json out = Json::array();
    for (const auto& m : r.products) out.push_back(matrix_to_json(m));
    *result_json = dup_string(out.dump());
  });
}

RK_API rk_status rk_session_direct_products(const rk_session* s,
                                            char** result_json) {
  return guard([&] {
    require(s != nullptr && result_json != nullptr, "NULL argument");
    require(s->inputs.has_value(), "session has no inputs");
    OpCounter counter;
    Json out = Json::array();
    for (const auto& m : direct_products(s->scheme.field(), *s->inputs, counter)) {
      out.push_back(matrix_to_json(m));
    }
    *result_json = dup_string(out.dump());
  });
}

RK_API rk_status rk_worker_compute(const char* share_json, uint64_t modulus,
                                   char** product_json) {
  return guard([&] {
    require(share_json != nullptr && product_json != nullptr, "NULL argument");
    const PrimeField field(modulus);
    OpCounter counter;
    const WorkerShare share = share_from_json(parse_json(share_json), field);
    *product_json =
        dup_string(product_to_json(worker_compute(field, share, counter)).dump());
  });
}

RK_API void rk_sim_options_init(rk_sim_options* o) {
  if (o == nullptr) return;
  *o = rk_sim_options{};
  o->scheme = "rook-base3";
  o->n = 2;
  o->lambda = 2;
  o->workers = 0;
  o->rows = o->inner = o->cols = 1;
  o->seed = 1;
  o->encode_at_workers = 0;
  o->fail_prob = 0.0;
  o->straggle_mean = 1.0;
  o->base_delay = 1.0;
  o->modulus = PrimeField::kMersenne61;
  o->threads = 1;
}

RK_API rk_status rk_simulate(const rk_sim_options* options, rk_sim_report** out) {
  return guard([&] {
    require(out != nullptr, "NULL argument");
    *out = new rk_sim_report{run_simulation(config_from_options(options))};
  });
}

RK_API void rk_sim_report_free(rk_sim_report* r) { delete r; }

RK_API int rk_sim_report_success(const rk_sim_report* r) {
  return r && r->report.success ? 1 : 0;
}

RK_API int rk_sim_report_verified(const rk_sim_report* r) {
  return r && r->report.verified ? 1 : 0;
}

RK_API uint64_t rk_sim_report_threshold(const rk_sim_report* r) {
  return r ? r->report.threshold : 0;
}

RK_API uint64_t rk_sim_report_responses_used(const rk_sim_report* r) {
  return r ? r->report.responses_used : 0;
}

RK_API uint64_t rk_sim_report_responses_received(const rk_sim_report* r) {
  return r ? r->report.responses_received : 0;
}

RK_API const char* rk_sim_report_error(const rk_sim_report* r) {
  return r ? r->report.error.c_str() : "";
}

RK_API rk_status rk_sim_report_to_json(const rk_sim_report* r, char** out) {
  return guard([&] {
    require(r != nullptr && out != nullptr, "NULL argument");
    *out = dup_string(report_to_json(r->report).dump(2));
  });
}

RK_API rk_status rk_sweep_csv(const rk_sim_options* base,
                              const uint64_t* n_values, size_t n_count,
                              const char* const* schemes, size_t scheme_count,
                              uint64_t trials, char** csv) {
  return guard([&] {
    require(csv != nullptr, "NULL argument");
    require(n_count == 0 || n_values != nullptr, "n_values is NULL");
    require(scheme_count == 0 || schemes != nullptr, "schemes is NULL");
    SweepOptions options;
    options.base = config_from_options(base);
    options.n_values.assign(n_values, n_values + n_count);
    for (size_t i = 0; i < scheme_count; ++i) {
      require(schemes[i] != nullptr, "scheme name is NULL");
      options.schemes.push_back(parse_scheme_kind(schemes[i]));
    }
    options.trials = trials;
    *csv = dup_string(sweep_csv(sweep(options)));
  });
}

RK_API rk_status rk_bench_delta_csv(const uint64_t* n_values, size_t n_count,
                                    char** csv) {
  return guard([&] {
    require(csv != nullptr, "NULL argument");
    require(n_count == 0 || n_values != nullptr, "n_values is NULL");
    const std::vector<std::size_t> ns(n_values, n_values + n_count);
    *csv = dup_string(bench_delta_csv(bench_delta(ns)));
  });
}

}  // extern "C"
