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

#include "rookcodes/serialize.hpp"

#include <charconv>
#include <string>
#include <utility>

#include "rookcodes/errors.hpp"

namespace rookcodes {
namespace {

constexpr std::uint64_t kMaxSafeJsonInteger = std::uint64_t{1} << 53;

// Runs `body`, turning JSON library failures into Error(kParseError).
template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::kParseError, std::string("malformed ") + what + ": " + e.what());
  }
}

std::uint64_t parse_u64(const std::string& text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    fail(ErrorCode::kParseError, "not an unsigned integer: '" + text + "'");
  }
  return value;
}

// Accepts a non-negative JSON integer or a decimal string.
std::uint64_t integer_from_json(const Json& j) {
  if (j.is_string()) return parse_u64(j.get<std::string>());
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(j.get<std::int64_t>());
  }
  fail(ErrorCode::kParseError, "expected a non-negative integer, got " + j.dump());
}

Json integer_to_json(std::uint64_t v) {
  if (v < kMaxSafeJsonInteger) return Json(v);
  return Json(std::to_string(v));
}

Fe element_from_json(const Json& j, const PrimeField& field) {
  if (!j.is_string()) {
    fail(ErrorCode::kParseError, "field elements must be decimal strings");
  }
  return field.parse_decimal(j.get<std::string>());
}

std::vector<std::uint64_t> integer_list(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::kParseError, "expected an array");
  std::vector<std::uint64_t> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(integer_from_json(item));
  return out;
}

std::vector<FieldMatrix> matrix_list(const Json& j, const PrimeField& field) {
  if (!j.is_array()) fail(ErrorCode::kParseError, "expected an array of matrices");
  std::vector<FieldMatrix> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(matrix_from_json(item, field));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
}

Json matrix_to_json(const FieldMatrix& m) {
  Json entries = Json::array();
  for (Fe e : m.entries()) entries.push_back(PrimeField::to_decimal(e));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

FieldMatrix matrix_from_json(const Json& j, const PrimeField& field) {
  return guarded("matrix", [&] {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols) {
      fail(ErrorCode::kParseError, "matrix entry count does not match rows*cols");
    }
    std::vector<Fe> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(element_from_json(e, field));
    return FieldMatrix(rows, cols, std::move(values));
  });
}

Json exponents_to_json(const ExponentPair& pair) {
  Json p = Json::array();
  Json q = Json::array();
  for (auto v : pair.p()) p.push_back(integer_to_json(v));
  for (auto v : pair.q()) q.push_back(integer_to_json(v));
  return Json{{"n", pair.n()}, {"p", std::move(p)}, {"q", std::move(q)}};
}

ExponentPair exponents_from_json(const Json& j) {
  return guarded("exponent pair", [&] {
    auto p = integer_list(j.at("p"));
    auto q = integer_list(j.at("q"));
    if (j.contains("n") && integer_from_json(j.at("n")) != p.size()) {
      fail(ErrorCode::kParseError, "\"n\" does not match the length of \"p\"");
    }
    try {
      return ExponentPair(std::move(p), std::move(q));
    } catch (const Error& e) {
      fail(ErrorCode::kParseError, e.what());
    }
  });
}

Json share_to_json(const WorkerShare& share) {
  return Json{{"worker", share.worker_id},
              {"x", PrimeField::to_decimal(share.x)},
              {"a", matrix_to_json(share.a)},
              {"b", matrix_to_json(share.b)}};
}

WorkerShare share_from_json(const Json& j, const PrimeField& field) {
  return guarded("worker share", [&] {
    return WorkerShare{j.at("worker").get<std::uint64_t>(),
                       element_from_json(j.at("x"), field),
                       matrix_from_json(j.at("a"), field),
                       matrix_from_json(j.at("b"), field)};
  });
}

Json product_to_json(const WorkerProduct& product) {
  return Json{{"worker", product.worker_id},
              {"x", PrimeField::to_decimal(product.x)},
              {"e", matrix_to_json(product.e)}};
}

WorkerProduct product_from_json(const Json& j, const PrimeField& field) {
  return guarded("worker product", [&] {
    return WorkerProduct{j.at("worker").get<std::uint64_t>(),
                         element_from_json(j.at("x"), field),
                         matrix_from_json(j.at("e"), field)};
  });
}

Json descriptor_to_json(const SchemeDescriptor& d) {
  Json j{{"scheme", std::string(scheme_kind_name(d.kind))}, {"n", d.n}};
  if (d.kind == SchemeKind::kReplication) j["lambda"] = d.lambda;
  if (d.exponents) j["exponents"] = exponents_to_json(*d.exponents);
  return j;
}

SchemeDescriptor descriptor_from_json(const Json& j) {
  return guarded("scheme descriptor", [&] {
    SchemeDescriptor d;
    try {
      d.kind = parse_scheme_kind(j.at("scheme").get<std::string>());
    } catch (const Error& e) {
      fail(ErrorCode::kParseError, e.what());
    }
    d.n = j.at("n").get<std::size_t>();
    if (j.contains("lambda")) d.lambda = j.at("lambda").get<std::size_t>();
    if (j.contains("exponents")) {
      if (!is_rook(d.kind)) {
        fail(ErrorCode::kParseError, "only rook schemes carry exponents");
      }
      d.exponents = exponents_from_json(j.at("exponents"));
      if (d.exponents->n() != d.n) {
        fail(ErrorCode::kParseError, "exponent pair size differs from n");
      }
    }
    return d;
  });
}

Json report_to_json(const SimReport& r) {
  return Json{{"scheme", r.scheme},
              {"n", r.n},
              {"workers", r.workers},
              {"encode_at", r.encode_at},
              {"success", r.success},
              {"error", r.error},
              {"responses_received", r.responses_received},
              {"responses_used", r.responses_used},
              {"failed_workers", r.failed_workers},
              {"threshold", r.threshold},
              {"encode_muls", r.encode_muls},
              {"encode_invs", r.encode_invs},
              {"encode_gap_muls", r.encode_gap_muls},
              {"worker_muls", r.worker_muls},
              {"decode_muls", r.decode_muls},
              {"decode_invs", r.decode_invs},
              {"decode_attempts", r.decode_attempts},
              {"singular_retries", r.singular_retries},
              {"wallclock_sim_units", r.wallclock_sim_units},
              {"verified", r.verified},
              {"warnings", r.warnings}};
}

SimReport report_from_json(const Json& j) {
  return guarded("simulation report", [&] {
    SimReport r;
    r.scheme = j.at("scheme").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.workers = j.at("workers").get<std::size_t>();
    r.encode_at = j.at("encode_at").get<std::string>();
    r.success = j.at("success").get<bool>();
    r.error = j.at("error").get<std::string>();
    r.responses_received = j.at("responses_received").get<std::size_t>();
    r.responses_used = j.at("responses_used").get<std::size_t>();
    r.failed_workers = j.at("failed_workers").get<std::vector<std::uint64_t>>();
    r.threshold = j.at("threshold").get<std::size_t>();
    r.encode_muls = j.at("encode_muls").get<std::uint64_t>();
    r.encode_invs = j.at("encode_invs").get<std::uint64_t>();
    r.encode_gap_muls = j.at("encode_gap_muls").get<std::uint64_t>();
    r.worker_muls = j.at("worker_muls").get<std::uint64_t>();
    r.decode_muls = j.at("decode_muls").get<std::uint64_t>();
    r.decode_invs = j.at("decode_invs").get<std::uint64_t>();
    r.decode_attempts = j.at("decode_attempts").get<std::size_t>();
    r.singular_retries = j.at("singular_retries").get<std::size_t>();
    r.wallclock_sim_units = j.at("wallclock_sim_units").get<double>();
    r.verified = j.at("verified").get<bool>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  });
}

Json inputs_to_json(const BatchInputs& inputs) {
  Json a = Json::array();
  Json b = Json::array();
  for (const auto& m : inputs.a) a.push_back(matrix_to_json(m));
  for (const auto& m : inputs.b) b.push_back(matrix_to_json(m));
  return Json{{"a", std::move(a)}, {"b", std::move(b)}};
}

BatchInputs inputs_from_json(const Json& j, const PrimeField& field) {
  return guarded("batch inputs", [&] {
    BatchInputs inputs{matrix_list(j.at("a"), field), matrix_list(j.at("b"), field)};
    try {
      validate_inputs(inputs);
    } catch (const Error& e) {
      fail(ErrorCode::kParseError, e.what());
    }
    return inputs;
  });
}

}  // namespace rookcodes
