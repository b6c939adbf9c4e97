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

#include <string>

#include "json.hpp"
#include "rookcodes/coding.hpp"
#include "rookcodes/exponents.hpp"
#include "rookcodes/field.hpp"
#include "rookcodes/matrix.hpp"
#include "rookcodes/scheme.hpp"
#include "rookcodes/sim.hpp"

// JSON wire formats. Field elements are decimal strings so 61-bit values
// survive JSON readers that store numbers as doubles. Every *_from_json
// throws Error(kParseError) on malformed input.
namespace rookcodes {

using Json = nlohmann::json;

Json matrix_to_json(const FieldMatrix& m);
FieldMatrix matrix_from_json(const Json& j, const PrimeField& field);

/// Integers below 2^53 are JSON numbers, larger ones decimal strings.
Json exponents_to_json(const ExponentPair& pair);
ExponentPair exponents_from_json(const Json& j);

Json share_to_json(const WorkerShare& share);
WorkerShare share_from_json(const Json& j, const PrimeField& field);

Json product_to_json(const WorkerProduct& product);
WorkerProduct product_from_json(const Json& j, const PrimeField& field);

Json descriptor_to_json(const SchemeDescriptor& d);
SchemeDescriptor descriptor_from_json(const Json& j);

Json report_to_json(const SimReport& report);
SimReport report_from_json(const Json& j);

Json inputs_to_json(const BatchInputs& inputs);
BatchInputs inputs_from_json(const Json& j, const PrimeField& field);

/// Parses text, mapping parser failures to Error(kParseError).
Json parse_json(const std::string& text);

}  // namespace rookcodes
