// Copyright 2026 The ewkit Authors
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

#include <json.hpp>

#include "ewkit/optimality.hpp"
#include "ewkit/states.hpp"
#include "ewkit/witness.hpp"

namespace ewkit {

// Insertion-ordered so that reports keep a fixed key layout.
using Json = nlohmann::ordered_json;

// {"rows", "cols", "data": [[re, im], ...]} in row-major order.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// [[re, im], ...]
Json to_json(const ComplexVector& v);
ComplexVector vector_from_json(const Json& j);

// Matrix fields plus "dim_a", "dim_b".
Json to_json(const BipartiteOperator& op);
BipartiteOperator bipartite_from_json(const Json& j);

// [{"i", "j", "re", "im"}] with 1-based labels; only explicitly set pairs.
Json to_json(const PhaseCollection& z);
PhaseCollection phases_from_json(const Json& j, int labels);

// {"family": "gen-robertson", "k": 3, "z": [...]}; "n" for the
// non-Robertson families, "u" / "ztilde" matrices where relevant.
Json to_json(const MapSpec& spec);
MapSpec map_spec_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const SpaResult& r);
Json to_json(const OptimalityCertificate& c);
Json to_json(const SeparableDecomposition& d);
Json to_json(const PptState& s);

}  // namespace ewkit
