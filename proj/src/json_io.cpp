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

#include "ewkit/json_io.hpp"

#include <string>

namespace ewkit {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("bad field \"") + key + "\": " + e.what());
  }
}

Json pair_json(cplx c) { return Json::array({c.real(), c.imag()}); }

cplx pair_value(const Json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    parse_fail("complex entries are [re, im] pairs");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) data.push_back(pair_json(m(r, c)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const auto rows = field<long long>(j, "rows");
  const auto cols = field<long long>(j, "cols");
  if (rows < 0 || cols < 0) parse_fail("negative matrix shape");
  const Json& data = j.at("data");
  if (!data.is_array() || static_cast<long long>(data.size()) != rows * cols) parse_fail("data length != rows*cols");
  ComplexMatrix m(rows, cols);
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c) m(r, c) = pair_value(data[r * cols + c]);
  return m;
}

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(pair_json(v(i)));
  return out;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("vector must be an array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = pair_value(j[i]);
  return v;
}

Json to_json(const BipartiteOperator& op) {
  Json out{{"dim_a", op.dim_a()}, {"dim_b", op.dim_b()}};
  Json m = to_json(op.mat());
  for (auto& [key, value] : m.items()) out[key] = std::move(value);
  return out;
}

BipartiteOperator bipartite_from_json(const Json& j) {
  return BipartiteOperator(field<int>(j, "dim_a"), field<int>(j, "dim_b"), matrix_from_json(j));
}

Json to_json(const PhaseCollection& z) {
  Json out = Json::array();
  for (const auto& [pair, value] : z.entries()) {
    out.push_back({{"i", pair.first + 1}, {"j", pair.second + 1}, {"re", value.real()}, {"im", value.imag()}});
  }
  return out;
}

PhaseCollection phases_from_json(const Json& j, int labels) {
  if (!j.is_array()) parse_fail("\"z\" must be an array");
  PhaseCollection z(labels);
  for (const auto& e : j) {
    const int i = field<int>(e, "i") - 1;
    const int k = field<int>(e, "j") - 1;
    const cplx value(field<double>(e, "re"), e.contains("im") ? field<double>(e, "im") : 0.0);
    if (i == k || i < 0 || k < 0 || i >= labels || k >= labels) parse_fail("phase label out of range");
    z.set(std::min(i, k), std::max(i, k), i < k ? value : std::conj(value));
  }
  return z;
}

Json to_json(const MapSpec& spec) {
  Json out{{"family", std::string(family_name(spec.family))}};
  switch (spec.family) {
    case MapFamily::Robertson:
    case MapFamily::GenRobertson:
      out["k"] = spec.blocks();
      break;
    default:
      out["n"] = spec.dim;
  }
  if (spec.phases) out["z"] = to_json(*spec.phases);
  if (spec.unitary) out["u"] = to_json(*spec.unitary);
  if (spec.multiplier) out["ztilde"] = to_json(*spec.multiplier);
  return out;
}

MapSpec map_spec_from_json(const Json& j) {
  MapFamily family;
  try {
    family = parse_family(field<std::string>(j, "family"));
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  switch (family) {
    case MapFamily::Reduction: return MapSpec::reduction(field<int>(j, "n"));
    case MapFamily::GenReduction: {
      const int n = field<int>(j, "n");
      return MapSpec::gen_reduction(n, j.contains("z") ? phases_from_json(j.at("z"), n) : PhaseCollection(n));
    }
    case MapFamily::Robertson: return MapSpec::robertson(field<int>(j, "k"));
    case MapFamily::GenRobertson: {
      const int k = field<int>(j, "k");
      return MapSpec::gen_robertson(k, j.contains("z") ? phases_from_json(j.at("z"), k) : PhaseCollection(k));
    }
    case MapFamily::BreuerHall: return MapSpec::breuer_hall(matrix_from_json(j.at("u")));
    case MapFamily::Transpose: return MapSpec::transpose(field<int>(j, "n"));
    case MapFamily::Identity: return MapSpec::identity(field<int>(j, "n"));
    case MapFamily::Depolarizing: return MapSpec::depolarizing(field<int>(j, "n"));
    case MapFamily::HadamardMultiplier: return MapSpec::hadamard_multiplier(matrix_from_json(j.at("ztilde")));
  }
  parse_fail("unknown family");
}

Json to_json(const Witness& w) {
  Json out = to_json(w.op);
  out["source"] = to_json(w.source);
  out["trace"] = w.normalized_trace;
  return out;
}

Witness witness_from_json(const Json& j) {
  if (!j.contains("source")) parse_fail("witness JSON needs \"source\"");
  return make_witness(bipartite_from_json(j), map_spec_from_json(j.at("source")));
}

Json to_json(const SpaResult& r) {
  return Json{{"lambda_min", r.lambda_min},
              {"p_star", r.p_star},
              {"spa_psd_margin", r.spa_psd_margin},
              {"already_positive", r.already_positive}};
}

Json to_json(const OptimalityCertificate& c) {
  return Json{{"all_zero", c.all_zero},
              {"max_abs_expectation", c.max_abs_expectation},
              {"span_rank", c.span_rank},
              {"certified", c.certified},
              {"failing", c.failing}};
}

Json to_json(const SeparableDecomposition& d) {
  Json terms = Json::array();
  for (const auto& t : d.terms) terms.push_back({{"w", t.w}, {"x", to_json(t.x)}, {"y", to_json(t.y)}});
  return Json{{"dim_a", d.dim_a}, {"dim_b", d.dim_b}, {"terms", std::move(terms)}, {"target_residual", d.target_residual}};
}

Json to_json(const PptState& s) {
  Json out = to_json(s.op);
  out["certificates"] = {{"psd", s.certificate.psd_margin},
                         {"ppt", s.certificate.ppt_margin},
                         {"detection", s.certificate.detection_value}};
  return out;
}

}  // namespace ewkit
