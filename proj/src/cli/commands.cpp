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

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "ewkit/cli.hpp"
#include "ewkit/json_io.hpp"
#include "ewkit/optimality.hpp"
#include "ewkit/states.hpp"
#include "ewkit/witness.hpp"

namespace ewkit::cli {

namespace {

// Raised for bad inputs once CLI11 has accepted the flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  bool passed = false;
  double margin = 0.0;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Check> checks;
  std::uint64_t seed = kDefaultSeed;
  int exit_code = kOk;

  void check(std::string name, bool passed, double margin) { checks.push_back({std::move(name), passed, margin}); }
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  Json to_json() const {
    Json list = Json::array();
    for (const auto& c : checks) list.push_back({{"name", c.name}, {"passed", c.passed}, {"margin", c.margin}});
    return Json{{"command", command}, {"inputs", inputs},   {"results", results},
                {"checks", list},     {"seed", seed},       {"versions", kVersion}};
  }
};

struct Common {
  std::optional<std::uint64_t> seed;
  bool summary = false;
  std::string report_path;
};

std::uint64_t resolve_seed(const Common& common) {
  if (common.seed) return *common.seed;
  if (const char* env = std::getenv("EWKIT_SEED"); env != nullptr && *env != '\0') {
    try {
      size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("EWKIT_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

void write_atomic(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw UsageError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw UsageError("cannot move output into place at " + path + ": " + ec.message());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Witness load_witness(const std::string& path) {
  try {
    return witness_from_json(read_json_file(path));
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string summary_table(const Report& r) {
  std::ostringstream s;
  s << r.command << "  (seed " << r.seed << ")\n";
  s << std::left << std::setw(36) << "check" << std::setw(8) << "result" << "margin\n";
  s << std::string(60, '-') << "\n";
  for (const auto& c : r.checks) {
    s << std::left << std::setw(36) << c.name << std::setw(8) << (c.passed ? "PASS" : "FAIL") << std::scientific
      << std::setprecision(3) << c.margin << std::defaultfloat << "\n";
  }
  if (r.results.contains("discrepancy")) {
    const Json& d = r.results["discrepancy"];
    s << "discrepancy: " << d.value("reading", "") << " reading fails " << d.value("failing_check", "") << "; using "
      << d.value("substitute", "") << "\n";
  }
  return s.str();
}

// Spec-building flags shared by witness and probe.
struct MapFlags {
  std::string family;
  int n = 0;
  int k = 0;
  std::string z;

  void attach(CLI::App* sub) {
    sub->add_option("--family", family, "map family")->required();
    sub->add_option("--n", n, "matrix dimension");
    sub->add_option("--k", k, "number of 2x2 blocks (Robertson families)");
    sub->add_option("--z", z, "phase collection, e.g. all:-1 or \"1,2:pi;1,3:0.5i\"");
  }

  MapSpec build(Json& inputs) const {
    MapFamily fam;
    try {
      fam = parse_family(family);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    inputs["family"] = family;
    const bool robertson = fam == MapFamily::Robertson || fam == MapFamily::GenRobertson;
    const int size = robertson ? k : n;
    inputs[robertson ? "k" : "n"] = size;
    if (size < (robertson ? 2 : 2)) throw UsageError(std::string(robertson ? "--k" : "--n") + " must be at least 2");
    if (!z.empty() && fam != MapFamily::GenReduction && fam != MapFamily::GenRobertson) {
      throw UsageError("--z only applies to gen-reduction and gen-robertson");
    }
    try {
      switch (fam) {
        case MapFamily::Reduction: return MapSpec::reduction(size);
        case MapFamily::GenReduction: {
          PhaseCollection pc = parse_zspec(z, size);
          inputs["z"] = to_json(pc);
          return MapSpec::gen_reduction(size, std::move(pc));
        }
        case MapFamily::Robertson: return MapSpec::robertson(size);
        case MapFamily::GenRobertson: {
          PhaseCollection pc = parse_zspec(z, size);
          inputs["z"] = to_json(pc);
          return MapSpec::gen_robertson(size, std::move(pc));
        }
        case MapFamily::BreuerHall:
          if (n % 2 != 0) throw UsageError("breuer-hall needs an even --n");
          return MapSpec::breuer_hall(kron(ComplexMatrix::Identity(n / 2, n / 2), sigma_y()));
        case MapFamily::Transpose: return MapSpec::transpose(size);
        case MapFamily::Identity: return MapSpec::identity(size);
        case MapFamily::Depolarizing: return MapSpec::depolarizing(size);
        case MapFamily::HadamardMultiplier:
          throw UsageError("hadamard-multiplier needs an explicit matrix; not available from flags");
      }
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    throw UsageError("unknown family");
  }
};

Json spec_source(const MapSpec& spec) { return to_json(spec); }

// --- commands -------------------------------------------------------------

void cmd_witness(Report& r, const MapFlags& flags, const std::string& out_path, int samples) {
  const MapSpec spec = flags.build(r.inputs);
  r.inputs["samples"] = samples;
  if (!out_path.empty()) r.inputs["out"] = out_path;
  const Witness w = choi_of_map(spec);
  const double lambda = min_eigenvalue(w);
  const ProbeReport probe = block_positivity_probe(w.op, samples, r.seed);

  r.results["dim"] = w.op.dim();
  r.results["lambda_min"] = lambda;
  r.results["trace"] = w.normalized_trace;
  r.results["block_probe_min"] = probe.min_found;
  r.check("hermitian", is_hermitian(w.op.mat()), 0.0);
  r.check("unit_trace", std::abs(w.normalized_trace - 1.0) <= 1e-10, std::abs(w.normalized_trace - 1.0));
  r.check("block_positive_probe", probe.min_found >= -tol::psd, probe.min_found);
  if (spec.family == MapFamily::GenReduction && spec.phases->is_unimodular()) {
    const double via_z = gen_reduction_lambda_min_via_Z(spec.dim, *spec.phases);
    r.results["lambda_min_via_Z"] = via_z;
    r.check("lambda_min_matches_Z", std::abs(via_z - lambda) <= 1e-12, std::abs(via_z - lambda));
  }

  const std::string text = to_json(w).dump() + "\n";
  if (out_path.empty()) {
    r.results["witness"] = to_json(w);
  } else {
    write_atomic(out_path, text);
  }
}

void cmd_spa(Report& r, const std::string& path) {
  r.inputs["witness"] = path;
  const Witness w = load_witness(path);
  r.inputs["source"] = spec_source(w.source);
  SpaResult res = [&] {
    try {
      return spa(w);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  r.results = to_json(res);
  r.check("psd_at_p_star", res.spa_psd_margin >= -tol::psd, res.spa_psd_margin);
  if (!res.already_positive) {
    r.check("boundary_at_p_star", std::abs(res.spa_psd_margin) <= tol::psd, res.spa_psd_margin);
  }
}

void cmd_optimality(Report& r, const std::string& path, const std::string& angles) {
  r.inputs["witness"] = path;
  r.inputs["angles"] = angles;
  const Witness w = load_witness(path);
  r.inputs["source"] = spec_source(w.source);
  const int n = w.n();
  PairAngles alpha;
  if (angles == "auto") {
    const MapSpec& s = w.source;
    const PhaseCollection z = s.phases ? *s.phases : PhaseCollection(s.family == MapFamily::Robertson || s.family == MapFamily::GenRobertson ? s.blocks() : n);
    switch (s.family) {
      case MapFamily::Reduction:
      case MapFamily::GenReduction: alpha = reduction_angles(z); break;
      case MapFamily::Robertson:
      case MapFamily::GenRobertson: alpha = robertson_angles(s.blocks(), z); break;
      default: break;
    }
  } else if (angles != "zero") {
    throw UsageError("--angles is auto or zero");
  }
  const OptimalityCertificate cert = optimality_certificate(w, spanning_vectors(n, alpha));
  r.results = to_json(cert);
  r.check("product_vectors_are_zeros", cert.all_zero, cert.max_abs_expectation);
  r.check("span_is_full", cert.span_rank == n * n, static_cast<double>(cert.span_rank - n * n));
}

void cmd_state_ppt(Report& r, int k, const std::string& zspec, const std::string& detect, const std::string& out_path) {
  r.inputs["k"] = k;
  if (k < 2) throw UsageError("--k must be at least 2");
  PhaseCollection z = [&] {
    try {
      return parse_zspec(zspec, k);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  r.inputs["z"] = to_json(z);
  if (!detect.empty()) r.inputs["detect"] = detect;
  if (!out_path.empty()) r.inputs["out"] = out_path;

  PptState st = [&] {
    try {
      return ppt_entangled_state(k, z);
    } catch (const Error& e) {
      if (e.code() == Errc::NonUnimodularPhases) throw UsageError(e.what());
      throw;
    }
  }();

  double detection = st.certificate.detection_value;
  if (!detect.empty()) {
    const Witness w = load_witness(detect);
    if (w.op.dim() != st.op.dim()) throw UsageError("witness dimension does not match the state");
    detection = (w.op.mat() * st.op.mat()).trace().real();
  }

  auto reading_json = [](const ReadingCheck& c) {
    return Json{{"reading", c.reading},     {"passed", c.passed},         {"failing_check", c.failing_check},
                {"trace", c.trace},         {"psd_margin", c.psd_margin}, {"ppt_margin", c.ppt_margin},
                {"detection", c.detection}};
  };
  r.results["readings"] = Json::array({reading_json(st.literal), reading_json(st.corrected)});
  r.results["used_reading"] = st.literal.passed ? "literal" : "corrected";
  r.results["detection_value"] = detection;
  r.results["expected_detection"] = st.expected_detection;
  r.results["certificates"] = {{"psd", st.certificate.psd_margin},
                               {"ppt", st.certificate.ppt_margin},
                               {"detection", st.certificate.detection_value}};
  r.check("psd", st.certificate.is_psd, st.certificate.psd_margin);
  r.check("ppt", st.certificate.is_ppt, st.certificate.ppt_margin);
  r.check("detected", detection < 0.0, detection);
  r.check("detection_matches_formula", std::abs(st.certificate.detection_value - st.expected_detection) <= 1e-10,
          st.certificate.detection_value - st.expected_detection);

  if (!st.literal.passed) {
    r.results["discrepancy"] = {
        {"reading", "literal"},
        {"failing_check", st.literal.failing_check},
        {"detail", "diagonal blocks rho_ii = -W_ii give trace " + std::to_string(st.literal.trace) +
                       " and smallest eigenvalue " + std::to_string(st.literal.psd_margin)},
        {"substitute", "corrected"}};
    if (r.all_passed()) r.exit_code = kDiscrepancy;
  }
  if (!out_path.empty()) write_atomic(out_path, to_json(st).dump() + "\n");
}

void cmd_probe(Report& r, const MapFlags& flags, int samples) {
  const MapSpec spec = flags.build(r.inputs);
  r.inputs["samples"] = samples;
  if (samples < 1) throw UsageError("--samples must be positive");
  const ProbeReport p = positivity_probe(spec, samples, r.seed);
  r.results["min_found"] = p.min_found;
  r.results["samples"] = p.samples;
  r.results["worst_input"] = to_json(p.worst_input);
  r.check("positive_on_samples", p.min_found >= -tol::psd, p.min_found);
}

void cmd_certify_spa_separable(Report& r, int n, const std::string& zspec, const std::string& out_path) {
  r.inputs["n"] = n;
  if (n < 2) throw UsageError("--n must be at least 2");
  PhaseCollection z = [&] {
    try {
      return parse_zspec(zspec, n);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  if (!z.is_unimodular()) throw UsageError("the SPA separability certificate needs |z_ij| = 1");
  r.inputs["z"] = to_json(z);
  if (!out_path.empty()) r.inputs["out"] = out_path;

  const SpaSeparabilityCertificate cert = spa_separability_certificate_reduction(n, z);
  const HolevoForm hf = holevo_form(cert.decomposition, n, [&](const ComplexMatrix& x) {
    return apply_spa_map(MapSpec::gen_reduction(n, z), cert.p_star, x);
  });
  r.results["p_star"] = cert.p_star;
  r.results["s"] = cert.s;
  r.results["terms"] = cert.decomposition.terms.size();
  r.results["target_residual"] = cert.decomposition.target_residual;
  r.results["ppt_margin"] = cert.ppt_margin;
  r.results["holevo_resolution_residual"] = hf.resolution_residual;
  r.results["holevo_map_residual"] = hf.map_residual;
  r.check("multiplier_psd", cert.multiplier_min_eig >= -tol::psd, cert.multiplier_min_eig);
  r.check("reconstruction", cert.decomposition.target_residual <= 1e-8, cert.decomposition.target_residual);
  r.check("terms_product", cert.decomposition.terms_valid(), 0.0);
  r.check("reconstruction_ppt", cert.ppt_margin >= -tol::psd, cert.ppt_margin);
  r.check("holevo_map", hf.map_residual <= 1e-8, hf.map_residual);
  if (!out_path.empty()) write_atomic(out_path, to_json(cert.decomposition).dump() + "\n");
}

void cmd_certify_phi6(Report& r) {
  const Phi6Decomposition d = phi6_spa_decomposition();
  r.results["c1"] = d.c1;
  r.results["c2"] = d.c2;
  r.results["offdiag_residual"] = d.residual;
  r.results["d_min"] = d.d_min;
  const double twirled_ppt =
      min_eigenvalue(partial_transpose(twirl(BipartiteOperator(6, 6, d.v1.reconstruct()))).mat());
  r.check("remainder_diagonal", d.residual <= 1e-8, d.residual);
  r.check("remainder_psd", d.d_min >= -1e-8, d.d_min);
  r.check("coefficients_nonnegative", d.c1 >= 0.0 && d.c2 >= 0.0, std::min(d.c1, d.c2));
  r.check("twirled_v1_ppt", twirled_ppt >= -tol::psd, twirled_ppt);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement witnesses from generalized reduction and Robertson maps", "ewkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;
  auto attach_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "RNG seed (default: EWKIT_SEED or 42)");
    sub->add_flag("--summary", common.summary, "print a fixed-width table instead of JSON");
    sub->add_option("--report", common.report_path, "also write the JSON report to this path");
  };

  MapFlags wflags;
  std::string w_out;
  int w_samples = 2000;
  auto* witness = app.add_subcommand("witness", "build a witness (Choi matrix) and check it");
  wflags.attach(witness);
  witness->add_option("--out", w_out, "write the witness JSON here");
  witness->add_option("--samples", w_samples, "product-vector probe samples");
  attach_common(witness);

  std::string spa_path;
  auto* spa_cmd = app.add_subcommand("spa", "structural physical approximation of a witness");
  spa_cmd->add_option("witness", spa_path, "witness JSON")->required();
  attach_common(spa_cmd);

  std::string opt_path;
  std::string opt_angles = "auto";
  auto* opt_cmd = app.add_subcommand("optimality", "spanning product-vector optimality test");
  opt_cmd->add_option("witness", opt_path, "witness JSON")->required();
  opt_cmd->add_option("--angles", opt_angles, "auto (from the witness phases) or zero");
  attach_common(opt_cmd);

  int st_k = 0;
  std::string st_z;
  std::string st_detect;
  std::string st_out;
  auto* st_cmd = app.add_subcommand("state-ppt", "PPT entangled state detected by the Robertson witness");
  st_cmd->add_option("--k", st_k, "number of 2x2 blocks")->required();
  st_cmd->add_option("--z", st_z, "unimodular phase collection");
  st_cmd->add_option("--detect", st_detect, "witness JSON to evaluate on the state");
  st_cmd->add_option("--out", st_out, "write the state JSON here");
  attach_common(st_cmd);

  MapFlags pflags;
  int p_samples = 10000;
  auto* probe_cmd = app.add_subcommand("probe", "randomized positivity probe of a map");
  pflags.attach(probe_cmd);
  probe_cmd->add_option("--samples", p_samples, "random pure inputs");
  attach_common(probe_cmd);

  int sep_n = 0;
  std::string sep_z;
  std::string sep_out;
  auto* sep_cmd = app.add_subcommand("certify-spa-separable", "product decomposition of the reduction-family SPA");
  sep_cmd->add_option("--n", sep_n, "dimension")->required();
  sep_cmd->add_option("--z", sep_z, "unimodular phase collection");
  sep_cmd->add_option("--out", sep_out, "write the decomposition JSON here");
  attach_common(sep_cmd);

  auto* phi6_cmd = app.add_subcommand("certify-phi6", "separability of the SPA of the k=3, z=-1 Robertson witness");
  attach_common(phi6_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Report report;
  try {
    report.seed = resolve_seed(common);
    if (witness->parsed()) {
      report.command = "witness";
      cmd_witness(report, wflags, w_out, w_samples);
    } else if (spa_cmd->parsed()) {
      report.command = "spa";
      cmd_spa(report, spa_path);
    } else if (opt_cmd->parsed()) {
      report.command = "optimality";
      cmd_optimality(report, opt_path, opt_angles);
    } else if (st_cmd->parsed()) {
      report.command = "state-ppt";
      cmd_state_ppt(report, st_k, st_z, st_detect, st_out);
    } else if (probe_cmd->parsed()) {
      report.command = "probe";
      cmd_probe(report, pflags, p_samples);
    } else if (sep_cmd->parsed()) {
      report.command = "certify-spa-separable";
      cmd_certify_spa_separable(report, sep_n, sep_z, sep_out);
    } else if (phi6_cmd->parsed()) {
      report.command = "certify-phi6";
      cmd_certify_phi6(report);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // A library check tripped inside the computation.
    report.check(std::string("construction:") + std::string(to_string(e.code())), false, 0.0);
    report.results["error"] = e.what();
    err << "error: " << e.what() << "\n";
  }

  if (report.exit_code == kOk && !report.all_passed()) report.exit_code = kCertificateFailed;

  const std::string json_text = report.to_json().dump(2) + "\n";
  try {
    if (!common.report_path.empty()) write_atomic(common.report_path, json_text);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (common.summary) {
    out << summary_table(report);
  } else {
    out << json_text;
  }
  return report.exit_code;
}

}  // namespace ewkit::cli
