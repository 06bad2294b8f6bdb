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

#include <cstdint>
#include <vector>

#include "ewkit/maps.hpp"
#include "ewkit/matrix.hpp"

namespace ewkit {

/// Entanglement witness W = (id (x) Lambda) P+ together with the map it came
/// from. The operator is always Hermitian (checked on construction).
struct Witness {
  BipartiteOperator op;
  MapSpec source;
  double normalized_trace = 0.0;

  int n() const noexcept { return op.dim_a(); }
};

Witness make_witness(BipartiteOperator op, MapSpec source);

Witness choi_of_map(const MapSpec& spec);

double min_eigenvalue(const Witness& w);

// -lambda_max(Z)/(n(n-1)) for Z_ii = 0, Z_ij = z_ij. Requires |z_ij| = 1.
double gen_reduction_lambda_min_via_Z(int n, const PhaseCollection& z);

// (1-p)/D I + p W with D the total dimension.
BipartiteOperator spa_operator(const Witness& w, double p);

struct SpaResult {
  double lambda_min = 0.0;
  double p_star = 1.0;
  BipartiteOperator spa_operator;
  double spa_psd_margin = 0.0;  // lambda_min of the SPA operator
  bool already_positive = false;
};

/// p* = 1/(1 + |lambda_min| D) for a unit-trace witness. A positive W is
/// reported with already_positive set and p* = 1.
SpaResult spa(const Witness& w);

struct WeightedOperator {
  double weight = 0.0;
  int i = 0;
  int j = 0;
  ComplexMatrix op;
};

// P_ij^(z) = e_ii(x)e_jj + e_jj(x)e_ii - z_ij e_ij(x)e_ji - conj(z_ij) e_ji(x)e_ij,
// each with weight 1/(n(n-1)); the sum is the partial transpose of W^(z).
std::vector<WeightedOperator> reduction_ptranspose_decomposition(int n, const PhaseCollection& z);

/// Min of <x(x)y|W|x(x)y> over random product vectors, polished by
/// alternating eigenvector descent. Deterministic given the seed.
ProbeReport block_positivity_probe(const BipartiteOperator& w, int samples, std::uint64_t seed,
                                   const ProbeOptions& options = {});

struct SpectrumCluster {
  double value = 0.0;
  int multiplicity = 0;
};

struct SpectrumProfile {
  std::vector<SpectrumCluster> negatives;
  std::vector<SpectrumCluster> positives;
  int zero_count = 0;
  double trace = 0.0;

  int total() const;
  double weighted_sum() const;
};

// Groups sorted eigenvalues whose neighbours differ by at most `tolerance`.
std::vector<SpectrumCluster> cluster_spectrum(const RealVector& ascending, double tolerance);

SpectrumProfile spectrum_profile(const ComplexMatrix& hermitian, double tolerance = 1e-9);
SpectrumProfile robertson_spectrum_profile(int k, const PhaseCollection& z);

struct IndecomposabilityCertificate {
  bool is_psd = false;
  bool is_ppt = false;
  double psd_margin = 0.0;
  double ppt_margin = 0.0;
  double detection_value = 0.0;  // Tr(W rho)
  bool certified = false;
};

IndecomposabilityCertificate indecomposability_certificate(const Witness& w, const BipartiteOperator& rho);

}  // namespace ewkit
