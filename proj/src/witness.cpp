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

#include "ewkit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ewkit/random.hpp"
#include "parallel.hpp"

namespace ewkit {

Witness make_witness(BipartiteOperator op, MapSpec source) {
  if (!is_hermitian(op.mat())) throw Error(Errc::NonHermitianInput, "witness operator must be Hermitian");
  const double trace = op.trace().real();
  return Witness{std::move(op), std::move(source), trace};
}

Witness choi_of_map(const MapSpec& spec) {
  return make_witness(BipartiteOperator(spec.dim, spec.dim, choi_matrix(spec)), spec);
}

double min_eigenvalue(const Witness& w) { return min_eigenvalue(w.op.mat()); }

double gen_reduction_lambda_min_via_Z(int n, const PhaseCollection& z) {
  if (z.labels() != n) throw Error(Errc::DimensionMismatch, "phase collection label count must equal n");
  if (!z.is_unimodular()) throw Error(Errc::NonUnimodularPhases, "Z route needs |z_ij| = 1");
  const RealVector ev = eigenvalues_hermitian(z.phase_matrix());
  return -ev(n - 1) / static_cast<double>(n * (n - 1));
}

BipartiteOperator spa_operator(const Witness& w, double p) {
  const int d = w.op.dim();
  ComplexMatrix m = (1.0 - p) / d * ComplexMatrix::Identity(d, d) + p * w.op.mat();
  return {w.op.dim_a(), w.op.dim_b(), std::move(m)};
}

SpaResult spa(const Witness& w) {
  if (std::abs(w.normalized_trace - 1.0) > 1e-10) {
    throw Error(Errc::NotNormalized, "SPA needs a unit-trace witness, got trace " + std::to_string(w.normalized_trace));
  }
  const double lambda = min_eigenvalue(w);
  if (lambda >= -tol::psd) {
    return {lambda, 1.0, w.op, lambda, true};
  }
  const double p_star = 1.0 / (1.0 + std::abs(lambda) * w.op.dim());
  BipartiteOperator op = spa_operator(w, p_star);
  const double margin = min_eigenvalue(op.mat());
  return {lambda, p_star, std::move(op), margin, false};
}

std::vector<WeightedOperator> reduction_ptranspose_decomposition(int n, const PhaseCollection& z) {
  if (n < 2 || z.labels() != n) throw Error(Errc::DimensionMismatch, "need n >= 2 and n phase labels");
  const double weight = 1.0 / (n * (n - 1));
  std::vector<WeightedOperator> out;
  for (const auto& [i, j] : z.pairs()) {
    const cplx zij = z(i, j);
    ComplexMatrix p = kron(basis_matrix(n, i, i), basis_matrix(n, j, j)) +
                      kron(basis_matrix(n, j, j), basis_matrix(n, i, i)) -
                      zij * kron(basis_matrix(n, i, j), basis_matrix(n, j, i)) -
                      std::conj(zij) * kron(basis_matrix(n, j, i), basis_matrix(n, i, j));
    out.push_back({weight, i, j, std::move(p)});
  }
  return out;
}

namespace {

struct ProductSample {
  double value;
  ComplexVector x;
  ComplexVector y;
};

double product_expectation(const ComplexMatrix& w, const ComplexVector& x, const ComplexVector& y) {
  const ComplexVector v = kron(x, y);
  return v.dot(w * v).real();
}

// (I (x) y)^dagger W (I (x) y) when `fix_second`, else (x (x) I)^dagger W (x (x) I).
ComplexMatrix compress(const ComplexMatrix& w, int da, int db, const ComplexVector& fixed, bool fix_second) {
  const ComplexMatrix embed = fix_second ? kron(ComplexMatrix::Identity(da, da), ComplexMatrix(fixed))
                                         : kron(ComplexMatrix(fixed), ComplexMatrix::Identity(db, db));
  ComplexMatrix m = embed.adjoint() * w * embed;
  return 0.5 * (m + m.adjoint());
}

}  // namespace

ProbeReport block_positivity_probe(const BipartiteOperator& w, int samples, std::uint64_t seed,
                                   const ProbeOptions& options) {
  if (samples < 1) throw Error(Errc::DimensionMismatch, "probe needs at least one sample");
  if (!is_hermitian(w.mat())) throw Error(Errc::NonHermitianInput, "block-positivity probe needs a Hermitian operator");
  const int da = w.dim_a();
  const int db = w.dim_b();
  const ComplexMatrix& m = w.mat();

  std::vector<ProductSample> results(samples);
  detail::parallel_for(samples, options.threads, [&](int i) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(i));
    ComplexVector x = random_unit_vector(da, rng);
    ComplexVector y = random_unit_vector(db, rng);
    results[i] = {product_expectation(m, x, y), std::move(x), std::move(y)};
  });

  std::vector<int> order(samples);
  std::iota(order.begin(), order.end(), 0);
  const int keep = std::min(samples, std::max(0, options.refine_count));
  std::partial_sort(order.begin(), order.begin() + keep, order.end(), [&](int a, int b) {
    return results[a].value < results[b].value || (results[a].value == results[b].value && a < b);
  });

  ProductSample best = results[order[0]];
  for (int r = 0; r < keep; ++r) {
    ComplexVector x = results[order[r]].x;
    ComplexVector y = results[order[r]].y;
    for (int it = 0; it < options.refine_iterations; ++it) {
      x = eig_hermitian(compress(m, da, db, y, true)).vectors.col(0);
      const EigenSystem ey = eig_hermitian(compress(m, da, db, x, false));
      y = ey.vectors.col(0);
      if (ey.values(0) < best.value) best = {ey.values(0), x, y};
    }
  }
  return {best.value, best.x, best.y, samples};
}

int SpectrumProfile::total() const {
  int count = zero_count;
  for (const auto& c : negatives) count += c.multiplicity;
  for (const auto& c : positives) count += c.multiplicity;
  return count;
}

double SpectrumProfile::weighted_sum() const {
  double sum = 0.0;
  for (const auto& c : negatives) sum += c.value * c.multiplicity;
  for (const auto& c : positives) sum += c.value * c.multiplicity;
  return sum;
}

std::vector<SpectrumCluster> cluster_spectrum(const RealVector& ascending, double tolerance) {
  std::vector<SpectrumCluster> out;
  double running = 0.0;
  double previous = 0.0;
  for (Eigen::Index i = 0; i < ascending.size(); ++i) {
    const double v = ascending(i);
    if (out.empty() || v - previous > tolerance) {
      if (!out.empty()) out.back().value = running / out.back().multiplicity;
      out.push_back({v, 0});
      running = 0.0;
    }
    out.back().multiplicity += 1;
    running += v;
    previous = v;
  }
  if (!out.empty()) out.back().value = running / out.back().multiplicity;
  return out;
}

SpectrumProfile spectrum_profile(const ComplexMatrix& hermitian, double tolerance) {
  SpectrumProfile profile;
  profile.trace = hermitian.trace().real();
  for (const auto& c : cluster_spectrum(eigenvalues_hermitian(hermitian), tolerance)) {
    if (std::abs(c.value) <= tolerance) {
      profile.zero_count += c.multiplicity;
    } else if (c.value < 0.0) {
      profile.negatives.push_back(c);
    } else {
      profile.positives.push_back(c);
    }
  }
  return profile;
}

SpectrumProfile robertson_spectrum_profile(int k, const PhaseCollection& z) {
  return spectrum_profile(choi_matrix(MapSpec::gen_robertson(k, z)));
}

IndecomposabilityCertificate indecomposability_certificate(const Witness& w, const BipartiteOperator& rho) {
  if (rho.dim_a() != w.op.dim_a() || rho.dim_b() != w.op.dim_b()) {
    throw Error(Errc::DimensionMismatch, "state and witness live on different spaces");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-10) throw Error(Errc::NotNormalized, "state must have unit trace");
  IndecomposabilityCertificate cert;
  cert.psd_margin = min_eigenvalue(rho.mat());
  cert.ppt_margin = min_eigenvalue(partial_transpose(rho).mat());
  cert.is_psd = cert.psd_margin >= -tol::psd;
  cert.is_ppt = cert.ppt_margin >= -tol::psd;
  cert.detection_value = (w.op.mat() * rho.mat()).trace().real();
  cert.certified = cert.is_psd && cert.is_ppt && cert.detection_value < -tol::psd;
  return cert;
}

}  // namespace ewkit
