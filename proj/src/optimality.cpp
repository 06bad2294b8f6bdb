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

#include "ewkit/optimality.hpp"

#include <algorithm>
#include <cmath>

namespace ewkit {

std::string ProductVector::label() const {
  switch (tag) {
    case VectorTag::F: return "f_" + std::to_string(k + 1) + std::to_string(l + 1);
    case VectorTag::G: return "g_" + std::to_string(k + 1) + std::to_string(l + 1);
    case VectorTag::Diag: return "diag_" + std::to_string(k + 1);
  }
  return "?";
}

ProductVectorSet spanning_vectors(int n, const PairAngles& angles) {
  if (n < 2) throw Error(Errc::DimensionMismatch, "spanning set needs n >= 2");
  const cplx i_unit(0.0, 1.0);
  ProductVectorSet set{n, {}};
  set.vectors.reserve(static_cast<size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    for (int l = k + 1; l < n; ++l) {
      auto it = angles.find({k, l});
      const double alpha = it == angles.end() ? 0.0 : it->second;
      const cplx w = std::polar(1.0, -alpha / 2.0);
      const ComplexVector ek = basis_vector(n, k);
      const ComplexVector el = basis_vector(n, l);

      ComplexVector fx = ek + w * el;
      set.vectors.push_back({VectorTag::F, k, l, fx, fx, kron(fx, fx)});

      ComplexVector gx = ek + i_unit * w * el;
      ComplexVector gy = ek - i_unit * w * el;
      set.vectors.push_back({VectorTag::G, k, l, gx, gy, kron(gx, gy)});
    }
  }
  for (int k = 0; k < n; ++k) {
    const ComplexVector ek = basis_vector(n, k);
    set.vectors.push_back({VectorTag::Diag, k, k, ek, ek, kron(ek, ek)});
  }
  return set;
}

PairAngles reduction_angles(const PhaseCollection& z) {
  PairAngles out;
  for (const auto& [i, j] : z.pairs()) out[{i, j}] = z.angle(i, j);
  return out;
}

PairAngles robertson_angles(int k, const PhaseCollection& z) {
  if (z.labels() != k) throw Error(Errc::DimensionMismatch, "phase labels must equal the block count");
  PairAngles out;
  for (int a = 0; a < 2 * k; ++a) {
    for (int b = a + 1; b < 2 * k; ++b) {
      const int ba = a / 2;
      const int bb = b / 2;
      out[{a, b}] = ba == bb ? 0.0 : z.angle(ba, bb);
    }
  }
  return out;
}

int span_rank(const ProductVectorSet& set, double relative_cutoff) {
  if (set.vectors.empty()) return 0;
  const auto count = static_cast<Eigen::Index>(set.vectors.size());
  ComplexMatrix gram(count, count);
  for (Eigen::Index a = 0; a < count; ++a)
    for (Eigen::Index b = 0; b < count; ++b) gram(a, b) = set.vectors[a].v.dot(set.vectors[b].v);
  const RealVector ev = eigenvalues_hermitian(gram);
  const double cutoff = relative_cutoff * ev(count - 1);
  return static_cast<int>((ev.array() > cutoff).count());
}

OptimalityCertificate optimality_certificate(const Witness& w, const ProductVectorSet& set, double tolerance) {
  if (set.dim != w.op.dim_a() || set.dim != w.op.dim_b()) {
    throw Error(Errc::DimensionMismatch, "vector set dimension does not match the witness");
  }
  OptimalityCertificate cert;
  const double bound = tolerance * w.op.mat().norm();
  for (const auto& pv : set.vectors) {
    const ComplexVector v = pv.v / pv.v.norm();
    const double value = std::abs(v.dot(w.op.mat() * v));
    cert.max_abs_expectation = std::max(cert.max_abs_expectation, value);
    if (value > bound) cert.failing.push_back(pv.label());
  }
  cert.all_zero = cert.failing.empty();
  cert.span_rank = span_rank(set);
  cert.certified = cert.all_zero && cert.span_rank == set.dim * set.dim;
  return cert;
}

namespace {

CorrectionReading correction_reading(int n, const Witness& w, int k, int l, double scale, int probe_samples,
                                     std::uint64_t seed) {
  ComplexMatrix q =
      scale * (kron(basis_matrix(n, k, k), basis_matrix(n, l, l)) + kron(basis_matrix(n, l, l), basis_matrix(n, k, k)));
  BipartiteOperator corrected(n, n, w.op.mat() - q / static_cast<double>(n * (n - 1)));
  CorrectionReading r{scale, BipartiteOperator(n, n, std::move(q)), corrected, 0.0, 0.0, 0.0, false};
  r.pt_margin = min_eigenvalue(partial_transpose(corrected).mat());
  r.block_probe_min = block_positivity_probe(corrected, probe_samples, seed).min_found;
  r.lambda_min = min_eigenvalue(corrected.mat());
  r.still_witness = r.pt_margin >= -tol::psd && r.block_probe_min >= -tol::psd && r.lambda_min < -tol::psd;
  return r;
}

}  // namespace

NonOptimalityCorrection non_optimality_correction(int n, const PhaseCollection& z, LabelPair pair,
                                                  int probe_samples, std::uint64_t seed) {
  auto [k, l] = pair;
  if (k > l) std::swap(k, l);
  const double modulus = std::abs(z(k, l));
  if (std::abs(modulus - 1.0) <= 1e-12) {
    throw Error(Errc::PhaseOnBoundary, "|z_kl| = 1 leaves nothing to subtract");
  }
  const Witness w = choi_of_map(MapSpec::gen_reduction(n, z));
  CorrectionReading literal = correction_reading(n, w, k, l, 1.0 - modulus * modulus, probe_samples, seed);
  const bool failed = !literal.still_witness;
  CorrectionReading adopted = failed ? correction_reading(n, w, k, l, 1.0 - modulus, probe_samples, seed) : literal;
  const bool ok = adopted.still_witness;
  return {std::move(literal), std::move(adopted), failed, ok};
}

}  // namespace ewkit
