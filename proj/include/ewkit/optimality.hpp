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
#include <map>
#include <string>
#include <vector>

#include "ewkit/phases.hpp"
#include "ewkit/witness.hpp"

namespace ewkit {

enum class VectorTag { F, G, Diag };

struct ProductVector {
  VectorTag tag = VectorTag::Diag;
  int k = 0;  // 0-based basis indices
  int l = 0;
  ComplexVector x;
  ComplexVector y;
  ComplexVector v;  // kron(x, y)

  // "f_12", "g_13", "diag_2" with 1-based indices.
  std::string label() const;
};

struct ProductVectorSet {
  int dim = 0;
  std::vector<ProductVector> vectors;
};

// Phase angle alpha_kl per basis pair k < l; pairs not listed use 0.
using PairAngles = std::map<LabelPair, double>;

/// For each k < l:
///   f_kl = (e_k + w e_l) (x) (e_k + w e_l),
///   g_kl = (e_k + i w e_l) (x) (e_k - i w e_l),   w = exp(-i alpha_kl / 2),
/// plus e_k (x) e_k for each k: n^2 vectors in total.
ProductVectorSet spanning_vectors(int n, const PairAngles& angles);

// alpha_kl = arg z_kl.
PairAngles reduction_angles(const PhaseCollection& z);

// Angles over the 2k basis indices of the generalized Robertson witness:
// a pair in blocks (b, b') with b != b' takes arg z_bb'; a pair inside one
// block takes 0.
PairAngles robertson_angles(int k, const PhaseCollection& z);

// Rank of the Gram matrix with eigenvalue cutoff relative_cutoff * largest.
int span_rank(const ProductVectorSet& set, double relative_cutoff = 1e-9);

struct OptimalityCertificate {
  bool all_zero = false;
  double max_abs_expectation = 0.0;  // over unit-normalized vectors
  int span_rank = 0;
  bool certified = false;
  std::vector<std::string> failing;  // labels whose expectation exceeded the bound
};

/// Sufficient (one-directional) optimality test: every vector in the set is a
/// zero of <v|W|v> (within tolerance * ||W||_F) and the set spans the space.
OptimalityCertificate optimality_certificate(const Witness& w, const ProductVectorSet& set,
                                             double tolerance = 1e-10);

// One choice of subtraction weight c: Q = c (e_kk(x)e_ll + e_ll(x)e_kk), W - Q / (n(n-1)).
struct CorrectionReading {
  double scale = 0.0;
  BipartiteOperator q;
  BipartiteOperator corrected;
  double pt_margin = 0.0;  // lambda_min of the corrected partial transpose
  double block_probe_min = 0.0;
  double lambda_min = 0.0;  // still negative for a genuine witness
  bool still_witness = false;
};

// The literal weight is 1 - |z_kl|^2. For 0 < |z_kl| < 1 it overshoots: the
// partial transpose on span{e_k(x)e_l, e_l(x)e_k} keeps eigenvalue |z|^2 - |z| < 0.
// The largest weight that keeps the PT block PSD is 1 - |z_kl|, used as fallback.
struct NonOptimalityCorrection {
  CorrectionReading literal;
  CorrectionReading adopted;  // literal if it works, else the 1 - |z_kl| weight
  bool literal_failed;
  bool still_witness;
};

NonOptimalityCorrection non_optimality_correction(int n, const PhaseCollection& z, LabelPair pair,
                                                  int probe_samples = 2000, std::uint64_t seed = 42);

}  // namespace ewkit
