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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ewkit/matrix.hpp"
#include "ewkit/phases.hpp"

namespace ewkit {

enum class MapFamily {
  Reduction,
  GenReduction,
  Robertson,
  GenRobertson,
  BreuerHall,
  Transpose,
  Identity,
  Depolarizing,
  HadamardMultiplier,
};

std::string_view family_name(MapFamily family);
MapFamily parse_family(std::string_view name);

/// A map family with its parameters. All families act on M_dim(C).
///
/// Construct through the named factories, which validate the family
/// invariants (even dimension for the Robertson families, antisymmetric
/// unitary for Breuer-Hall, label count of the phase collection).
struct MapSpec {
  MapFamily family = MapFamily::Identity;
  int dim = 0;
  std::optional<PhaseCollection> phases;
  std::optional<ComplexMatrix> unitary;
  std::optional<ComplexMatrix> multiplier;

  static MapSpec reduction(int n);
  static MapSpec gen_reduction(int n, PhaseCollection z);
  static MapSpec robertson(int k);
  static MapSpec gen_robertson(int k, PhaseCollection z);
  static MapSpec breuer_hall(ComplexMatrix u);
  static MapSpec transpose(int n);
  static MapSpec identity(int n);
  static MapSpec depolarizing(int n);
  static MapSpec hadamard_multiplier(ComplexMatrix ztilde);

  // Number of 2x2 blocks (Robertson-type families only).
  int blocks() const { return dim / 2; }
};

ComplexMatrix apply_reduction(int n, const ComplexMatrix& x);
ComplexMatrix apply_gen_reduction(int n, const PhaseCollection& z, const ComplexMatrix& x);
ComplexMatrix apply_gen_robertson(int k, const PhaseCollection& z, const ComplexMatrix& x);
ComplexMatrix apply_breuer_hall(const ComplexMatrix& u, const ComplexMatrix& x);
ComplexMatrix apply_hadamard_multiplier(const ComplexMatrix& ztilde, const ComplexMatrix& x);
ComplexMatrix apply_transpose(const ComplexMatrix& x);
ComplexMatrix apply_depolarizing(const ComplexMatrix& x);

ComplexMatrix apply_map(const MapSpec& spec, const ComplexMatrix& x);

// (1-p) Tr(X) I/n + p Lambda(X).
ComplexMatrix apply_spa_map(const MapSpec& spec, double p, const ComplexMatrix& x);

// Throws Errc::InvalidUnitary unless U^dagger U = I and U^T = -U.
void validate_antisymmetric_unitary(const ComplexMatrix& u);

/// (1/n) sum_ij e_ij (x) Lambda(e_ij).
ComplexMatrix choi_matrix(const MapSpec& spec);

struct ProbeReport {
  double min_found = 0.0;
  ComplexVector worst_input;   // x of the worst <y|Lambda(|x><x|)|y>
  ComplexVector worst_output;  // y
  int samples = 0;
};

struct ProbeOptions {
  int refine_count = 20;
  int refine_iterations = 50;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Min over sampled Haar-random unit x of lambda_min(Lambda(|x><x|)),
/// followed by alternating eigenvector descent from the worst samples.
/// Deterministic in (spec, samples, seed) regardless of thread count.
ProbeReport positivity_probe(const MapSpec& spec, int samples, std::uint64_t seed,
                             const ProbeOptions& options = {});

/// M_ij = sqrt(a_i a_j)[|psi_i><psi_j| + sigma_y conj(|psi_i><psi_j|) sigma_y].
/// Result is indexed [i][j].
std::vector<std::vector<ComplexMatrix>> m_matrices(const std::vector<ComplexVector>& psis,
                                                   const std::vector<double>& alphas);

/// Schur-complement test of [[A, X], [X^dagger, B]] >= 0 for A >= 0, B > 0.
bool bhatia_block_check(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                        double tolerance = tol::psd);

struct BreuerHallEquivalence {
  bool equivalent = false;
  std::vector<cplx> factors;   // z_i with z_ij = z_i conj(z_j), when equivalent
  RealVector spectrum_generalized;
  RealVector spectrum_breuer_hall;
  double spectral_distance = 0.0;  // max |difference| of sorted spectra
};

BreuerHallEquivalence breuer_hall_equivalence(int k, const PhaseCollection& z);

// One induction step of the positivity argument for the generalized
// Robertson map: the Schur complement of 2(k-1) Phi(|psi><psi|) with respect
// to the last 2x2 block, compared against 2(k-2) Phi'(|psi'><psi'|) for the
// reduced instance with z'_ij = (1-a_k) z_ij + a_k z_ik conj(z_jk).
struct InductionStep {
  double alpha_last = 0.0;
  PhaseCollection reduced_phases{1};
  ComplexVector reduced_vector;
  ComplexMatrix schur_complement;
  ComplexMatrix reduced_image;
};

InductionStep robertson_induction_step(int k, const PhaseCollection& z, const ComplexVector& psi);

}  // namespace ewkit
