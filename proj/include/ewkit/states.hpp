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

#include <functional>
#include <string>
#include <vector>

#include "ewkit/phases.hpp"
#include "ewkit/witness.hpp"

namespace ewkit {

// P+ = (1/n) sum_ij e_ij (x) e_ij.
BipartiteOperator max_entangled(int n);

// p P+ + (1-p) I/n^2. The family is the usual one; p outside [0,1] is allowed.
BipartiteOperator isotropic(int n, double p);

// The p at which Tr(W rho_p) changes sign. Tr(W rho_p) is affine in p.
double isotropic_detection_threshold(const Witness& w);

struct ProductTerm {
  double w = 0.0;
  ComplexVector x;
  ComplexVector y;
};

/// sum_a w_a |x_a><x_a| (x) |y_a><y_a|.
struct SeparableDecomposition {
  int dim_a = 0;
  int dim_b = 0;
  std::vector<ProductTerm> terms;
  double target_residual = 0.0;  // Frobenius distance to the operator it certifies

  ComplexMatrix reconstruct() const;
  // Weights positive and vectors finite, nonzero and of the right size.
  bool terms_valid() const;
};

struct ReadingCheck {
  std::string reading;
  double trace = 0.0;
  double psd_margin = 0.0;
  double ppt_margin = 0.0;
  double detection = 0.0;
  bool passed = false;
  std::string failing_check;  // "positivity", "ppt", "detection" or empty
};

struct PptState {
  BipartiteOperator op;
  int k = 0;
  PhaseCollection z;
  Witness detection_target;
  IndecomposabilityCertificate certificate;
  double expected_detection = 0.0;  // -1/(24k(k-1))
  ReadingCheck literal;
  ReadingCheck corrected;
};

/// PPT entangled state detected by the generalized Robertson witness.
///
/// Both readings of the block rule are assembled and checked. The literal one
/// takes rho_ii = -W_ii on the diagonal blocks and is never positive; the
/// corrected one keeps the off-diagonal rule and uses
/// rho_ii = c[(I - P_b) + 2(k-1) P_b], c = 1/(4k(k-1)), P_b the projector on
/// the 2-dim block containing i. `op` holds the first reading that passes.
PptState ppt_entangled_state(int k, const PhaseCollection& z);

// A_0 = sum_ij e_ij (x) e_ij + sum_{i != j} e_ii (x) e_jj.
BipartiteOperator a0_operator(int n);

// Average over x = sum_k i^{m_k} e_k (m_1 = 0), y = conj(x): 4^{n-1} terms.
SeparableDecomposition a0_separable_decomposition(int n);

struct SpaSeparabilityCertificate {
  SeparableDecomposition decomposition;
  BipartiteOperator target;  // SPA operator at p*
  double p_star = 0.0;
  double s = 0.0;                // lambda_max(Z)
  double multiplier_min_eig = 0.0;
  double ppt_margin = 0.0;       // of the reconstruction
};

/// Explicit product decomposition of the SPA operator of the generalized
/// reduction witness, obtained by pushing the A_0 decomposition through the
/// Hadamard multiplier sI - Z on the second factor.
SpaSeparabilityCertificate spa_separability_certificate_reduction(int n, const PhaseCollection& z);

enum class TwirlKind {
  Conjugate,  // U (x) conj(U): keeps (i=k, j=l) or (i=j, k=l)
  Same,       // U (x) U: keeps (i=k, j=l) or (i=l, j=k)
};

// Average over diagonal unitaries, in closed form. <ij|rho|kl> entries only.
BipartiteOperator twirl(const BipartiteOperator& rho, TwirlKind kind = TwirlKind::Conjugate);

struct Phi6Decomposition {
  SeparableDecomposition v1;  // |psi (x) psi>
  SeparableDecomposition v2;  // |psi (x) phi>
  double c1 = 0.0;
  double c2 = 0.0;
  BipartiteOperator target;   // SPA operator at p*
  BipartiteOperator d;        // target - c1 P(V1) - c2 (I(x)S) Q(V2) (I(x)S)
  double residual = 0.0;      // Frobenius norm of the off-diagonal part of d
  double d_min = 0.0;         // smallest diagonal entry of d
};

// Printed integer vectors, unnormalized.
std::vector<ComplexVector> phi6_psi_vectors();
std::vector<ComplexVector> phi6_phi_vectors();

/// Separability certificate for the SPA of the k = 3, z = -1 Robertson witness.
Phi6Decomposition phi6_spa_decomposition();

struct HolevoForm {
  std::vector<ComplexMatrix> r_list;  // density matrices
  std::vector<ComplexMatrix> f_list;  // POVM elements
  double resolution_residual = 0.0;   // || sum F - I ||_F
  double map_residual = 0.0;          // max over basis inputs of the Frobenius error

  ComplexMatrix apply(const ComplexMatrix& x) const;
};

/// Lambda(X) = sum_i R_i Tr(F_i X) from a product decomposition of the Choi
/// matrix (normalized with 1/n). map_residual compares against the map the
/// decomposition itself encodes, or against `target` when given.
HolevoForm holevo_form(const SeparableDecomposition& dec, int n,
                       const std::function<ComplexMatrix(const ComplexMatrix&)>& target = {});

}  // namespace ewkit
