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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "ewkit/errors.hpp"

namespace ewkit {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Entrywise Hermiticity, scaled by max(1, max|M_ij|).
inline constexpr double hermitian = 1e-12;
// Eigen-residual bound, relative to the Frobenius norm of the input.
inline constexpr double eigen_relative = 1e-10;
// Margin below zero still accepted as positive semidefinite.
inline constexpr double psd = 1e-10;
}  // namespace tol

enum class Subsystem { A, B };

/// Operator on C^dim_a (x) C^dim_b, stored as a (dim_a*dim_b)^2 matrix with
/// composite index a*dim_b + b.
class BipartiteOperator {
 public:
  BipartiteOperator(int dim_a, int dim_b, ComplexMatrix mat);

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  int dim() const noexcept { return dim_a_ * dim_b_; }
  const ComplexMatrix& mat() const noexcept { return mat_; }

  cplx trace() const { return mat_.trace(); }

 private:
  int dim_a_;
  int dim_b_;
  ComplexMatrix mat_;
};

ComplexMatrix kron_matrix(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron_vector(const ComplexVector& a, const ComplexVector& b);

// Two column vectors give a vector, anything else a matrix.
template <typename A, typename B>
auto kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if constexpr (A::ColsAtCompileTime == 1 && B::ColsAtCompileTime == 1) {
    return kron_vector(ComplexVector(a), ComplexVector(b));
  } else {
    return kron_matrix(ComplexMatrix(a), ComplexMatrix(b));
  }
}

// Transposes the indices of one tensor factor only.
BipartiteOperator partial_transpose(const BipartiteOperator& op, Subsystem which = Subsystem::B);

ComplexMatrix partial_trace(const BipartiteOperator& op, Subsystem traced_out);

bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::hermitian);

struct EigenSystem {
  RealVector values;     // ascending
  ComplexMatrix vectors; // column i pairs with values[i]
};

/// Deterministic Hermitian eigendecomposition. Throws Errc::NonHermitianInput
/// when the symmetry check fails.
EigenSystem eig_hermitian(const ComplexMatrix& m);
RealVector eigenvalues_hermitian(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_psd(const ComplexMatrix& m, double tolerance = tol::psd);

// e_ij and e_i, 0-based.
ComplexMatrix basis_matrix(int n, int i, int j);
ComplexVector basis_vector(int n, int i);

// |v><v| without normalization.
ComplexMatrix outer(const ComplexVector& v);
ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v);

// Pauli matrices used across the map families.
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();

// Largest entrywise |a - b|.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace ewkit
