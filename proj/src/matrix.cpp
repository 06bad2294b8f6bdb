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

#include "ewkit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace ewkit {

BipartiteOperator::BipartiteOperator(int dim_a, int dim_b, ComplexMatrix mat)
    : dim_a_(dim_a), dim_b_(dim_b), mat_(std::move(mat)) {
  if (dim_a < 1 || dim_b < 1) {
    throw Error(Errc::DimensionMismatch, "subsystem dimensions must be positive");
  }
  if (mat_.rows() != dim_a * dim_b || mat_.cols() != dim_a * dim_b) {
    throw Error(Errc::DimensionMismatch,
                "operator is " + std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()) +
                    ", expected " + std::to_string(dim_a * dim_b) + " square");
  }
}

ComplexMatrix kron_matrix(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron_vector(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

BipartiteOperator partial_transpose(const BipartiteOperator& op, Subsystem which) {
  const int da = op.dim_a();
  const int db = op.dim_b();
  const ComplexMatrix& m = op.mat();
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < da; ++i) {
    for (int a = 0; a < db; ++a) {
      for (int j = 0; j < da; ++j) {
        for (int b = 0; b < db; ++b) {
          const cplx v = m(i * db + a, j * db + b);
          if (which == Subsystem::B) {
            out(i * db + b, j * db + a) = v;
          } else {
            out(j * db + a, i * db + b) = v;
          }
        }
      }
    }
  }
  return {da, db, std::move(out)};
}

ComplexMatrix partial_trace(const BipartiteOperator& op, Subsystem traced_out) {
  const int da = op.dim_a();
  const int db = op.dim_b();
  const ComplexMatrix& m = op.mat();
  if (traced_out == Subsystem::B) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int b = 0; b < db; ++b) out(i, j) += m(i * db + b, j * db + b);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int a = 0; a < db; ++a)
    for (int b = 0; b < db; ++b)
      for (int i = 0; i < da; ++i) out(a, b) += m(i * db + a, i * db + b);
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance * scale;
}

namespace {

void require_hermitian(const ComplexMatrix& m) {
  if (m.rows() == 0) throw Error(Errc::ShapeMismatch, "empty matrix");
  if (!is_hermitian(m)) {
    throw Error(Errc::NonHermitianInput, "matrix fails the Hermiticity check");
  }
}

}  // namespace

EigenSystem eig_hermitian(const ComplexMatrix& m) {
  require_hermitian(m);
  // Symmetrize so rounding-level asymmetry does not leak into the solver.
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::NonHermitianInput, "eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigenvalues_hermitian(const ComplexMatrix& m) {
  require_hermitian(m);
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::NonHermitianInput, "eigensolver did not converge");
  }
  return solver.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m) { return eigenvalues_hermitian(m)(0); }

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::ShapeMismatch, "Hadamard product needs equal shapes");
  }
  return a.cwiseProduct(b);
}

bool is_psd(const ComplexMatrix& m, double tolerance) { return min_eigenvalue(m) >= -tolerance; }

ComplexMatrix basis_matrix(int n, int i, int j) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

ComplexVector basis_vector(int n, int i) {
  ComplexVector e = ComplexVector::Zero(n);
  e(i) = 1.0;
  return e;
}

ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

ComplexMatrix outer(const ComplexVector& u, const ComplexVector& v) { return u * v.adjoint(); }

ComplexMatrix sigma_x() {
  ComplexMatrix s(2, 2);
  s << 0.0, 1.0, 1.0, 0.0;
  return s;
}

ComplexMatrix sigma_y() {
  ComplexMatrix s(2, 2);
  s << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::ShapeMismatch, "cannot compare matrices of different shapes");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace ewkit
