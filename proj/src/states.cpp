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

#include "ewkit/states.hpp"

#include <algorithm>
#include <cmath>

namespace ewkit {

BipartiteOperator max_entangled(int n) {
  if (n < 2) throw Error(Errc::DimensionMismatch, "max_entangled needs n >= 2");
  ComplexVector v = ComplexVector::Zero(n * n);
  for (int i = 0; i < n; ++i) v(i * n + i) = 1.0 / std::sqrt(static_cast<double>(n));
  return BipartiteOperator(n, n, outer(v));
}

BipartiteOperator isotropic(int n, double p) {
  const double d = static_cast<double>(n) * n;
  ComplexMatrix m = p * max_entangled(n).mat();
  m.diagonal().array() += (1.0 - p) / d;
  return BipartiteOperator(n, n, std::move(m));
}

double isotropic_detection_threshold(const Witness& w) {
  const int n = w.n();
  if (w.op.dim_b() != n) throw Error(Errc::DimensionMismatch, "isotropic states need a square bipartition");
  const double a = w.op.mat().trace().real() / (static_cast<double>(n) * n);
  const double b = (w.op.mat() * max_entangled(n).mat()).trace().real();
  if (std::abs(a - b) <= 1e-14 * std::max(1.0, std::abs(a))) {
    throw Error(Errc::DegenerateWitness, "Tr(W rho_p) does not depend on p");
  }
  return a / (a - b);
}

ComplexMatrix SeparableDecomposition::reconstruct() const {
  ComplexMatrix out = ComplexMatrix::Zero(dim_a * dim_b, dim_a * dim_b);
  for (const auto& t : terms) {
    const ComplexVector v = kron(t.x, t.y);
    out.noalias() += t.w * (v * v.adjoint());
  }
  return out;
}

bool SeparableDecomposition::terms_valid() const {
  return std::all_of(terms.begin(), terms.end(), [&](const ProductTerm& t) {
    return t.w > 0.0 && std::isfinite(t.w) && t.x.size() == dim_a && t.y.size() == dim_b &&
           t.x.allFinite() && t.y.allFinite() && t.x.norm() > 0.0 && t.y.norm() > 0.0;
  });
}

namespace {

ReadingCheck check_reading(std::string name, const ComplexMatrix& rho, int n, const Witness& w,
                           double expected) {
  ReadingCheck c;
  c.reading = std::move(name);
  const BipartiteOperator op(n, n, rho);
  c.trace = rho.trace().real();
  c.psd_margin = min_eigenvalue(rho);
  c.ppt_margin = min_eigenvalue(partial_transpose(op).mat());
  c.detection = (w.op.mat() * rho).trace().real();
  if (c.psd_margin < -tol::psd || std::abs(c.trace - 1.0) > 1e-10) {
    c.failing_check = "positivity";
  } else if (c.ppt_margin < -tol::psd) {
    c.failing_check = "ppt";
  } else if (!(c.detection < 0.0) || std::abs(c.detection - expected) > 1e-10) {
    c.failing_check = "detection";
  }
  c.passed = c.failing_check.empty();
  return c;
}

}  // namespace

PptState ppt_entangled_state(int k, const PhaseCollection& z) {
  if (k < 2 || z.labels() != k) throw Error(Errc::DimensionMismatch, "need k >= 2 and k phase labels");
  if (!z.is_unimodular()) throw Error(Errc::NonUnimodularPhases, "PPT construction needs |z_ij| = 1");
  const int n = 2 * k;
  const Witness w = choi_of_map(MapSpec::gen_robertson(k, z));
  const double c = 1.0 / (4.0 * k * (k - 1));
  const double norm = 1.0 / 3.0;
  const double expected = -1.0 / (24.0 * k * (k - 1));

  // Block (i,j) of the witness sits at rows i*n, cols j*n.
  auto wblock = [&](int i, int j) { return w.op.mat().block(i * n, j * n, n, n); };

  ComplexMatrix off = ComplexMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      auto dst = off.block(i * n, j * n, n, n);
      if ((i + j) % 2 == 0) {
        dst = -wblock(i, j);
      } else if (i / 2 == j / 2) {
        // (2m-1, 2m) and its transpose stay zero
      } else {
        dst(i, j) = z(i / 2, j / 2) * c;
      }
    }
  }

  ComplexMatrix literal = off;
  ComplexMatrix corrected = off;
  for (int i = 0; i < n; ++i) {
    literal.block(i * n, i * n, n, n) = -wblock(i, i);
    auto diag = corrected.block(i * n, i * n, n, n);
    diag.setIdentity();
    diag *= c;
    const int b = i / 2;
    diag(2 * b, 2 * b) = diag(2 * b + 1, 2 * b + 1) = 2.0 * (k - 1) * c;
  }
  literal *= norm;
  corrected *= norm;

  ReadingCheck lit = check_reading("literal", literal, n, w, expected);
  ReadingCheck cor = check_reading("corrected", corrected, n, w, expected);
  if (!lit.passed && !cor.passed) {
    throw Error(Errc::ConstructionInvalid,
                "no reading certifies: literal fails " + lit.failing_check + ", corrected fails " + cor.failing_check);
  }
  BipartiteOperator op(n, n, lit.passed ? literal : corrected);
  IndecomposabilityCertificate cert = indecomposability_certificate(w, op);
  return {std::move(op), k, z, w, cert, expected, std::move(lit), std::move(cor)};
}

BipartiteOperator a0_operator(int n) {
  if (n < 2) throw Error(Errc::DimensionMismatch, "A_0 needs n >= 2");
  ComplexMatrix m = static_cast<double>(n) * max_entangled(n).mat();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m(i * n + j, i * n + j) += 1.0;
  return BipartiteOperator(n, n, std::move(m));
}

SeparableDecomposition a0_separable_decomposition(int n) {
  if (n < 2) throw Error(Errc::DimensionMismatch, "A_0 needs n >= 2");
  if (n > 10) throw Error(Errc::DimensionMismatch, "phase average grows as 4^(n-1); n <= 10");
  static constexpr cplx powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const long long count = 1LL << (2 * (n - 1));
  const double weight = 1.0 / static_cast<double>(count);

  SeparableDecomposition dec{n, n, {}, 0.0};
  dec.terms.reserve(static_cast<size_t>(count));
  for (long long code = 0; code < count; ++code) {
    ComplexVector x(n);
    x(0) = 1.0;
    long long rest = code;
    for (int q = 1; q < n; ++q) {
      x(q) = powers[rest & 3];
      rest >>= 2;
    }
    dec.terms.push_back({weight, x, x.conjugate()});
  }
  dec.target_residual = (dec.reconstruct() - a0_operator(n).mat()).norm();
  if (dec.target_residual > 1e-10) {
    throw Error(Errc::ReconstructionFailure, "A_0 residual " + std::to_string(dec.target_residual));
  }
  return dec;
}

SpaSeparabilityCertificate spa_separability_certificate_reduction(int n, const PhaseCollection& z) {
  if (n < 2 || z.labels() != n) throw Error(Errc::DimensionMismatch, "need n >= 2 and n phase labels");
  if (!z.is_unimodular()) throw Error(Errc::NonUnimodularPhases, "certificate needs |z_ij| = 1");

  const ComplexMatrix zmat = z.phase_matrix();
  const EigenSystem zsys = eig_hermitian(zmat);
  const double s = zsys.values(n - 1);
  const ComplexMatrix ztilde = s * ComplexMatrix::Identity(n, n) - zmat;

  const double mult_min = min_eigenvalue(ztilde);
  if (mult_min < -tol::psd) throw Error(Errc::MultiplierNotCP, "sI - Z is not positive semidefinite");

  std::vector<ComplexVector> gram;
  for (int r = 0; r < n; ++r) {
    const double lam = s - zsys.values(r);
    if (lam > 1e-12 * std::max(1.0, s)) gram.push_back(std::sqrt(lam) * zsys.vectors.col(r));
  }

  const Witness w = choi_of_map(MapSpec::gen_reduction(n, z));
  const SpaResult spa_res = spa(w);
  const double p_star = spa_res.p_star;
  const double scale = p_star / (n * (n - 1));

  const SeparableDecomposition a0 = a0_separable_decomposition(n);
  SeparableDecomposition dec{n, n, {}, 0.0};
  for (const auto& t : a0.terms) {
    const double xnorm2 = t.x.squaredNorm();
    for (const auto& g : gram) {
      const ComplexVector y = g.cwiseProduct(t.y);
      const double ynorm2 = y.squaredNorm();
      if (ynorm2 <= 1e-28) continue;
      dec.terms.push_back({scale * t.w * xnorm2 * ynorm2, t.x / std::sqrt(xnorm2), y / std::sqrt(ynorm2)});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) dec.terms.push_back({scale, basis_vector(n, i), basis_vector(n, j)});

  const ComplexMatrix rec = dec.reconstruct();
  dec.target_residual = (rec - spa_res.spa_operator.mat()).norm();
  if (dec.target_residual > 1e-8) {
    throw Error(Errc::ReconstructionFailure, "SPA residual " + std::to_string(dec.target_residual));
  }
  const double ppt = min_eigenvalue(partial_transpose(BipartiteOperator(n, n, rec)).mat());
  return {std::move(dec), spa_res.spa_operator, p_star, s, mult_min, ppt};
}

BipartiteOperator twirl(const BipartiteOperator& rho, TwirlKind kind) {
  const int n = rho.dim_a();
  if (rho.dim_b() != n) throw Error(Errc::DimensionMismatch, "twirl needs equal local dimensions");
  const ComplexMatrix& m = rho.mat();
  ComplexMatrix out = ComplexMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < n; ++b) {
          const bool keep = (i == j && a == b) ||
                            (kind == TwirlKind::Conjugate ? (i == a && j == b) : (i == b && a == j));
          if (keep) out(i * n + a, j * n + b) = m(i * n + a, j * n + b);
        }
  return BipartiteOperator(n, n, std::move(out));
}

std::vector<ComplexVector> phi6_psi_vectors() {
  auto v = [](std::initializer_list<double> e) {
    ComplexVector out(6);
    int i = 0;
    for (double x : e) out(i++) = x;
    return out;
  };
  return {v({1, 0, 1, 0, 1, 0}), v({1, 0, 0, 1, 0, 1}), v({0, 1, 1, 0, 0, 1}), v({0, 1, 0, 1, 1, 0})};
}

std::vector<ComplexVector> phi6_phi_vectors() {
  auto v = [](std::initializer_list<double> e) {
    ComplexVector out(6);
    int i = 0;
    for (double x : e) out(i++) = x;
    return out;
  };
  return {v({1, 0, 1, 0, 1, 0}), v({1, 0, 0, -1, 0, -1}), v({0, 1, -1, 0, 0, 1}), v({0, 1, 0, 1, -1, 0})};
}

namespace {

// Nonnegative least squares in two unknowns: min ||c1 a1 + c2 a2 - b||, c >= 0.
std::pair<double, double> nnls2(const Eigen::VectorXd& a1, const Eigen::VectorXd& a2, const Eigen::VectorXd& b) {
  auto cost = [&](double c1, double c2) { return (c1 * a1 + c2 * a2 - b).squaredNorm(); };
  std::vector<std::pair<double, double>> candidates{{0.0, 0.0}};
  if (a1.squaredNorm() > 0) candidates.emplace_back(std::max(0.0, a1.dot(b) / a1.squaredNorm()), 0.0);
  if (a2.squaredNorm() > 0) candidates.emplace_back(0.0, std::max(0.0, a2.dot(b) / a2.squaredNorm()));
  Eigen::Matrix2d g;
  g << a1.dot(a1), a1.dot(a2), a2.dot(a1), a2.dot(a2);
  if (std::abs(g.determinant()) > 1e-14 * g.norm() * g.norm()) {
    const Eigen::Vector2d c = g.ldlt().solve(Eigen::Vector2d(a1.dot(b), a2.dot(b)));
    if (c(0) >= 0 && c(1) >= 0) candidates.emplace_back(c(0), c(1));
  }
  return *std::min_element(candidates.begin(), candidates.end(), [&](const auto& l, const auto& r) {
    return cost(l.first, l.second) < cost(r.first, r.second);
  });
}

Eigen::VectorXd off_diagonal_entries(const ComplexMatrix& m) {
  // real and imaginary parts of every off-diagonal entry
  const Eigen::Index d = m.rows();
  Eigen::VectorXd out(2 * d * (d - 1));
  Eigen::Index at = 0;
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c)
      if (r != c) {
        out(at++) = m(r, c).real();
        out(at++) = m(r, c).imag();
      }
  return out;
}

}  // namespace

Phi6Decomposition phi6_spa_decomposition() {
  constexpr int k = 3;
  constexpr int n = 2 * k;
  const Witness w = choi_of_map(MapSpec::gen_robertson(k, PhaseCollection::uniform(k, -1.0)));
  const SpaResult spa_res = spa(w);

  const auto psi = phi6_psi_vectors();
  const auto phi = phi6_phi_vectors();
  SeparableDecomposition v1{n, n, {}, 0.0};
  SeparableDecomposition v2{n, n, {}, 0.0};
  for (size_t a = 0; a < psi.size(); ++a) {
    v1.terms.push_back({1.0, psi[a].normalized(), psi[a].normalized()});
    v2.terms.push_back({1.0, psi[a].normalized(), phi[a].normalized()});
  }

  const ComplexMatrix sigma = kron(ComplexMatrix::Identity(n, n), kron(ComplexMatrix::Identity(k, k), sigma_x()));
  const ComplexMatrix part1 = twirl(BipartiteOperator(n, n, v1.reconstruct()), TwirlKind::Conjugate).mat();
  const ComplexMatrix part2 = sigma * twirl(BipartiteOperator(n, n, v2.reconstruct()), TwirlKind::Same).mat() * sigma;

  const ComplexMatrix& target = spa_res.spa_operator.mat();
  const auto [c1, c2] = nnls2(off_diagonal_entries(part1), off_diagonal_entries(part2), off_diagonal_entries(target));
  ComplexMatrix d = target - c1 * part1 - c2 * part2;

  const double residual = off_diagonal_entries(d).norm();
  const double d_min = d.diagonal().real().minCoeff();
  if (residual > 1e-8 || d_min < -1e-8) {
    throw Error(Errc::CertificateFailed,
                "phi6 remainder not diagonal-PSD: off-diagonal " + std::to_string(residual) + ", min " +
                    std::to_string(d_min));
  }
  return {std::move(v1), std::move(v2), c1,       c2, spa_res.spa_operator, BipartiteOperator(n, n, std::move(d)),
          residual,      d_min};
}

ComplexMatrix HolevoForm::apply(const ComplexMatrix& x) const {
  ComplexMatrix out = ComplexMatrix::Zero(r_list.empty() ? 0 : r_list.front().rows(),
                                          r_list.empty() ? 0 : r_list.front().cols());
  for (size_t i = 0; i < r_list.size(); ++i) out += r_list[i] * (f_list[i] * x).trace();
  return out;
}

HolevoForm holevo_form(const SeparableDecomposition& dec, int n,
                       const std::function<ComplexMatrix(const ComplexMatrix&)>& target) {
  if (dec.terms.empty()) throw Error(Errc::NotTracePreserving, "empty decomposition");
  if (dec.dim_a != n) throw Error(Errc::DimensionMismatch, "decomposition input dimension differs from n");

  HolevoForm form;
  ComplexMatrix sum_f = ComplexMatrix::Zero(n, n);
  for (const auto& t : dec.terms) {
    const double xx = t.x.squaredNorm();
    const double yy = t.y.squaredNorm();
    const ComplexVector xbar = t.x.conjugate() / std::sqrt(xx);
    form.f_list.push_back(n * t.w * xx * yy * outer(xbar));
    form.r_list.push_back(outer(t.y) / yy);
    sum_f += form.f_list.back();
  }
  form.resolution_residual = (sum_f - ComplexMatrix::Identity(n, n)).norm();
  if (form.resolution_residual > 1e-6) {
    throw Error(Errc::NotTracePreserving, "sum of F_i misses the identity by " + std::to_string(form.resolution_residual));
  }

  // Lambda(X) = n Tr_A[(X^T (x) I) C].
  const BipartiteOperator choi(dec.dim_a, dec.dim_b, dec.reconstruct());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const ComplexMatrix e = basis_matrix(n, a, b);
      ComplexMatrix expected;
      if (target) {
        expected = target(e);
      } else {
        const ComplexMatrix lifted = kron(ComplexMatrix(e.transpose()), ComplexMatrix::Identity(dec.dim_b, dec.dim_b));
        expected = static_cast<double>(n) * partial_trace(BipartiteOperator(n, dec.dim_b, lifted * choi.mat()), Subsystem::A);
      }
      form.map_residual = std::max(form.map_residual, (form.apply(e) - expected).norm());
    }
  }
  return form;
}

}  // namespace ewkit
