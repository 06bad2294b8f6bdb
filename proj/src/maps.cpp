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

#include "ewkit/maps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "ewkit/random.hpp"
#include "parallel.hpp"

namespace ewkit {

namespace {

constexpr std::array<std::pair<MapFamily, std::string_view>, 9> kFamilyNames{{
    {MapFamily::Reduction, "reduction"},
    {MapFamily::GenReduction, "gen-reduction"},
    {MapFamily::Robertson, "robertson"},
    {MapFamily::GenRobertson, "gen-robertson"},
    {MapFamily::BreuerHall, "breuer-hall"},
    {MapFamily::Transpose, "transpose"},
    {MapFamily::Identity, "identity"},
    {MapFamily::Depolarizing, "depolarizing"},
    {MapFamily::HadamardMultiplier, "hadamard-multiplier"},
}};

void require_square(const ComplexMatrix& x, int n, std::string_view what) {
  if (x.rows() != n || x.cols() != n) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " expects a " + std::to_string(n) + "x" +
                                             std::to_string(n) + " input, got " +
                                             std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

void require_labels(const PhaseCollection& z, int labels) {
  if (z.labels() != labels) {
    throw Error(Errc::DimensionMismatch, "phase collection has " + std::to_string(z.labels()) +
                                             " labels, expected " + std::to_string(labels));
  }
}

// R_2 on a 2x2 block.
ComplexMatrix reduction2(const ComplexMatrix& y) {
  return y.trace() * ComplexMatrix::Identity(2, 2) - y;
}

}  // namespace

std::string_view family_name(MapFamily family) {
  for (const auto& [f, name] : kFamilyNames)
    if (f == family) return name;
  return "unknown";
}

MapFamily parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames)
    if (n == name) return f;
  throw Error(Errc::ParseError, "unknown map family '" + std::string(name) + "'");
}

MapSpec MapSpec::reduction(int n) {
  if (n < 2) throw Error(Errc::DimensionMismatch, "reduction map needs n >= 2");
  MapSpec s;
  s.family = MapFamily::Reduction;
  s.dim = n;
  return s;
}

MapSpec MapSpec::gen_reduction(int n, PhaseCollection z) {
  MapSpec s = reduction(n);
  require_labels(z, n);
  s.family = MapFamily::GenReduction;
  s.phases = std::move(z);
  return s;
}

MapSpec MapSpec::robertson(int k) {
  if (k < 2) throw Error(Errc::DimensionMismatch, "Robertson map needs k >= 2");
  MapSpec s;
  s.family = MapFamily::Robertson;
  s.dim = 2 * k;
  return s;
}

MapSpec MapSpec::gen_robertson(int k, PhaseCollection z) {
  MapSpec s = robertson(k);
  require_labels(z, k);
  s.family = MapFamily::GenRobertson;
  s.phases = std::move(z);
  return s;
}

MapSpec MapSpec::breuer_hall(ComplexMatrix u) {
  if (u.rows() % 2 != 0) throw Error(Errc::OddDimension, "Breuer-Hall map needs an even dimension");
  if (u.rows() < 4) throw Error(Errc::DimensionMismatch, "Breuer-Hall map needs dimension >= 4");
  validate_antisymmetric_unitary(u);
  MapSpec s;
  s.family = MapFamily::BreuerHall;
  s.dim = static_cast<int>(u.rows());
  s.unitary = std::move(u);
  return s;
}

MapSpec MapSpec::transpose(int n) {
  if (n < 1) throw Error(Errc::DimensionMismatch, "dimension must be positive");
  MapSpec s;
  s.family = MapFamily::Transpose;
  s.dim = n;
  return s;
}

MapSpec MapSpec::identity(int n) {
  MapSpec s = transpose(n);
  s.family = MapFamily::Identity;
  return s;
}

MapSpec MapSpec::depolarizing(int n) {
  MapSpec s = transpose(n);
  s.family = MapFamily::Depolarizing;
  return s;
}

MapSpec MapSpec::hadamard_multiplier(ComplexMatrix ztilde) {
  if (ztilde.rows() != ztilde.cols() || ztilde.rows() < 1) {
    throw Error(Errc::ShapeMismatch, "multiplier must be square");
  }
  MapSpec s;
  s.family = MapFamily::HadamardMultiplier;
  s.dim = static_cast<int>(ztilde.rows());
  s.multiplier = std::move(ztilde);
  return s;
}

void validate_antisymmetric_unitary(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw Error(Errc::InvalidUnitary, "U must be square");
  const auto n = u.rows();
  if (max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(n, n)) > tol::hermitian * 10) {
    throw Error(Errc::InvalidUnitary, "U is not unitary");
  }
  if (max_abs_diff(u.transpose(), -u) > tol::hermitian * 10) {
    throw Error(Errc::InvalidUnitary, "U is not antisymmetric");
  }
}

ComplexMatrix apply_reduction(int n, const ComplexMatrix& x) {
  if (n < 2) throw Error(Errc::DimensionMismatch, "reduction map needs n >= 2");
  require_square(x, n, "reduction map");
  return (x.trace() * ComplexMatrix::Identity(n, n) - x) / static_cast<double>(n - 1);
}

ComplexMatrix apply_gen_reduction(int n, const PhaseCollection& z, const ComplexMatrix& x) {
  if (n < 2) throw Error(Errc::DimensionMismatch, "reduction map needs n >= 2");
  require_square(x, n, "generalized reduction map");
  require_labels(z, n);
  // e_ii -> (I - e_ii)/(n-1), e_ij -> -z_ij e_ij/(n-1).
  ComplexMatrix out(n, n);
  const cplx tr = x.trace();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out(i, j) = i == j ? tr - x(i, i) : -z(i, j) * x(i, j);
    }
  }
  return out / static_cast<double>(n - 1);
}

ComplexMatrix apply_gen_robertson(int k, const PhaseCollection& z, const ComplexMatrix& x) {
  if (k < 2) throw Error(Errc::DimensionMismatch, "generalized Robertson map needs k >= 2");
  if (x.rows() % 2 != 0 || x.cols() % 2 != 0) {
    throw Error(Errc::OddDimension, "generalized Robertson map acts on even dimensions");
  }
  require_square(x, 2 * k, "generalized Robertson map");
  require_labels(z, k);
  const cplx tr = x.trace();
  ComplexMatrix out(2 * k, 2 * k);
  for (int m = 0; m < k; ++m) {
    for (int l = 0; l < k; ++l) {
      if (m == l) {
        out.block<2, 2>(2 * m, 2 * m) = (tr - x.block<2, 2>(2 * m, 2 * m).trace()) * ComplexMatrix::Identity(2, 2);
      } else {
        // Sign as in the 4x4 Robertson map and the Breuer-Hall form with U = I (x) sigma_y.
        const ComplexMatrix b = x.block<2, 2>(2 * m, 2 * l) + reduction2(x.block<2, 2>(2 * l, 2 * m));
        out.block<2, 2>(2 * m, 2 * l) = -z(m, l) * b;
      }
    }
  }
  return out / static_cast<double>(2 * (k - 1));
}

ComplexMatrix apply_breuer_hall(const ComplexMatrix& u, const ComplexMatrix& x) {
  validate_antisymmetric_unitary(u);
  const auto n = static_cast<int>(u.rows());
  if (n % 2 != 0) throw Error(Errc::OddDimension, "Breuer-Hall map needs an even dimension");
  require_square(x, n, "Breuer-Hall map");
  const int k = n / 2;
  if (k < 2) throw Error(Errc::DimensionMismatch, "Breuer-Hall map needs dimension >= 4");
  const ComplexMatrix out = x.trace() * ComplexMatrix::Identity(n, n) - x - u * x.transpose() * u.adjoint();
  return out / static_cast<double>(2 * (k - 1));
}

ComplexMatrix apply_hadamard_multiplier(const ComplexMatrix& ztilde, const ComplexMatrix& x) {
  return hadamard(ztilde, x);
}

ComplexMatrix apply_transpose(const ComplexMatrix& x) { return x.transpose(); }

ComplexMatrix apply_depolarizing(const ComplexMatrix& x) {
  if (x.rows() != x.cols()) throw Error(Errc::DimensionMismatch, "depolarizing map needs a square input");
  const auto n = x.rows();
  return x.trace() / static_cast<double>(n) * ComplexMatrix::Identity(n, n);
}

ComplexMatrix apply_map(const MapSpec& spec, const ComplexMatrix& x) {
  switch (spec.family) {
    case MapFamily::Reduction:
      return apply_reduction(spec.dim, x);
    case MapFamily::GenReduction:
      return apply_gen_reduction(spec.dim, spec.phases.value_or(PhaseCollection(spec.dim)), x);
    case MapFamily::Robertson:
      return apply_gen_robertson(spec.blocks(), PhaseCollection(spec.blocks()), x);
    case MapFamily::GenRobertson:
      return apply_gen_robertson(spec.blocks(), spec.phases.value_or(PhaseCollection(spec.blocks())), x);
    case MapFamily::BreuerHall:
      if (!spec.unitary) throw Error(Errc::InvalidUnitary, "Breuer-Hall spec without U");
      return apply_breuer_hall(*spec.unitary, x);
    case MapFamily::Transpose:
      require_square(x, spec.dim, "transpose map");
      return apply_transpose(x);
    case MapFamily::Identity:
      require_square(x, spec.dim, "identity map");
      return x;
    case MapFamily::Depolarizing:
      require_square(x, spec.dim, "depolarizing map");
      return apply_depolarizing(x);
    case MapFamily::HadamardMultiplier:
      if (!spec.multiplier) throw Error(Errc::ShapeMismatch, "multiplier spec without matrix");
      return apply_hadamard_multiplier(*spec.multiplier, x);
  }
  throw Error(Errc::ParseError, "unhandled map family");
}

ComplexMatrix apply_spa_map(const MapSpec& spec, double p, const ComplexMatrix& x) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::DimensionMismatch, "mixing weight p must lie in [0,1]");
  require_square(x, spec.dim, "SPA map");
  return (1.0 - p) * apply_depolarizing(x) + p * apply_map(spec, x);
}

ComplexMatrix choi_matrix(const MapSpec& spec) {
  const int n = spec.dim;
  ComplexMatrix w = ComplexMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      w.block(i * n, j * n, n, n) = apply_map(spec, basis_matrix(n, i, j));
    }
  }
  return w / static_cast<double>(n);
}

namespace {

struct SampleResult {
  double value;
  ComplexVector x;
  ComplexVector y;
};

SampleResult evaluate(const MapSpec& spec, const ComplexVector& x) {
  const EigenSystem es = eig_hermitian(apply_map(spec, outer(x)));
  return {es.values(0), x, es.vectors.col(0)};
}

// Alternating descent on <y|Lambda(|x><x|)|y>: for fixed y the objective is
// u^dagger M u with u = conj(x), M_ab = <y|Lambda(e_ab)|y>.
SampleResult refine(const MapSpec& spec, const std::vector<ComplexMatrix>& images, SampleResult start,
                    int iterations) {
  const int n = spec.dim;
  SampleResult best = start;
  ComplexVector y = start.y;
  for (int it = 0; it < iterations; ++it) {
    ComplexMatrix m(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m(a, b) = y.dot(images[a * n + b] * y);
    m = 0.5 * (m + m.adjoint());
    const EigenSystem ex = eig_hermitian(m);
    const ComplexVector x = ex.vectors.col(0).conjugate();
    SampleResult next = evaluate(spec, x);
    y = next.y;
    if (next.value < best.value) best = next;
  }
  return best;
}

}  // namespace

ProbeReport positivity_probe(const MapSpec& spec, int samples, std::uint64_t seed, const ProbeOptions& options) {
  if (samples < 1) throw Error(Errc::DimensionMismatch, "probe needs at least one sample");
  const int n = spec.dim;
  std::vector<SampleResult> results(samples);
  detail::parallel_for(samples, options.threads, [&](int i) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(i));
    results[i] = evaluate(spec, random_unit_vector(n, rng));
  });

  std::vector<int> order(samples);
  std::iota(order.begin(), order.end(), 0);
  const int keep = std::min(samples, std::max(0, options.refine_count));
  std::partial_sort(order.begin(), order.begin() + keep, order.end(), [&](int a, int b) {
    return results[a].value < results[b].value || (results[a].value == results[b].value && a < b);
  });

  std::vector<ComplexMatrix> images;
  images.reserve(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) images.push_back(apply_map(spec, basis_matrix(n, a, b)));

  SampleResult best = results[order[0]];
  for (int r = 0; r < keep; ++r) {
    SampleResult polished = refine(spec, images, results[order[r]], options.refine_iterations);
    if (polished.value < best.value) best = std::move(polished);
  }
  return {best.value, best.x, best.y, samples};
}

std::vector<std::vector<ComplexMatrix>> m_matrices(const std::vector<ComplexVector>& psis,
                                                   const std::vector<double>& alphas) {
  if (psis.size() != alphas.size() || psis.empty()) {
    throw Error(Errc::DimensionMismatch, "need one weight per vector");
  }
  double total = 0.0;
  for (double a : alphas) {
    if (a < 0.0) throw Error(Errc::NormalizationError, "weights must be nonnegative");
    total += a;
  }
  if (std::abs(total - 1.0) > 1e-12) throw Error(Errc::NormalizationError, "weights must sum to 1");
  for (const auto& psi : psis) {
    if (psi.size() != 2) throw Error(Errc::DimensionMismatch, "vectors must live in C^2");
    if (std::abs(psi.norm() - 1.0) > 1e-12) throw Error(Errc::NormalizationError, "vectors must be normalized");
  }
  const ComplexMatrix sy = sigma_y();
  const size_t k = psis.size();
  std::vector<std::vector<ComplexMatrix>> m(k, std::vector<ComplexMatrix>(k));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      const ComplexMatrix pij = outer(psis[i], psis[j]);
      m[i][j] = std::sqrt(alphas[i] * alphas[j]) * (pij + sy * pij.conjugate() * sy);
    }
  }
  return m;
}

bool bhatia_block_check(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x, double tolerance) {
  if (a.rows() != x.rows() || b.rows() != x.cols() || a.rows() != a.cols() || b.rows() != b.cols()) {
    throw Error(Errc::ShapeMismatch, "block shapes do not assemble");
  }
  if (min_eigenvalue(b) <= tolerance) throw Error(Errc::SingularB, "B must be positive definite");
  const ComplexMatrix schur = a - x * b.ldlt().solve(x.adjoint());
  return min_eigenvalue(0.5 * (schur + schur.adjoint())) >= -tolerance;
}

BreuerHallEquivalence breuer_hall_equivalence(int k, const PhaseCollection& z) {
  require_labels(z, k);
  if (!z.is_unimodular()) throw Error(Errc::NonUnimodularPhases, "equivalence test needs |z_ij| = 1");
  BreuerHallEquivalence out;
  // z_ij = z_i conj(z_j) iff I + Z = v v^dagger is rank one, i.e. its largest
  // eigenvalue carries the whole trace k.
  const ComplexMatrix full = z.phase_matrix() + ComplexMatrix::Identity(k, k);
  const RealVector ev = eigenvalues_hermitian(full);
  out.equivalent = std::abs(ev(k - 1) - static_cast<double>(k)) <= 1e-10 * k;
  if (out.equivalent) {
    out.factors.push_back(1.0);
    for (int j = 1; j < k; ++j) out.factors.push_back(std::conj(z(0, j)));
  }
  const ComplexMatrix u = kron(ComplexMatrix::Identity(k, k), sigma_y());
  out.spectrum_generalized = eigenvalues_hermitian(choi_matrix(MapSpec::gen_robertson(k, z)));
  out.spectrum_breuer_hall = eigenvalues_hermitian(choi_matrix(MapSpec::breuer_hall(u)));
  out.spectral_distance = (out.spectrum_generalized - out.spectrum_breuer_hall).cwiseAbs().maxCoeff();
  return out;
}

InductionStep robertson_induction_step(int k, const PhaseCollection& z, const ComplexVector& psi) {
  if (k < 3) throw Error(Errc::DimensionMismatch, "induction step needs k >= 3");
  require_labels(z, k);
  if (psi.size() != 2 * k) throw Error(Errc::DimensionMismatch, "vector must live in C^{2k}");
  if (std::abs(psi.norm() - 1.0) > 1e-12) throw Error(Errc::NormalizationError, "vector must be normalized");

  const int last = k - 1;
  InductionStep step;
  step.alpha_last = psi.segment(2 * last, 2).squaredNorm();
  if (step.alpha_last >= 1.0 - 1e-12) {
    throw Error(Errc::NormalizationError, "weight concentrated on the last block; nothing to reduce");
  }
  const double a = step.alpha_last;

  const ComplexMatrix image = 2.0 * (k - 1) * apply_gen_robertson(k, z, outer(psi));
  const int head = 2 * last;
  const ComplexMatrix top_left = image.topLeftCorner(head, head);
  const ComplexMatrix coupling = image.topRightCorner(head, 2);
  const ComplexMatrix corner = image.bottomRightCorner(2, 2);
  step.schur_complement = top_left - coupling * corner.inverse() * coupling.adjoint();

  PhaseCollection reduced(last);
  for (const auto& [i, j] : reduced.pairs()) {
    reduced.set(i, j, (1.0 - a) * z(i, j) + a * z(i, last) * std::conj(z(j, last)));
  }
  step.reduced_phases = reduced;
  step.reduced_vector = psi.head(head) / std::sqrt(1.0 - a);
  step.reduced_image = 2.0 * (last - 1) * apply_gen_robertson(last, reduced, outer(step.reduced_vector));
  return step;
}

}  // namespace ewkit
