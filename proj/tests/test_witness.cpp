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

#include <doctest.h>

#include "ewkit/errors.hpp"
#include "ewkit/random.hpp"
#include "ewkit/states.hpp"
#include "ewkit/witness.hpp"
#include "oracles.hpp"

using namespace ewkit;

namespace {

// Random separable state: a mixture of random product pure states.
BipartiteOperator random_separable(int n, Rng& rng, int terms = 6) {
  ComplexMatrix rho = ComplexMatrix::Zero(n * n, n * n);
  double total = 0;
  for (int t = 0; t < terms; ++t) {
    const double w = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    const ComplexVector v = kron(random_unit_vector(n, rng), random_unit_vector(n, rng));
    rho += w * outer(v);
    total += w;
  }
  return BipartiteOperator(n, n, rho / total);
}

}  // namespace

TEST_CASE("reduction witness") {
  for (int n = 2; n <= 5; ++n) {
    const Witness w = choi_of_map(MapSpec::reduction(n));
    const ComplexMatrix expected =
        (ComplexMatrix::Identity(n * n, n * n) / double(n) - max_entangled(n).mat()) / double(n - 1);
    CHECK(oracle::max_abs(w.op.mat() - expected) < 1e-15);
    CHECK(w.normalized_trace == doctest::Approx(1.0));
    CHECK(std::abs(min_eigenvalue(w) + 1.0 / n) < 1e-12);
  }
}

TEST_CASE("identity map witness is P+") {
  const Witness w = choi_of_map(MapSpec::identity(2));
  CHECK(oracle::max_abs(w.op.mat() - max_entangled(2).mat()) < 1e-15);
  CHECK(is_psd(w.op.mat()));
}

TEST_CASE("generalized reduction witness blocks") {
  Rng rng = make_stream(41, 0);
  const int n = 3;
  const PhaseCollection z = random_disc_phases(n, rng);
  const Witness w = choi_of_map(MapSpec::gen_reduction(n, z));
  const double s = 1.0 / (n * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix blk = w.op.mat().block(i * n, j * n, n, n);
      const ComplexMatrix want = i == j ? ComplexMatrix(s * (ComplexMatrix::Identity(n, n) - basis_matrix(n, i, i)))
                                        : ComplexMatrix(-s * z(i, j) * basis_matrix(n, i, j));
      CHECK(oracle::max_abs(blk - want) < 1e-15);
    }
}

TEST_CASE("minimum eigenvalue of the generalized reduction witness") {
  for (int n = 3; n <= 5; ++n) {
    const Witness w = choi_of_map(MapSpec::gen_reduction(n, PhaseCollection::uniform(n, -1.0)));
    CHECK(std::abs(min_eigenvalue(w) + 1.0 / (n * (n - 1))) < 1e-12);
  }
  CHECK(gen_reduction_lambda_min_via_Z(4, PhaseCollection(4)) == doctest::Approx(-0.25));
  CHECK(gen_reduction_lambda_min_via_Z(4, PhaseCollection::uniform(4, -1.0)) == doctest::Approx(-1.0 / 12));

  Rng rng = make_stream(42, 0);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + t % 2;
    const PhaseCollection z = random_unimodular_phases(n, rng);
    const double direct = min_eigenvalue(choi_of_map(MapSpec::gen_reduction(n, z)));
    const double via = gen_reduction_lambda_min_via_Z(n, z);
    CHECK(std::abs(direct - via) < 1e-12);
    CHECK(via >= -1.0 / n - 1e-12);
    CHECK(via <= -1.0 / (n * (n - 1)) + 1e-12);
  }
  try {
    gen_reduction_lambda_min_via_Z(3, PhaseCollection::uniform(3, 0.5));
    FAIL("expected NonUnimodularPhases");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonUnimodularPhases);
  }
}

TEST_CASE("Robertson witness minimum eigenvalue") {
  for (int k = 2; k <= 3; ++k) {
    CHECK(std::abs(min_eigenvalue(choi_of_map(MapSpec::robertson(k))) + 1.0 / (2 * k)) < 1e-12);
  }
  // z = -1 at k = 3 sits at -1/12 (twice), not at -1/6.
  const Witness w = choi_of_map(MapSpec::gen_robertson(3, PhaseCollection::uniform(3, -1.0)));
  const RealVector ev = eigenvalues_hermitian(w.op.mat());
  CHECK(ev(0) == doctest::Approx(-1.0 / 12));
  CHECK(ev(1) == doctest::Approx(-1.0 / 12));
  CHECK(ev(2) > -1e-12);
}

TEST_CASE("SPA") {
  for (int n = 2; n <= 5; ++n) {
    const SpaResult r = spa(choi_of_map(MapSpec::reduction(n)));
    CHECK(std::abs(r.p_star - 1.0 / (n + 1)) < 1e-12);
    CHECK(std::abs(r.spa_psd_margin) <= 1e-10);
    CHECK_FALSE(r.already_positive);
  }
  const SpaResult m1 = spa(choi_of_map(MapSpec::gen_reduction(3, PhaseCollection::uniform(3, -1.0))));
  CHECK(m1.p_star == doctest::Approx(0.4));
  // (n-1)/(2n-1) at n = 3
  CHECK(m1.p_star == doctest::Approx(2.0 / 5.0));
  const SpaResult rob = spa(choi_of_map(MapSpec::robertson(2)));
  CHECK(rob.p_star == doctest::Approx(0.2));

  const Witness pos = choi_of_map(MapSpec::identity(3));
  const SpaResult p = spa(pos);
  CHECK(p.already_positive);
  CHECK(p.p_star == 1.0);

  const Witness scaled = make_witness(BipartiteOperator(2, 2, 2.0 * max_entangled(2).mat()), MapSpec::identity(2));
  CHECK_THROWS_AS(spa(scaled), Error);

  // The SPA operator is the stated mixture.
  const Witness w = choi_of_map(MapSpec::reduction(3));
  const BipartiteOperator s = spa_operator(w, 0.3);
  CHECK(oracle::max_abs(s.mat() - (0.7 / 9 * ComplexMatrix::Identity(9, 9) + 0.3 * w.op.mat())) < 1e-15);
}

TEST_CASE("partial transpose decomposition of the generalized reduction witness") {
  Rng rng = make_stream(43, 0);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 4;
    const PhaseCollection z = random_disc_phases(n, rng);
    const Witness w = choi_of_map(MapSpec::gen_reduction(n, z));
    const auto parts = reduction_ptranspose_decomposition(n, z);
    CHECK(parts.size() == size_t(n * (n - 1) / 2));
    ComplexMatrix sum = ComplexMatrix::Zero(n * n, n * n);
    for (const auto& p : parts) {
      CHECK(is_psd(p.op));
      sum += p.weight * p.op;
    }
    const ComplexMatrix pt = partial_transpose(w.op).mat();
    CHECK(oracle::max_abs(sum - pt) < 1e-12);
    CHECK(is_psd(pt));
  }
  // |z| = 1: rank one, onto e_i (x) e_j - conj(z) e_j (x) e_i.
  const PhaseCollection zu = random_unimodular_phases(3, rng);
  for (const auto& p : reduction_ptranspose_decomposition(3, zu)) {
    const ComplexVector psi = kron(basis_vector(3, p.i), basis_vector(3, p.j)) -
                              std::conj(zu(p.i, p.j)) * kron(basis_vector(3, p.j), basis_vector(3, p.i));
    CHECK(oracle::max_abs(p.op - outer(psi)) < 1e-15);
  }
  // z_12 = 0: diagonal, rank two.
  PhaseCollection z0(2);
  z0.set(0, 1, 0.0);
  const auto d = reduction_ptranspose_decomposition(2, z0);
  CHECK(oracle::max_abs(d[0].op - ComplexMatrix(kron(basis_matrix(2, 0, 0), basis_matrix(2, 1, 1)) +
                                                kron(basis_matrix(2, 1, 1), basis_matrix(2, 0, 0)))) == 0.0);
}

TEST_CASE("block positivity probe") {
  const Witness w = choi_of_map(MapSpec::reduction(3));
  CHECK(block_positivity_probe(w.op, 10000, 42).min_found >= -tol::psd);

  Rng rng = make_stream(44, 0);
  const Witness wr = choi_of_map(MapSpec::gen_robertson(2, random_unimodular_phases(2, rng)));
  CHECK(block_positivity_probe(wr.op, 4000, 42).min_found >= -tol::psd);

  // Subtracting a large multiple of a product projector breaks block positivity.
  const ComplexVector v = kron(basis_vector(3, 0), basis_vector(3, 1));
  const BipartiteOperator broken(3, 3, w.op.mat() - 5.0 * outer(v));
  CHECK(block_positivity_probe(broken, 1000, 42).min_found < -1.0);
}

TEST_CASE("spectrum profiles") {
  for (int k = 2; k <= 3; ++k) {
    const SpectrumProfile p = robertson_spectrum_profile(k, PhaseCollection(k));
    REQUIRE(p.negatives.size() == 1);
    REQUIRE(p.positives.size() == 1);
    CHECK(p.negatives[0].value == doctest::Approx(-1.0 / (2 * k)));
    CHECK(p.negatives[0].multiplicity == 1);
    CHECK(p.positives[0].value == doctest::Approx(1.0 / (2.0 * k * (k - 1))));
    CHECK(p.positives[0].multiplicity == 2 * k * k - k - 1);
    CHECK(p.zero_count == k * (2 * k + 1));
    CHECK(p.total() == 4 * k * k);
    CHECK(p.weighted_sum() == doctest::Approx(p.trace));
  }
  PhaseCollection z(2);
  z.set(0, 1, -1.0);
  const SpectrumProfile m = robertson_spectrum_profile(2, z);
  CHECK(m.total() == 16);
  CHECK(m.trace == doctest::Approx(choi_of_map(MapSpec::gen_robertson(2, z)).normalized_trace));
  CHECK(m.weighted_sum() == doctest::Approx(m.trace));

  RealVector v(5);
  v << -1.0, 0.0, 1e-12, 0.5, 0.5 + 5e-10;
  const auto c = cluster_spectrum(v, 1e-9);
  REQUIRE(c.size() == 3);
  CHECK(c[1].multiplicity == 2);
  CHECK(c[2].multiplicity == 2);
}

TEST_CASE("decomposable witnesses never detect PPT states") {
  Rng rng = make_stream(45, 0);
  const Witness w = choi_of_map(MapSpec::reduction(3));
  for (int t = 0; t < 100; ++t) {
    const BipartiteOperator rho = random_separable(3, rng);
    const IndecomposabilityCertificate c = indecomposability_certificate(w, rho);
    CHECK(c.is_ppt);
    CHECK(c.detection_value >= -1e-12);
    CHECK_FALSE(c.certified);
  }
  const Witness pplus = choi_of_map(MapSpec::identity(3));
  const IndecomposabilityCertificate c = indecomposability_certificate(pplus, random_separable(3, rng));
  CHECK(c.detection_value >= 0.0);
  CHECK_FALSE(c.certified);
}

TEST_CASE("Choi construction is linear in the map") {
  Rng rng = make_stream(46, 0);
  for (int t = 0; t < 20; ++t) {
    const double a = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const int n = 3;
    const ComplexMatrix mixed = oracle::choi(n, [&](const ComplexMatrix& x) {
      return ComplexMatrix(a * apply_reduction(n, x) + (1 - a) * apply_reduction(n, ComplexMatrix(x.transpose())));
    });
    const ComplexMatrix wr = choi_matrix(MapSpec::reduction(n));
    const ComplexMatrix wt = oracle::choi(n, [&](const ComplexMatrix& x) {
      return apply_reduction(n, ComplexMatrix(x.transpose()));
    });
    CHECK(oracle::max_abs(mixed - (a * wr + (1 - a) * wt)) < 1e-14);
  }
}

TEST_CASE("witness construction rejects non-Hermitian operators") {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(make_witness(BipartiteOperator(2, 2, m), MapSpec::identity(2)), Error);
}
