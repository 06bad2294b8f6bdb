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

#include <numbers>

#include "ewkit/errors.hpp"
#include "ewkit/optimality.hpp"
#include "ewkit/random.hpp"
#include "oracles.hpp"

using namespace ewkit;

TEST_CASE("spanning vectors") {
  const ProductVectorSet s2 = spanning_vectors(2, {});
  CHECK(s2.vectors.size() == 4);
  CHECK(span_rank(s2) == 4);

  // alpha = 0, n = 3: f = (e_k + e_l)^(x2), g = (e_k + i e_l) (x) (e_k - i e_l).
  const ProductVectorSet s3 = spanning_vectors(3, {});
  CHECK(s3.vectors.size() == 9);
  const cplx i_unit(0, 1);
  for (const auto& v : s3.vectors) {
    CHECK((v.v - oracle::kron(v.x, v.y)).norm() == 0.0);
    if (v.tag == VectorTag::F) {
      const ComplexVector x = basis_vector(3, v.k) + basis_vector(3, v.l);
      CHECK((v.v - oracle::kron(x, x)).norm() < 1e-15);
    } else if (v.tag == VectorTag::G) {
      const ComplexVector x = basis_vector(3, v.k) + i_unit * basis_vector(3, v.l);
      const ComplexVector y = basis_vector(3, v.k) - i_unit * basis_vector(3, v.l);
      CHECK((v.v - oracle::kron(x, y)).norm() < 1e-15);
    }
  }
  CHECK(s3.vectors.front().label() == "f_12");
  CHECK(s3.vectors[1].label() == "g_12");
  CHECK(s3.vectors.back().label() == "diag_3");

  Rng rng = make_stream(51, 0);
  for (int t = 0; t < 100; ++t) {
    const int n = std::array<int, 4>{2, 3, 4, 6}[t % 4];
    PairAngles a;
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l) a[{k, l}] = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
    CHECK(span_rank(spanning_vectors(n, a)) == n * n);
  }
}

TEST_CASE("optimality of the reduction family") {
  const Witness w = choi_of_map(MapSpec::reduction(3));
  const OptimalityCertificate c = optimality_certificate(w, spanning_vectors(3, {}));
  CHECK(c.certified);
  CHECK(c.span_rank == 9);

  Rng rng = make_stream(52, 0);
  for (int n = 3; n <= 5; ++n) {
    for (int t = 0; t < 5; ++t) {
      const PhaseCollection z = random_unimodular_phases(n, rng);
      const Witness wz = choi_of_map(MapSpec::gen_reduction(n, z));
      const OptimalityCertificate cz = optimality_certificate(wz, spanning_vectors(n, reduction_angles(z)));
      CHECK(cz.certified);
      CHECK(cz.max_abs_expectation <= 1e-10 * wz.op.mat().norm());
      // Zero angles miss the phases.
      if (n > 2) CHECK_FALSE(optimality_certificate(wz, spanning_vectors(n, {})).all_zero);
    }
  }
  CHECK_THROWS_AS(optimality_certificate(w, spanning_vectors(4, {})), Error);
}

TEST_CASE("optimality of the Robertson family") {
  Rng rng = make_stream(53, 0);
  for (int k = 2; k <= 3; ++k) {
    for (int t = 0; t < 5; ++t) {
      const PhaseCollection z = random_unimodular_phases(k, rng);
      const Witness w = choi_of_map(MapSpec::gen_robertson(k, z));
      const OptimalityCertificate c = optimality_certificate(w, spanning_vectors(2 * k, robertson_angles(k, z)));
      CHECK(c.certified);
      CHECK(c.failing.empty());
    }
  }
}

TEST_CASE("non-optimality correction") {
  PhaseCollection z2(2);
  z2.set(0, 1, 0.5);
  const NonOptimalityCorrection c2 = non_optimality_correction(2, z2, {0, 1});
  const ComplexMatrix q = 0.75 * (kron(basis_matrix(2, 0, 0), basis_matrix(2, 1, 1)) +
                                  kron(basis_matrix(2, 1, 1), basis_matrix(2, 0, 0)));
  CHECK(oracle::max_abs(c2.literal.q.mat() - q) < 1e-15);
  // Q is invariant under partial transposition.
  CHECK(oracle::max_abs(partial_transpose(c2.literal.q).mat() - c2.literal.q.mat()) == 0.0);
  // Weight 1 - |z|^2 leaves (|z|^2 - |z|) / 2 = -1/8 in the PT block.
  CHECK(c2.literal_failed);
  CHECK(c2.literal.pt_margin == doctest::Approx(-0.125).epsilon(1e-12));
  CHECK(c2.literal.block_probe_min < -1e-3);
  CHECK(c2.adopted.scale == doctest::Approx(0.5));
  CHECK(c2.adopted.pt_margin >= -tol::psd);
  CHECK(c2.adopted.lambda_min == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(c2.still_witness);

  PhaseCollection z3(3);
  z3.set(0, 1, 0.0);
  const NonOptimalityCorrection c3 = non_optimality_correction(3, z3, {0, 1});
  CHECK(oracle::max_abs(c3.literal.q.mat() - ComplexMatrix(kron(basis_matrix(3, 0, 0), basis_matrix(3, 1, 1)) +
                                                   kron(basis_matrix(3, 1, 1), basis_matrix(3, 0, 0)))) == 0.0);
  CHECK_FALSE(c3.literal_failed);
  CHECK(c3.still_witness);

  try {
    non_optimality_correction(3, PhaseCollection(3), {0, 1});
    FAIL("expected PhaseOnBoundary");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PhaseOnBoundary);
  }
}
