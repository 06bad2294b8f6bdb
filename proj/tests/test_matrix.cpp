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

#include <algorithm>
#include <vector>

#include "ewkit/errors.hpp"
#include "ewkit/matrix.hpp"
#include "ewkit/random.hpp"
#include "oracles.hpp"

using namespace ewkit;

TEST_CASE("kron basics") {
  CHECK(kron(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)).isApprox(ComplexMatrix::Identity(4, 4)));

  const ComplexMatrix k = kron(basis_matrix(2, 0, 1), basis_matrix(2, 0, 1));
  CHECK(k(0, 3) == cplx(1.0));
  CHECK(k.cwiseAbs().sum() == doctest::Approx(1.0));

  Rng rng = make_stream(11, 0);
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix a = random_complex(2, 3, rng);
    const ComplexMatrix b = random_complex(3, 2, rng);
    const ComplexMatrix c = random_complex(2, 2, rng);
    CHECK(oracle::max_abs(kron(a, b) - oracle::kron(a, b)) == 0.0);
    CHECK(oracle::max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-14);
  }
}

TEST_CASE("kron of vectors matches column kron") {
  Rng rng = make_stream(12, 0);
  const ComplexVector x = random_unit_vector(3, rng);
  const ComplexVector y = random_unit_vector(4, rng);
  const ComplexVector v = kron(x, y);
  CHECK(v.size() == 12);
  CHECK((v - oracle::kron(x, y)).norm() == 0.0);
}

TEST_CASE("kron spectrum is the product spectrum") {
  Rng rng = make_stream(13, 0);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_hermitian(2, rng);
    const ComplexMatrix b = random_hermitian(2, rng);
    const RealVector ea = eigenvalues_hermitian(a);
    const RealVector eb = eigenvalues_hermitian(b);
    std::vector<double> prod;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) prod.push_back(ea(i) * eb(j));
    std::sort(prod.begin(), prod.end());
    const RealVector ek = eigenvalues_hermitian(kron(a, b));
    for (int i = 0; i < 4; ++i) CHECK(ek(i) == doctest::Approx(prod[i]).epsilon(1e-10));
  }
}

TEST_CASE("bipartite operator validates its shape") {
  CHECK_THROWS_AS(BipartiteOperator(2, 3, ComplexMatrix::Identity(5, 5)), Error);
  BipartiteOperator op(2, 3, ComplexMatrix::Identity(6, 6));
  CHECK(op.dim() == 6);
  CHECK(op.trace().real() == doctest::Approx(6.0));
}

TEST_CASE("partial transpose") {
  const BipartiteOperator id(3, 3, ComplexMatrix::Identity(9, 9));
  CHECK(partial_transpose(id).mat().isApprox(id.mat()));

  // P+ on 2x2 goes to SWAP/2.
  ComplexVector phi = ComplexVector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  const BipartiteOperator pplus(2, 2, outer(phi));
  const ComplexMatrix pt = partial_transpose(pplus).mat();
  ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  CHECK(oracle::max_abs(pt - swap / 2.0) < 1e-15);
  const RealVector ev = eigenvalues_hermitian(pt);
  CHECK(ev(0) == doctest::Approx(-0.5));
  CHECK(ev(1) == doctest::Approx(0.5));
  CHECK(ev(3) == doctest::Approx(0.5));

  Rng rng = make_stream(14, 0);
  for (int t = 0; t < 100; ++t) {
    const int da = 2 + t % 3;
    const int db = 2 + (t / 3) % 3;
    const BipartiteOperator o(da, db, random_hermitian(da * db, rng));
    const BipartiteOperator g = partial_transpose(o);
    CHECK(oracle::max_abs(g.mat() - oracle::ptranspose_b(o.mat(), da, db)) == 0.0);
    CHECK(oracle::max_abs(partial_transpose(g).mat() - o.mat()) == 0.0);
    CHECK(std::abs(g.trace() - o.trace()) < 1e-13);
    CHECK(is_hermitian(g.mat()));
    // Transposing A is the full transpose followed by transposing B.
    const ComplexMatrix ga = partial_transpose(o, Subsystem::A).mat();
    CHECK(oracle::max_abs(ga - partial_transpose(BipartiteOperator(da, db, o.mat().transpose())).mat()) == 0.0);
  }
}

TEST_CASE("partial trace") {
  Rng rng = make_stream(15, 0);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_density(2, rng);
    const ComplexMatrix b = random_density(3, rng);
    const BipartiteOperator ab(2, 3, kron(a, b));
    CHECK(oracle::max_abs(partial_trace(ab, Subsystem::A) - b) < 1e-14);
    CHECK(oracle::max_abs(partial_trace(ab, Subsystem::B) - a) < 1e-14);
  }
}

TEST_CASE("hermitian eigensolver") {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  const RealVector ev = eigenvalues_hermitian(d);
  CHECK(ev(0) == 1.0);
  CHECK(ev(1) == 2.0);
  CHECK(ev(2) == 3.0);

  // J - I for n = 3.
  ComplexMatrix z = ComplexMatrix::Ones(3, 3) - ComplexMatrix::Identity(3, 3);
  const RealVector ez = eigenvalues_hermitian(z);
  CHECK(ez(0) == doctest::Approx(-1.0));
  CHECK(ez(1) == doctest::Approx(-1.0));
  CHECK(ez(2) == doctest::Approx(2.0));

  Rng rng = make_stream(16, 0);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix m = random_hermitian(8, rng);
    const EigenSystem es = eig_hermitian(m);
    const ComplexMatrix rebuilt = es.vectors * es.values.cast<cplx>().asDiagonal() * es.vectors.adjoint();
    CHECK((rebuilt - m).norm() <= tol::eigen_relative * m.norm());
    CHECK((es.vectors.adjoint() * es.vectors - ComplexMatrix::Identity(8, 8)).norm() < 1e-12);
    for (int i = 1; i < 8; ++i) CHECK(es.values(i - 1) <= es.values(i));
  }

  // 2x2 closed form: (a+d)/2 -+ sqrt(((a-d)/2)^2 + |b|^2).
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix m = random_hermitian(2, rng);
    const double a = m(0, 0).real();
    const double dd = m(1, 1).real();
    const double r = std::sqrt((a - dd) * (a - dd) / 4 + std::norm(m(0, 1)));
    const RealVector e = eigenvalues_hermitian(m);
    CHECK(e(0) == doctest::Approx((a + dd) / 2 - r).epsilon(1e-9));
    CHECK(e(1) == doctest::Approx((a + dd) / 2 + r).epsilon(1e-9));
  }

  // 3x3 against the characteristic polynomial: det(M - lambda I) = 0.
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix m = random_hermitian(3, rng);
    const RealVector e = eigenvalues_hermitian(m);
    for (int i = 0; i < 3; ++i) {
      const cplx det = (m - e(i) * ComplexMatrix::Identity(3, 3)).determinant();
      CHECK(std::abs(det) < 1e-9 * std::max(1.0, m.norm() * m.norm() * m.norm()));
    }
  }

  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(bad), Error);
  try {
    eig_hermitian(bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonHermitianInput);
  }
}

TEST_CASE("hadamard product") {
  Rng rng = make_stream(17, 0);
  const ComplexMatrix a = random_complex(3, 3, rng);
  CHECK(hadamard(a, ComplexMatrix::Ones(3, 3)).isApprox(a));
  const ComplexMatrix zt = random_hermitian(3, rng);
  const ComplexMatrix h = hadamard(zt, basis_matrix(3, 0, 2));
  CHECK(h(0, 2) == zt(0, 2));
  CHECK(h.cwiseAbs().sum() == doctest::Approx(std::abs(zt(0, 2))));
  try {
    hadamard(a, ComplexMatrix::Ones(2, 3));
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ShapeMismatch);
  }
  // Schur product theorem.
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix p = random_density(4, rng);
    const ComplexMatrix q = random_density(4, rng);
    CHECK(is_psd(hadamard(p, q)));
  }
}

TEST_CASE("psd test") {
  CHECK(is_psd(ComplexMatrix::Identity(3, 3), 1e-10));
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = -1e-6;
  CHECK_FALSE(is_psd(d, 1e-10));
  ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
  bad(1, 0) = cplx(0, 1);
  CHECK_THROWS_AS(is_psd(bad), Error);
}

TEST_CASE("hermiticity check uses a relative tolerance") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2) * 1e6;
  m(0, 1) = 1e-7;
  CHECK(is_hermitian(m));
  ComplexMatrix s = ComplexMatrix::Identity(2, 2);
  s(0, 1) = 1e-9;
  CHECK_FALSE(is_hermitian(s));
}
