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

#include "ewkit/random.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace ewkit {

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rng make_stream(std::uint64_t seed, std::uint64_t counter) { return Rng(stream_seed(seed, counter)); }

ComplexMatrix random_complex(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      m(i, j) = cplx(re, im);
    }
  return m;
}

ComplexVector random_unit_vector(int n, Rng& rng) {
  ComplexVector v = random_complex(n, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_hermitian(int n, Rng& rng) {
  const ComplexMatrix g = random_complex(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_density(int n, Rng& rng, int rank) {
  const ComplexMatrix g = random_complex(n, rank > 0 ? rank : n, rng);
  ComplexMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

ComplexMatrix random_unitary(int n, Rng& rng) {
  // QR of a Ginibre matrix with the phase fix gives Haar measure.
  const ComplexMatrix g = random_complex(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

ComplexMatrix random_antisymmetric_unitary(int k, Rng& rng) {
  const ComplexMatrix j = kron(ComplexMatrix::Identity(k, k), cplx(0.0, 1.0) * sigma_y());
  const ComplexMatrix v = random_unitary(2 * k, rng);
  return v * j * v.transpose();
}

PhaseCollection random_unimodular_phases(int labels, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  PhaseCollection z(labels);
  for (const auto& [i, j] : z.pairs()) z.set_polar(i, j, angle(rng));
  return z;
}

PhaseCollection random_disc_phases(int labels, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PhaseCollection z(labels);
  for (const auto& [i, j] : z.pairs()) z.set(i, j, std::polar(std::sqrt(unit(rng)), angle(rng)));
  return z;
}

}  // namespace ewkit
