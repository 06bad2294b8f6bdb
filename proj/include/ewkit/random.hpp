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
#include <random>

#include "ewkit/matrix.hpp"
#include "ewkit/phases.hpp"

namespace ewkit {

using Rng = std::mt19937_64;

// Seed for the counter-th independent stream derived from a base seed
// (splitmix64 finalizer). Sample i of a probe always draws from stream i, so
// results do not depend on how samples are spread over workers.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t counter);

Rng make_stream(std::uint64_t seed, std::uint64_t counter);

ComplexVector random_unit_vector(int n, Rng& rng);
ComplexMatrix random_complex(int rows, int cols, Rng& rng);
ComplexMatrix random_hermitian(int n, Rng& rng);
// Random PSD matrix of the given rank, unit trace.
ComplexMatrix random_density(int n, Rng& rng, int rank = -1);
ComplexMatrix random_unitary(int n, Rng& rng);
// V J V^T with J = I_k (x) (i sigma_y): unitary and antisymmetric.
ComplexMatrix random_antisymmetric_unitary(int k, Rng& rng);

PhaseCollection random_unimodular_phases(int labels, Rng& rng);
PhaseCollection random_disc_phases(int labels, Rng& rng);

}  // namespace ewkit
