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

#include <map>
#include <utility>
#include <vector>

#include "ewkit/matrix.hpp"

namespace ewkit {

using LabelPair = std::pair<int, int>;

/// The collection z = {z_ij : i < j} parametrizing the generalized maps.
///
/// Labels are 0-based. Only i < j is stored; z_ji reads back as conj(z_ij)
/// and any pair never set reads back as 1, which recovers the ungeneralized
/// map. The checked setters enforce |z_ij| <= 1.
class PhaseCollection {
 public:
  explicit PhaseCollection(int labels);

  static PhaseCollection uniform(int labels, cplx value);

  // Skips the |z| <= 1 check. Only negative tests should need this.
  static PhaseCollection unchecked(int labels, const std::map<LabelPair, cplx>& entries);

  void set(int i, int j, cplx value);
  void set_polar(int i, int j, double theta);

  cplx operator()(int i, int j) const;
  double angle(int i, int j) const;

  int labels() const noexcept { return labels_; }
  const std::map<LabelPair, cplx>& entries() const noexcept { return entries_; }

  // All pairs i < j in lexicographic order, including defaulted ones.
  std::vector<LabelPair> pairs() const;

  bool is_unimodular(double tolerance = 1e-12) const;
  bool within_unit_disc(double tolerance = 1e-12) const;

  // Z with Z_ii = 0 and Z_ij = z_ij (Hermitian).
  ComplexMatrix phase_matrix() const;

 private:
  void check_pair(int i, int j) const;

  int labels_;
  std::map<LabelPair, cplx> entries_;
};

}  // namespace ewkit
