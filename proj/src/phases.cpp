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

#include "ewkit/phases.hpp"

#include <cmath>
#include <string>

namespace ewkit {

namespace {
constexpr double kDiscSlack = 1e-12;
}

PhaseCollection::PhaseCollection(int labels) : labels_(labels) {
  if (labels < 1) throw Error(Errc::DimensionMismatch, "phase collection needs at least one label");
}

PhaseCollection PhaseCollection::uniform(int labels, cplx value) {
  PhaseCollection z(labels);
  for (const auto& [i, j] : z.pairs()) z.set(i, j, value);
  return z;
}

PhaseCollection PhaseCollection::unchecked(int labels, const std::map<LabelPair, cplx>& entries) {
  PhaseCollection z(labels);
  for (const auto& [key, value] : entries) {
    auto [i, j] = key;
    z.check_pair(i, j);
    if (i < j) {
      z.entries_[{i, j}] = value;
    } else {
      z.entries_[{j, i}] = std::conj(value);
    }
  }
  return z;
}

void PhaseCollection::check_pair(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= labels_ || j >= labels_) {
    throw Error(Errc::InvalidPhase, "pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                        ") is not a valid off-diagonal label pair for " +
                                        std::to_string(labels_) + " labels");
  }
}

void PhaseCollection::set(int i, int j, cplx value) {
  check_pair(i, j);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) ||
      std::abs(value) > 1.0 + kDiscSlack) {
    throw Error(Errc::InvalidPhase, "|z| must not exceed 1");
  }
  if (i < j) {
    entries_[{i, j}] = value;
  } else {
    entries_[{j, i}] = std::conj(value);
  }
}

void PhaseCollection::set_polar(int i, int j, double theta) { set(i, j, std::polar(1.0, theta)); }

cplx PhaseCollection::operator()(int i, int j) const {
  check_pair(i, j);
  const bool upper = i < j;
  auto it = entries_.find(upper ? LabelPair{i, j} : LabelPair{j, i});
  const cplx value = it == entries_.end() ? cplx(1.0, 0.0) : it->second;
  return upper ? value : std::conj(value);
}

double PhaseCollection::angle(int i, int j) const { return std::arg((*this)(i, j)); }

std::vector<LabelPair> PhaseCollection::pairs() const {
  std::vector<LabelPair> out;
  for (int i = 0; i < labels_; ++i)
    for (int j = i + 1; j < labels_; ++j) out.emplace_back(i, j);
  return out;
}

bool PhaseCollection::is_unimodular(double tolerance) const {
  for (const auto& [key, value] : entries_) {
    if (std::abs(std::abs(value) - 1.0) > tolerance) return false;
  }
  return true;
}

bool PhaseCollection::within_unit_disc(double tolerance) const {
  for (const auto& [key, value] : entries_) {
    if (std::abs(value) > 1.0 + tolerance) return false;
  }
  return true;
}

ComplexMatrix PhaseCollection::phase_matrix() const {
  ComplexMatrix z = ComplexMatrix::Zero(labels_, labels_);
  for (int i = 0; i < labels_; ++i)
    for (int j = 0; j < labels_; ++j)
      if (i != j) z(i, j) = (*this)(i, j);
  return z;
}

}  // namespace ewkit
