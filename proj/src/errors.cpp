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

#include "ewkit/errors.hpp"

namespace ewkit {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonHermitianInput: return "NonHermitianInput";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::OddDimension: return "OddDimension";
    case Errc::InvalidUnitary: return "InvalidUnitary";
    case Errc::InvalidPhase: return "InvalidPhase";
    case Errc::NormalizationError: return "NormalizationError";
    case Errc::SingularB: return "SingularB";
    case Errc::NonUnimodularPhases: return "NonUnimodularPhases";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::PhaseOnBoundary: return "PhaseOnBoundary";
    case Errc::DegenerateWitness: return "DegenerateWitness";
    case Errc::ConstructionInvalid: return "ConstructionInvalid";
    case Errc::ReconstructionFailure: return "ReconstructionFailure";
    case Errc::MultiplierNotCP: return "MultiplierNotCP";
    case Errc::CertificateFailed: return "CertificateFailed";
    case Errc::NotTracePreserving: return "NotTracePreserving";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ewkit
