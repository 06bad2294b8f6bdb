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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ewkit/phases.hpp"

namespace ewkit::cli {

inline constexpr const char* kVersion = "ewkit 0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 42;

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kCertificateFailed = 3,
  kDiscrepancy = 4,
};

/// Phase collection from a z-spec. Labels in the spec are 1-based.
///
///   all:<value>              every pair
///   i,j:<value>[;i,j:<value>...]
///
/// A value is a complex number (`-1`, `0.5+0.5i`, `2i`), a polar angle in
/// multiples of pi (`pi`, `-pi/2`, `0.5pi`, `2pi/3`), or `@<radians>`.
/// Throws Error(ParseError) on malformed input or |value| > 1.
PhaseCollection parse_zspec(std::string_view spec, int labels);
cplx parse_zvalue(std::string_view text);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ewkit::cli
