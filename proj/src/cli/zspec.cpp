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

#include <charconv>
#include <cmath>
#include <numbers>
#include <regex>
#include <string>

#include "ewkit/cli.hpp"
#include "ewkit/errors.hpp"

namespace ewkit::cli {

namespace {

[[noreturn]] void bad(std::string_view text, const char* why) {
  throw Error(Errc::ParseError, "z-spec \"" + std::string(text) + "\": " + why);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& s, std::string_view whole) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad(whole, "not a number");
  return v;
}

int to_label(const std::string& s, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad(whole, "labels are positive integers");
  return v;
}

}  // namespace

cplx parse_zvalue(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) bad(text, "empty value");

  if (t.front() == '@') return std::polar(1.0, to_double(t.substr(1), text));

  static const std::regex polar(R"(^([+-]?(?:\d+\.?\d*|\.\d+)?|[+-])pi(?:/(\d+))?$)");
  static const std::regex rect(R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?:([+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i)?$)");
  static const std::regex imag(R"(^([+-]?(?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)i$)");
  std::smatch m;
  if (std::regex_match(t, m, polar)) {
    std::string coef = m[1].str();
    double c = 1.0;
    if (coef == "-") c = -1.0;
    else if (!coef.empty() && coef != "+") c = to_double(coef.front() == '+' ? coef.substr(1) : coef, text);
    if (m[2].matched) {
      const double den = to_double(m[2].str(), text);
      if (den == 0.0) bad(text, "zero denominator");
      c /= den;
    }
    return std::polar(1.0, c * std::numbers::pi);
  }
  auto signed_part = [&](std::string s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return to_double(s.front() == '+' ? s.substr(1) : s, text);
  };
  if (std::regex_match(t, m, rect)) {
    const std::string re = m[1].str();
    const double real = to_double(re.front() == '+' ? re.substr(1) : re, text);
    const double im = m[2].matched ? signed_part(m[2].str()) : 0.0;
    return {real, im};
  }
  if (std::regex_match(t, m, imag)) return {0.0, signed_part(m[1].str())};
  bad(text, "expected a complex number, a multiple of pi or @radians");
}

PhaseCollection parse_zspec(std::string_view spec, int labels) {
  PhaseCollection z(labels);
  const std::string s = trim(spec);
  if (s.empty()) return z;

  auto store = [&](int i, int j, cplx v) {
    if (std::abs(v) > 1.0 + 1e-12) bad(spec, "|z| exceeds 1");
    if (i > j) {
      std::swap(i, j);
      v = std::conj(v);
    }
    z.set(i, j, v);
  };

  if (s.rfind("all:", 0) == 0) {
    const cplx v = parse_zvalue(s.substr(4));
    for (const auto& [i, j] : z.pairs()) store(i, j, v);
    return z;
  }

  // Entries are separated by ';' or ','. A value never contains a comma, so
  // "1,2:pi,1,3:-1" splits unambiguously.
  static const std::regex entry(R"(\s*([^,:;]*),([^,:;]*):([^,;]*)(?:[,;]|$))");
  auto it = s.cbegin();
  while (it != s.cend()) {
    std::smatch m;
    if (!std::regex_search(it, s.cend(), m, entry, std::regex_constants::match_continuous) || m.length(0) == 0) {
      bad(spec, "entries look like i,j:value");
    }
    const int i = to_label(trim(m[1].str()), spec) - 1;
    const int j = to_label(trim(m[2].str()), spec) - 1;
    if (i < 0 || j < 0 || i >= labels || j >= labels || i == j) bad(spec, "label out of range");
    store(i, j, parse_zvalue(m[3].str()));
    it = m[0].second;
  }
  return z;
}

}  // namespace ewkit::cli
