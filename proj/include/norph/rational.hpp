/*
 *   Copyright 2026 The norph authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <boost/rational.hpp>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "norph/common.hpp"

namespace norph {

/// Exact rational scalar. All lengths, weights and bound values are kept
/// exact so that comparisons in tests and validators never depend on a
/// floating tolerance.
using Rat = boost::rational<long long>;

/// Parses "3", "-7", "3/4", "-3/4", "1.25", "-0.5". Fractions and decimal
/// strings are converted exactly.
inline Rat rational_from_string(std::string_view text) {
  auto fail = [&] { throw Error("cannot parse rational '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](long long& out) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
    out = 0;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out = out * 10 + (text[pos] - '0');
      ++pos;
    }
    return pos - start;
  };
  long long whole = 0;
  digits(whole);
  Rat value(whole);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    long long den = 0;
    digits(den);
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    value = Rat(whole, den);
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    long long frac = 0;
    std::size_t count = digits(frac);
    long long scale = 1;
    for (std::size_t i = 0; i < count; ++i) scale *= 10;
    value = Rat(whole) + Rat(frac, scale);
  }
  if (pos != text.size()) fail();
  return negative ? -value : value;
}

/// Nearest small-denominator rational within `tol` of `x`, via the
/// continued-fraction expansion. This is the lossy float import mode;
/// exact inputs should use rational_from_string.
inline Rat rational_from_double(double x, double tol = 1e-9) {
  if (!std::isfinite(x)) throw Error("cannot convert non-finite value to a rational");
  const bool negative = x < 0;
  const double target = std::fabs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = target;
  for (int step = 0; step < 64; ++step) {
    const double floored = std::floor(rest);
    if (floored > 9.0e17) break;
    const long long a = static_cast<long long>(floored);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (q1 != 0 && std::fabs(static_cast<double>(p1) / static_cast<double>(q1) - target) <= tol) {
      Rat value(p1, q1);
      return negative ? -value : value;
    }
    const double frac = rest - floored;
    if (frac < 1e-15) break;
    rest = 1.0 / frac;
  }
  throw Error("no rational within tolerance of the given value");
}

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace norph
