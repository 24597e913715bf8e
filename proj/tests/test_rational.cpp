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

#include "norph/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

namespace norph {
namespace {

TEST_CASE("parsing accepts integers, fractions and decimals", "[rational]") {
  CHECK(rational_from_string("3") == Rat(3));
  CHECK(rational_from_string("-7") == Rat(-7));
  CHECK(rational_from_string("3/4") == Rat(3, 4));
  CHECK(rational_from_string("-3/4") == Rat(-3, 4));
  CHECK(rational_from_string("1.25") == Rat(5, 4));
  CHECK(rational_from_string("0.5") == Rat(1, 2));
  CHECK(rational_from_string("0") == Rat(0));
}

TEST_CASE("parsing rejects malformed input", "[rational]") {
  CHECK_THROWS_AS(rational_from_string(""), Error);
  CHECK_THROWS_AS(rational_from_string("abc"), Error);
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
  CHECK_THROWS_AS(rational_from_string("1/"), Error);
  CHECK_THROWS_AS(rational_from_string("1.2.3"), Error);
}

TEST_CASE("formatting is n or n/d in lowest terms", "[rational]") {
  CHECK(to_string(Rat(3)) == "3");
  CHECK(to_string(Rat(-7)) == "-7");
  CHECK(to_string(Rat(3, 4)) == "3/4");
  CHECK(to_string(Rat(2, 4)) == "1/2");
  CHECK(to_string(Rat(0)) == "0");
}

TEST_CASE("string round trip is the identity", "[rational]") {
  for (long long n = -6; n <= 6; ++n) {
    for (long long d = 1; d <= 6; ++d) {
      const Rat r(n, d);
      CHECK(rational_from_string(to_string(r)) == r);
    }
  }
}

TEST_CASE("double conversion recovers simple fractions", "[rational]") {
  CHECK(rational_from_double(0.5) == Rat(1, 2));
  CHECK(rational_from_double(0.25) == Rat(1, 4));
  CHECK(rational_from_double(2.0) == Rat(2));
  CHECK(rational_from_double(1.0 / 3.0) == Rat(1, 3));
  CHECK(rational_from_double(-0.75) == Rat(-3, 4));
}

TEST_CASE("arithmetic stays exact", "[rational]") {
  const Rat a(1, 3);
  const Rat b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(Rat(1, 3) + Rat(1, 3) + Rat(1, 3) == Rat(1));
}

}  // namespace
}  // namespace norph
