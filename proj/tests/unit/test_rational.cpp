/*
Copyright 2026 the hoct authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include <doctest.h>

#include "hoct/rational.hpp"

using hoct::Rational;

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(Rational(7, 3).to_string() == "7/3");
  CHECK(Rational(6, 3).to_string() == "2");
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(1, 2) <= Rational(1, 2));
  CHECK(hoct::rational_min(Rational(5, 3), Rational(3, 2)) == Rational(3, 2));
  CHECK(hoct::compare_ratio(1, 3, 1, 2) < 0);
  CHECK(hoct::compare_ratio(4, 6, 2, 3) == 0);
}

TEST_CASE("rational error paths") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  const std::int64_t big = INT64_MAX / 2;
  CHECK_THROWS_AS(Rational(big, 1) * Rational(big, 1), std::overflow_error);
}
