// Copyright 2026 The Segcross Authors
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

#include <doctest.h>

#include "segcross/scalar.hpp"

using namespace segcross;

TEST_CASE("canonical form") {
    ExactScalar a(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    ExactScalar b(-6, 4);
    CHECK(b.num() == -3);
    CHECK(b.den() == 2);
    ExactScalar c(3, -2);  // denominator sign moves to the numerator
    CHECK(c.num() == -3);
    CHECK(c.den() == 2);
    CHECK_THROWS_AS(ExactScalar(1, 0), std::invalid_argument);
}

TEST_CASE("equality and hashing agree with canonical form") {
    ExactScalar a(1, 2), b(2, 4), c(1, 3);
    CHECK(a == b);
    CHECK(hash_value(a) == hash_value(b));
    CHECK(a != c);
    CHECK(a > c);
    CHECK(ExactScalar(-1, 2) < ExactScalar(1, 3));
}

TEST_CASE("parse") {
    CHECK(ExactScalar::parse("0") == ExactScalar(0));
    CHECK(ExactScalar::parse("42") == ExactScalar(42));
    CHECK(ExactScalar::parse("-7") == ExactScalar(-7));
    CHECK(ExactScalar::parse("+5") == ExactScalar(5));
    CHECK(ExactScalar::parse("1/2") == ExactScalar(1, 2));
    CHECK(ExactScalar::parse("-3/4") == ExactScalar(-3, 4));
    CHECK(ExactScalar::parse("2/4") == ExactScalar(1, 2));
    CHECK_THROWS_AS(ExactScalar::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(ExactScalar::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(ExactScalar::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(ExactScalar::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(ExactScalar::parse("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(ExactScalar::parse("1 /2"), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    ExactScalar a(1, 3), b(1, 6);
    CHECK(a + b == ExactScalar(1, 2));
    CHECK(a - b == ExactScalar(1, 6));
    CHECK(a * b == ExactScalar(1, 18));
    CHECK(a / b == ExactScalar(2));
    CHECK(-a == ExactScalar(-1, 3));
    CHECK_THROWS_AS(a / ExactScalar(0), std::invalid_argument);
}

TEST_CASE("string forms") {
    CHECK(ExactScalar(1, 2).str() == "1/2");
    CHECK(ExactScalar(-3, 4).str() == "-3/4");
    CHECK(ExactScalar(5).str() == "5");
    CHECK(ExactScalar(1, 2).decimal(4) == "0.5000");
    CHECK(ExactScalar(-3, 4).decimal(4) == "-0.7500");
    CHECK(ExactScalar(2, 3).decimal(4) == "0.6667");
    CHECK(ExactScalar(-1, 8000).decimal(3) == "0.000");  // never "-0"
    CHECK(ExactScalar(7).decimal(0) == "7");
}

TEST_CASE("bit length") {
    CHECK(ExactScalar(1, 2).bit_length() == 2);
    CHECK(ExactScalar(255).bit_length() == 8);
    ExactScalar big(mpz_class("123456789123456789"), mpz_class(1));
    CHECK(big.bit_length() >= 57);
}
