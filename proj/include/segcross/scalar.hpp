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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace segcross {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Equality, ordering and hashing all agree with the
/// canonical form, so ExactScalar is safe as a hash-map key.
class ExactScalar {
public:
    ExactScalar() : v_(0) {}
    ExactScalar(long n) : v_(n) {}
    ExactScalar(const mpz_class& n) : v_(n) {}

    /// num/den, reduced. Throws std::invalid_argument when den == 0.
    ExactScalar(const mpz_class& num, const mpz_class& den);
    ExactScalar(long num, long den);

    /// Accepts "p", "-p", "p/q", "-p/q" with decimal digits; q > 0.
    /// Throws std::invalid_argument on malformed input or zero denominator.
    static ExactScalar parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Larger of the numerator/denominator bit lengths.
    std::size_t bit_length() const;

    ExactScalar operator-() const { return ExactScalar(mpq_class(-v_)); }
    ExactScalar& operator+=(const ExactScalar& o) { v_ += o.v_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { v_ -= o.v_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { v_ *= o.v_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o);

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    /// Canonical text form: "p" when integral, otherwise "p/q".
    std::string str() const;
    double to_double() const { return v_.get_d(); }

    /// Decimal rendering with a fixed number of digits after the point,
    /// rounded to nearest (ties away from zero). Deterministic, no floats.
    std::string decimal(int digits) const;

    explicit ExactScalar(const mpq_class& q) : v_(q) { /* assumed canonical */ }

private:
    mpq_class v_;
};

std::size_t hash_value(const ExactScalar& s);

}  // namespace segcross

template <>
struct std::hash<segcross::ExactScalar> {
    std::size_t operator()(const segcross::ExactScalar& s) const { return segcross::hash_value(s); }
};
