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

#include "segcross/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace segcross {

ExactScalar::ExactScalar(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("ExactScalar: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

ExactScalar::ExactScalar(long num, long den)
    : ExactScalar(mpz_class(num), mpz_class(den)) {}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    if (o.is_zero()) throw std::invalid_argument("ExactScalar: division by zero");
    v_ /= o.v_;
    return *this;
}

ExactScalar ExactScalar::parse(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        return !s.empty() &&
               std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    std::string_view num = text;
    std::string_view den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-'))
        digits.remove_prefix(1);
    if (!is_digits(digits))
        throw std::invalid_argument("ExactScalar: malformed rational '" + std::string(text) + "'");
    mpz_class n{std::string{digits}};
    if (!num.empty() && num.front() == '-') n = -n;
    if (den.data() != nullptr) {
        if (!is_digits(den))
            throw std::invalid_argument("ExactScalar: malformed rational '" + std::string(text) + "'");
        mpz_class d{std::string{den}};
        if (d == 0)
            throw std::invalid_argument("ExactScalar: zero denominator in '" + std::string(text) + "'");
        return ExactScalar(n, d);
    }
    return ExactScalar(n);
}

std::size_t ExactScalar::bit_length() const {
    std::size_t n = mpz_sizeinbase(v_.get_num_mpz_t(), 2);
    std::size_t d = mpz_sizeinbase(v_.get_den_mpz_t(), 2);
    return std::max(n, d);
}

std::string ExactScalar::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string ExactScalar::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class mag_num = abs(v_.get_num()) * scale;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mag_num.get_mpz_t(), v_.get_den().get_mpz_t());
    if (2 * r >= v_.get_den()) q += 1;
    mpz_class ip = q / scale, fp = q % scale;
    std::string out = (sign() < 0 && q != 0) ? "-" : "";
    out += ip.get_str();
    if (digits > 0) {
        std::string frac = fp.get_str();
        frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
        out += "." + frac;
    }
    return out;
}

std::size_t hash_value(const ExactScalar& s) {
    auto fold = [](mpz_srcptr z, std::size_t seed) {
        std::size_t h = seed ^ static_cast<std::size_t>(mpz_sgn(z) + 2);
        std::size_t n = mpz_size(z);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t limb = static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i)));
            h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    };
    std::size_t h = fold(s.raw().get_num_mpz_t(), 0x1f3d5b79u);
    return fold(s.raw().get_den_mpz_t(), h);
}

}  // namespace segcross
