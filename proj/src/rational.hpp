/*
   Copyright 2026 The lctf authors

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

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace lctf {

/// Exact rational with reduced representation and positive denominator.
/// Comparisons cross-multiply in 128-bit, so operands must stay well below
/// 2^63; every user-facing quantity stored here is desk-scale.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) fail(Errc::usage, "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
};

} // namespace lctf
