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

#include "field.hpp"

#include <algorithm>

namespace lctf {

namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
using PolyP = std::vector<std::uint32_t>;

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic of positive degree.
PolyP poly_mod(PolyP f, const PolyP& g, std::uint32_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint32_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            std::uint64_t cur = f[shift + i] + static_cast<std::uint64_t>(p) -
                                (static_cast<std::uint64_t>(lead) * g[i]) % p;
            f[shift + i] = static_cast<std::uint32_t>(cur % p);
        }
        trim(f);
    }
    return f;
}

} // namespace

Field::Field(Params params)
    : p_(params.p), e_(params.e), modulus_(std::move(params.modulus)),
      generator_symbol_(params.generator_symbol.empty() ? "g" : params.generator_symbol) {
    if (!is_prime(p_)) fail(Errc::usage, "field characteristic " + std::to_string(p_) + " is not prime");
    if (e_ < 1) fail(Errc::usage, "extension degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        q *= p_;
        if (q > kMaxCardinality) fail(Errc::cap_exceeded, "field cardinality exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);

    if (e_ == 1) {
        modulus_.clear();
    } else {
        if (modulus_.size() != e_ + 1)
            fail(Errc::usage, "modulus must have degree e (expected " + std::to_string(e_ + 1) +
                                  " coefficients, low degree first)");
        for (auto& c : modulus_) c %= p_;
        if (modulus_.back() != 1) fail(Errc::usage, "modulus must be monic");
        verify_irreducible();
    }

    if (q_ <= kTableLimit) build_tables();
}

void Field::verify_irreducible() const {
    // Exhaustive trial: the modulus is reducible iff it has a monic factor of
    // degree between 1 and e/2. p^(e/2) <= sqrt(q) <= 256, so this is cheap.
    for (std::uint32_t deg = 1; deg <= e_ / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < deg; ++i) count *= p_;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PolyP cand(deg + 1, 0);
            std::uint64_t tmp = idx;
            for (std::uint32_t i = 0; i < deg; ++i) {
                cand[i] = static_cast<std::uint32_t>(tmp % p_);
                tmp /= p_;
            }
            cand[deg] = 1;
            if (poly_mod(modulus_, cand, p_).empty())
                fail(Errc::usage, "modulus is reducible over GF(" + std::to_string(p_) + ")");
        }
    }
}

felem Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<felem>(r);
}

felem Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > e_) fail(Errc::usage, "coefficient vector longer than extension degree");
    felem code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + (coeffs[i] % p_);
    return code;
}

std::vector<std::uint32_t> Field::coeffs(felem a) const {
    std::vector<std::uint32_t> out(e_, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

felem Field::generator() const {
    if (e_ < 2) fail(Errc::usage, "prime field has no extension generator");
    return p_; // the class of x: coefficient vector (0, 1, 0, ...)
}

felem Field::raw_add(felem a, felem b) const {
    felem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

felem Field::raw_neg(felem a) const {
    felem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const felem d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

felem Field::raw_mul(felem a, felem b) const {
    if (e_ == 1) return static_cast<felem>((static_cast<std::uint64_t>(a) * b) % p_);
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    const auto ca = coeffs(a);
    const auto cb = coeffs(b);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (ca[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] = static_cast<std::uint32_t>(
                (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    }
    // reduce by the monic modulus: x^e == -(lower part)
    for (std::size_t k = prod.size(); k-- > e_;) {
        const std::uint32_t lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (std::uint32_t i = 0; i < e_; ++i) {
            std::uint64_t cur = prod[k - e_ + i] + static_cast<std::uint64_t>(p_) -
                                (static_cast<std::uint64_t>(lead) * modulus_[i]) % p_;
            prod[k - e_ + i] = static_cast<std::uint32_t>(cur % p_);
        }
    }
    prod.resize(e_);
    felem code = 0;
    for (std::size_t i = prod.size(); i-- > 0;) code = code * p_ + prod[i];
    return code;
}

void Field::build_tables() {
    tabled_ = false;
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (felem a = 0; a < q_; ++a) {
        neg_[a] = static_cast<std::uint16_t>(raw_neg(a));
        for (felem b = 0; b < q_; ++b) {
            add_[a * q_ + b] = static_cast<std::uint16_t>(raw_add(a, b));
            const felem m = raw_mul(a, b);
            mul_[a * q_ + b] = static_cast<std::uint16_t>(m);
            if (m == 1) inv_[a] = static_cast<std::uint16_t>(b);
        }
    }
    tabled_ = true;
}

felem Field::inv(felem a) const {
    if (a == 0) fail(Errc::division_by_zero, "inverse of zero in GF(q)");
    if (tabled_) return inv_[a];
    return pow(a, q_ - 2);
}

felem Field::pow(felem a, std::uint64_t n) const {
    felem result = 1, acc = a;
    while (n != 0) {
        if (n & 1) result = mul(result, acc);
        n >>= 1;
        if (n != 0) acc = mul(acc, acc);
    }
    return result;
}

std::vector<felem> Field::enumerate() const {
    std::vector<felem> out(q_);
    for (felem a = 0; a < q_; ++a) out[a] = a;
    return out;
}

std::string Field::to_string(felem a) const {
    if (e_ == 1) return std::to_string(a);
    const auto c = coeffs(a);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
        } else {
            if (c[i] != 1) out += std::to_string(c[i]) + "*";
            out += generator_symbol_;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

std::string Field::canonical_key() const {
    std::string key = "p=" + std::to_string(p_) + ";e=" + std::to_string(e_);
    if (e_ > 1) {
        key += ";mod=";
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(modulus_[i]);
        }
    }
    return key;
}

} // namespace lctf
