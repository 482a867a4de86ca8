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

#include "bigint.hpp"

#include <algorithm>

#include "errors.hpp"

namespace lctf {

BigUint::BigUint(std::uint64_t v) {
    while (v != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
        v >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    std::size_t bits = (limbs_.size() - 1) * 32;
    std::uint32_t top = limbs_.back();
    while (top != 0) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
    BigUint r;
    const std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
    r.limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
    if (BigUint::compare(a, b) < 0) fail(Errc::internal, "big integer underflow");
    BigUint r;
    r.limbs_.resize(a.limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                         (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
        if (d < 0) {
            d += (std::int64_t{1} << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<std::uint32_t>(d);
    }
    r.trim();
    return r;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
    BigUint r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] +
                                r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

BigUint BigUint::pow(const BigUint& base, std::uint64_t exponent) {
    BigUint result(1);
    BigUint acc = base;
    while (exponent != 0) {
        if (exponent & 1) result = result * acc;
        exponent >>= 1;
        if (exponent != 0) acc = acc * acc;
    }
    return result;
}

BigUint BigUint::pow_u64(std::uint64_t base, std::uint64_t exponent) {
    return pow(BigUint(base), exponent);
}

BigUint BigUint::two_pow(std::size_t bits) {
    BigUint r;
    r.set_bit(bits);
    return r;
}

void BigUint::set_bit(std::size_t i) {
    const std::size_t limb = i / 32;
    if (limb >= limbs_.size()) limbs_.resize(limb + 1, 0);
    limbs_[limb] |= (std::uint32_t{1} << (i % 32));
}

bool BigUint::get_bit(std::size_t i) const {
    const std::size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

BigUint BigUint::kth_root_floor(const BigUint& x, std::uint64_t k) {
    if (k == 0) fail(Errc::internal, "zeroth root");
    if (k == 1 || x.is_zero()) return x;
    const std::size_t root_bits = x.bit_length() / k + 1;
    BigUint z;
    for (std::size_t i = root_bits + 1; i-- > 0;) {
        BigUint cand = z;
        cand.set_bit(i);
        if (pow(cand, k) <= x) z = cand;
    }
    return z;
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        // long division of the limb vector by 10^9
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_i64(std::int64_t v) {
    if (v >= 0) return BigInt(false, BigUint(static_cast<std::uint64_t>(v)));
    return BigInt(true, BigUint(static_cast<std::uint64_t>(-(v + 1)) + 1));
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative == b.negative) return BigInt(a.negative, a.mag + b.mag);
    const int c = BigUint::compare(a.mag, b.mag);
    if (c == 0) return BigInt();
    if (c > 0) return BigInt(a.negative, a.mag - b.mag);
    return BigInt(b.negative, b.mag - a.mag);
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    return a + BigInt(!b.negative, b.mag);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    return BigInt(a.negative != b.negative, a.mag * b.mag);
}

std::string BigInt::to_decimal() const {
    return sign() < 0 ? "-" + mag.to_decimal() : mag.to_decimal();
}

} // namespace lctf
