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
#include <string>
#include <vector>

namespace lctf {

/// Unsigned big integer, little-endian 32-bit limbs. Just enough arithmetic
/// for cross-multiplied inequality certificates: no division beyond a single
/// small limb (used for decimal printing), roots done by bit-wise search.
class BigUint {
  public:
    BigUint() = default;
    explicit BigUint(std::uint64_t v);

    bool is_zero() const { return limbs_.empty(); }
    std::size_t bit_length() const;

    static int compare(const BigUint& a, const BigUint& b);
    friend bool operator==(const BigUint& a, const BigUint& b) { return compare(a, b) == 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return compare(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return compare(a, b) <= 0; }

    friend BigUint operator+(const BigUint& a, const BigUint& b);
    friend BigUint operator-(const BigUint& a, const BigUint& b); // requires a >= b
    friend BigUint operator*(const BigUint& a, const BigUint& b);

    static BigUint pow(const BigUint& base, std::uint64_t exponent);
    static BigUint pow_u64(std::uint64_t base, std::uint64_t exponent);

    /// 2^bits.
    static BigUint two_pow(std::size_t bits);
    void set_bit(std::size_t i);
    bool get_bit(std::size_t i) const;

    /// floor(x^(1/k)), k >= 1, by binary digit construction.
    static BigUint kth_root_floor(const BigUint& x, std::uint64_t k);

    std::string to_decimal() const;

  private:
    void trim();
    std::vector<std::uint32_t> limbs_;
};

/// Signed wrapper; zero is canonical (negative == false).
struct BigInt {
    bool negative = false;
    BigUint mag;

    BigInt() = default;
    BigInt(bool neg, BigUint m) : negative(neg && !m.is_zero()), mag(std::move(m)) {}
    static BigInt from_i64(std::int64_t v);

    int sign() const { return mag.is_zero() ? 0 : (negative ? -1 : 1); }
    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    std::string to_decimal() const;
};

} // namespace lctf
