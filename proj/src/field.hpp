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

#include "errors.hpp"

namespace lctf {

/// Element of GF(q), q = p^e, as a canonical packed code: sum of c_i * p^i
/// over the coefficient vector (c_0, ..., c_{e-1}), every c_i in [0, p).
/// Equality of codes is structural equality of reduced representatives.
using felem = std::uint32_t;

/// Arithmetic context for the residue field GF(q). Immutable after
/// construction, safe to share across threads.
///
/// For e > 1 an explicit monic modulus of degree e over GF(p) must be
/// supplied (coefficients low degree first, length e + 1); it is verified
/// irreducible by exhaustive trial against all monic divisors of degree
/// <= e/2. There is no built-in modulus table.
class Field {
  public:
    struct Params {
        std::uint32_t p = 2;
        std::uint32_t e = 1;
        std::vector<std::uint32_t> modulus; // ignored when e == 1
        std::string generator_symbol = "g";
    };

    static constexpr std::uint64_t kMaxCardinality = std::uint64_t{1} << 16;

    explicit Field(Params params);
    static Field prime_field(std::uint32_t p) { return Field(Params{p, 1, {}, "g"}); }

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const std::string& generator_symbol() const { return generator_symbol_; }

    felem zero() const { return 0; }
    felem one() const { return 1; }
    bool is_zero(felem a) const { return a == 0; }

    /// Integers embed through GF(p); negatives reduce to canonical residues.
    felem from_int(std::int64_t v) const;
    felem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<std::uint32_t> coeffs(felem a) const;

    /// The class of x modulo the modulus; only defined for e > 1.
    felem generator() const;

    felem add(felem a, felem b) const { return tabled_ ? add_[a * q_ + b] : raw_add(a, b); }
    felem sub(felem a, felem b) const { return add(a, neg(b)); }
    felem neg(felem a) const { return tabled_ ? neg_[a] : raw_neg(a); }
    felem mul(felem a, felem b) const { return tabled_ ? mul_[a * q_ + b] : raw_mul(a, b); }
    felem inv(felem a) const;
    felem pow(felem a, std::uint64_t n) const;

    /// All q elements in a fixed order: 0, 1, then ascending packed code.
    std::vector<felem> enumerate() const;

    std::string to_string(felem a) const;

    /// Stable textual identity used in fingerprints and cache keys.
    std::string canonical_key() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

  private:
    felem raw_add(felem a, felem b) const;
    felem raw_neg(felem a) const;
    felem raw_mul(felem a, felem b) const;
    void build_tables();
    void verify_irreducible() const;

    std::uint32_t p_ = 2;
    std::uint32_t e_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::string generator_symbol_;

    // lookup tables for small fields; raw digit arithmetic otherwise
    static constexpr std::uint32_t kTableLimit = 256;
    bool tabled_ = false;
    std::vector<std::uint16_t> add_, mul_, neg_, inv_;
};

} // namespace lctf
