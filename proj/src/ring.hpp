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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace lctf {

/// Session-wide cap on the working precision M (t-adic truncation depth).
inline constexpr int kMaxPrecision = 32;

/// t-adic valuation certified at finite precision: either the exact index of
/// the lowest nonzero t-coefficient, or "at least `value`" when every
/// coefficient below the certification bound vanishes.
struct Valuation {
    std::int32_t value = 0;
    bool finite = true;

    static Valuation fin(std::int32_t v) { return Valuation{v, true}; }
    static Valuation at_least(std::int32_t m) { return Valuation{m, false}; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Certified "val >= k": nullopt when the precision in force cannot decide.
std::optional<bool> val_ge(Valuation v, std::int32_t k);

/// Certified "val == 0".
bool val_is_zero(Valuation v);

Valuation val_min(Valuation a, Valuation b);
std::string to_string(Valuation v);

/// Element of O/t^M = GF(q)[t]/t^M: packed field-element code of the t^i
/// coefficient at index i. Slots at index >= M stay zero, so default
/// construction is the ring zero and equality is plain array comparison.
struct OElem {
    std::array<felem, kMaxPrecision> c{};

    friend bool operator==(const OElem&, const OElem&) = default;
};

/// Arithmetic context for O/t^M: the residue field plus the working
/// precision M. Values are immutable; all operations are pure and safe to
/// call concurrently.
class RingCtx {
  public:
    RingCtx(const Field* field, int precision);

    const Field& field() const { return *field_; }
    int precision() const { return m_; }

    bool same(const RingCtx& other) const {
        return m_ == other.m_ && (field_ == other.field_ || *field_ == *other.field_);
    }

    OElem zero() const { return OElem{}; }
    OElem one() const { return from_const(field_->one()); }
    OElem from_const(felem a) const;
    OElem from_int(std::int64_t v) const { return from_const(field_->from_int(v)); }
    /// t^k; the zero element when k >= M.
    OElem tpow(int k) const;
    OElem make(const std::vector<felem>& coeffs) const;

    bool is_zero(const OElem& a) const;
    bool is_zero_trunc(const OElem& a, int k) const;

    OElem add(const OElem& a, const OElem& b) const;
    OElem sub(const OElem& a, const OElem& b) const;
    OElem neg(const OElem& a) const;
    OElem mul(const OElem& a, const OElem& b) const { return mul_trunc(a, b, m_); }
    OElem mul_trunc(const OElem& a, const OElem& b, int k) const;

    /// Finite(v) with v the lowest nonzero coefficient index, AtLeast(M) if
    /// every stored coefficient vanishes.
    Valuation val(const OElem& a) const;

    /// Inverse of a unit (val 0) by the finite geometric series: writing
    /// a = c(1 + eps) with |eps| < 1, the inverse is c^{-1} sum (-eps)^j.
    OElem inv(const OElem& a) const;

    OElem shift_up(const OElem& a, int s) const;        // multiply by t^s
    OElem shift_down_exact(const OElem& a, int s) const; // divide by t^s, val >= s required

    /// The q^k residues mod t^k in lexicographic order by (c_0, ..., c_{k-1})
    /// with c_0 varying fastest: 0, 1, ..., t, 1 + t, ...
    std::vector<OElem> enumerate(int k) const;

    std::string to_string(const OElem& a) const;

  private:
    const Field* field_;
    int m_;
};

} // namespace lctf
