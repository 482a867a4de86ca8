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

#include "ring.hpp"

namespace lctf {

std::optional<bool> val_ge(Valuation v, std::int32_t k) {
    if (v.finite) return v.value >= k;
    if (v.value >= k) return true; // at least v.value >= k
    return std::nullopt;           // could be anywhere in [v.value, infinity)
}

bool val_is_zero(Valuation v) { return v.finite && v.value == 0; }

Valuation val_min(Valuation a, Valuation b) {
    if (a.finite && b.finite) return Valuation::fin(std::min(a.value, b.value));
    if (a.finite) return a.value < b.value ? a : b;       // b certified >= b.value
    if (b.finite) return b.value < a.value ? b : a;
    return Valuation::at_least(std::min(a.value, b.value));
}

std::string to_string(Valuation v) {
    return v.finite ? std::to_string(v.value) : ">=" + std::to_string(v.value);
}

RingCtx::RingCtx(const Field* field, int precision) : field_(field), m_(precision) {
    if (field_ == nullptr) fail(Errc::internal, "null field");
    if (m_ < 1 || m_ > kMaxPrecision)
        fail(Errc::cap_exceeded,
             "precision M must lie in [1, " + std::to_string(kMaxPrecision) + "]");
}

OElem RingCtx::from_const(felem a) const {
    OElem r;
    r.c[0] = a;
    return r;
}

OElem RingCtx::tpow(int k) const {
    OElem r;
    if (k < 0) fail(Errc::not_integral, "negative power of the uniformizer");
    if (k < m_) r.c[k] = field_->one();
    return r;
}

OElem RingCtx::make(const std::vector<felem>& coeffs) const {
    OElem r;
    for (std::size_t i = 0; i < coeffs.size() && i < static_cast<std::size_t>(m_); ++i)
        r.c[i] = coeffs[i];
    return r;
}

bool RingCtx::is_zero(const OElem& a) const { return is_zero_trunc(a, m_); }

bool RingCtx::is_zero_trunc(const OElem& a, int k) const {
    for (int i = 0; i < k; ++i)
        if (a.c[i] != 0) return false;
    return true;
}

OElem RingCtx::add(const OElem& a, const OElem& b) const {
    OElem r;
    for (int i = 0; i < m_; ++i) r.c[i] = field_->add(a.c[i], b.c[i]);
    return r;
}

OElem RingCtx::sub(const OElem& a, const OElem& b) const {
    OElem r;
    for (int i = 0; i < m_; ++i) r.c[i] = field_->sub(a.c[i], b.c[i]);
    return r;
}

OElem RingCtx::neg(const OElem& a) const {
    OElem r;
    for (int i = 0; i < m_; ++i) r.c[i] = field_->neg(a.c[i]);
    return r;
}

OElem RingCtx::mul_trunc(const OElem& a, const OElem& b, int k) const {
    OElem r;
    if (k > m_) k = m_;
    for (int i = 0; i < k; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j + i < k; ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] = field_->add(r.c[i + j], field_->mul(a.c[i], b.c[j]));
        }
    }
    return r;
}

Valuation RingCtx::val(const OElem& a) const {
    for (int i = 0; i < m_; ++i)
        if (a.c[i] != 0) return Valuation::fin(i);
    return Valuation::at_least(m_);
}

OElem RingCtx::inv(const OElem& a) const {
    if (a.c[0] == 0) {
        if (is_zero(a)) fail(Errc::not_a_unit, "inverse of zero in O/t^M");
        fail(Errc::not_a_unit, "inverse of a non-unit (positive valuation)");
    }
    const felem c_inv = field_->inv(a.c[0]);
    // eps = a / c - 1 has valuation >= 1, so the series ends after M terms.
    OElem eps;
    for (int i = 1; i < m_; ++i) eps.c[i] = field_->mul(a.c[i], c_inv);
    OElem sum = one();
    OElem power = one();
    const OElem neg_eps = neg(eps);
    for (int j = 1; j < m_; ++j) {
        power = mul(power, neg_eps);
        if (is_zero(power)) break;
        sum = add(sum, power);
    }
    OElem r;
    for (int i = 0; i < m_; ++i) r.c[i] = field_->mul(sum.c[i], c_inv);
    return r;
}

OElem RingCtx::shift_up(const OElem& a, int s) const {
    OElem r;
    for (int i = 0; i + s < m_; ++i) r.c[i + s] = a.c[i];
    return r;
}

OElem RingCtx::shift_down_exact(const OElem& a, int s) const {
    for (int i = 0; i < s && i < m_; ++i)
        if (a.c[i] != 0) fail(Errc::not_integral, "t-power division of an element of lower valuation");
    OElem r;
    for (int i = 0; i + s < m_; ++i) r.c[i] = a.c[i + s];
    return r;
}

std::vector<OElem> RingCtx::enumerate(int k) const {
    if (k < 1 || k > m_)
        fail(Errc::precision_exceeded,
             "residue depth " + std::to_string(k) + " outside [1, M=" + std::to_string(m_) + "]");
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        total *= field_->q();
        if (total > (std::uint64_t{1} << 22)) fail(Errc::cap_exceeded, "residue enumeration too large");
    }
    std::vector<OElem> out;
    out.reserve(total);
    OElem cur;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t tmp = idx;
        for (int i = 0; i < k; ++i) {
            cur.c[i] = static_cast<felem>(tmp % field_->q());
            tmp /= field_->q();
        }
        out.push_back(cur);
    }
    return out;
}

std::string RingCtx::to_string(const OElem& a) const {
    std::string out;
    for (int i = 0; i < m_; ++i) {
        if (a.c[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string coef = field_->to_string(a.c[i]);
        const bool needs_parens = coef.find('+') != std::string::npos;
        if (needs_parens) coef = "(" + coef + ")";
        if (i == 0) {
            out += coef;
        } else {
            std::string tp = (i == 1) ? "t" : "t^" + std::to_string(i);
            out += (a.c[i] == field_->one()) ? tp : coef + "*" + tp;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace lctf
