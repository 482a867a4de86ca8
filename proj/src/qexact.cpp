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

#include "qexact.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "errors.hpp"

namespace lctf {

namespace {
constexpr std::int64_t kMaxRootDegree = 64;
constexpr std::int64_t kMaxExponent = 100000;
} // namespace

int qpow_sum_sign(std::uint32_t p, std::uint32_t e, const std::vector<QPowTerm>& terms) {
    if (terms.empty()) return 0;

    // Rebase exponents to the prime p (q^r = p^{e r}) over a common
    // denominator L; p^{1/L} generates a degree-L extension, so the residue
    // classes of exponents mod L are linearly independent over the rationals.
    std::int64_t L = 1;
    for (const auto& t : terms) {
        L = std::lcm(L, t.exp.den);
        if (L > kMaxRootDegree) fail(Errc::cap_exceeded, "exponent denominator too large");
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> scaled; // (coeff, integer exponent of p^{1/L})
    std::int64_t min_exp = 0;
    for (const auto& t : terms) {
        if (t.coeff == 0) continue;
        const std::int64_t ex = t.exp.num * (L / t.exp.den) * static_cast<std::int64_t>(e);
        if (ex > kMaxExponent || ex < -kMaxExponent) fail(Errc::cap_exceeded, "exponent too large");
        min_exp = std::min(min_exp, ex);
        scaled.emplace_back(t.coeff, ex);
    }
    if (scaled.empty()) return 0;

    // Shift by p^{-min_exp} (positive factor, sign preserved) and collect the
    // exact integer coefficient A_r of each residue class p^{r/L}.
    std::map<std::int64_t, BigInt> by_residue;
    for (const auto& [c, ex] : scaled) {
        const std::int64_t shifted = ex - min_exp;
        const std::int64_t r = shifted % L;
        const std::uint64_t whole = static_cast<std::uint64_t>(shifted / L);
        const BigInt contrib =
            BigInt::from_i64(c) * BigInt(false, BigUint::pow_u64(p, whole));
        auto it = by_residue.find(r);
        if (it == by_residue.end())
            by_residue.emplace(r, contrib);
        else
            it->second = it->second + contrib;
    }
    bool all_zero = true;
    for (const auto& [r, a] : by_residue)
        if (a.sign() != 0) all_zero = false;
    if (all_zero) return 0;
    if (by_residue.size() == 1) return by_residue.begin()->second.sign();

    // Bracket each p^{r/L} within [z, z+1] / 2^B by a certified integer
    // L-th root and sum the interval endpoints exactly; raise B until the
    // interval separates from zero (it must: the value is a nonzero algebraic
    // number).
    for (std::size_t bits = 32; bits <= 4096; bits *= 2) {
        BigInt lo, hi;
        for (const auto& [r, a] : by_residue) {
            if (a.sign() == 0) continue;
            BigInt zlo, zhi;
            if (r == 0) {
                zlo = zhi = BigInt(false, BigUint::two_pow(bits));
            } else {
                const BigUint x = BigUint::two_pow(bits * static_cast<std::size_t>(L)) *
                                  BigUint::pow_u64(p, static_cast<std::uint64_t>(r));
                const BigUint root = BigUint::kth_root_floor(x, static_cast<std::uint64_t>(L));
                zlo = BigInt(false, root);
                zhi = BigInt(false, root + BigUint(1));
            }
            if (a.sign() > 0) {
                lo = lo + a * zlo;
                hi = hi + a * zhi;
            } else {
                lo = lo + a * zhi;
                hi = hi + a * zlo;
            }
        }
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
    }
    fail(Errc::internal, "sign of q-power sum not separated at maximal precision");
}

bool qpow_sum_le(std::uint32_t p, std::uint32_t e, std::vector<QPowTerm> lhs,
                 const std::vector<QPowTerm>& rhs) {
    for (auto& t : lhs) t.coeff = -t.coeff;
    std::vector<QPowTerm> diff = rhs; // rhs - lhs
    diff.insert(diff.end(), lhs.begin(), lhs.end());
    return qpow_sum_sign(p, e, diff) >= 0;
}

} // namespace lctf
