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

#include "weierstrass.hpp"

#include <algorithm>
#include <random>

namespace lctf {

const char* transform_kind(const Transform& t) {
    if (std::holds_alternative<ScaleMap>(t)) return "scale";
    if (std::holds_alternative<ShearMap>(t)) return "shear";
    return "linear_shear";
}

bool is_tate_unit(const MPoly& a) {
    const ExpVec origin(a.nvars(), 0);
    if (!val_is_zero(a.ring().val(a.coeff(origin)))) return false;
    for (const auto& [e, c] : a.terms()) {
        if (e == origin) continue;
        const Valuation v = a.ring().val(c);
        if (v.finite && v.value < 1) return false;
    }
    return true;
}

MPoly invert_tate_unit(const MPoly& a) {
    if (!is_tate_unit(a)) fail(Errc::not_a_unit, "series is not a unit at Gauss norm 1");
    const RingCtx& ring = a.ring();
    const ExpVec origin(a.nvars(), 0);
    const OElem c_inv = ring.inv(a.coeff(origin));
    const MPoly one = MPoly::constant(ring, a.nvars(), ring.one()).with_certified(a.certified());
    // a = c (1 + eps) with ||eps|| < 1: the inverse series ends within the
    // certified precision.
    const MPoly eps = a.scaled(c_inv) - one;
    MPoly sum = one;
    MPoly power = one;
    const MPoly neg_eps = -eps;
    for (int j = 1; j < a.certified(); ++j) {
        power = (power * neg_eps).pruned_to_certified();
        if (!power.has_terms()) break;
        sum = sum + power;
    }
    return sum.scaled(c_inv);
}

DistinguishOutcome find_distinguished_order(const MPoly& f) {
    if (f.nvars() < 1) fail(Errc::usage, "at least one variable required");
    if (f.is_zero_at_precision())
        fail(Errc::indeterminate_input, "zero polynomial at the working precision");
    const Valuation gv = f.gauss_val();
    if (!val_is_zero(gv))
        fail(Errc::usage, "Gauss valuation must be normalized to 0 before order detection");

    // Unit value at the origin: the sublevel sets near 0 are eventually
    // empty, so there is no order >= 1 worth certifying.
    if (val_is_zero(f.ring().val(f.coeff(ExpVec(f.nvars(), 0)))))
        return DistinguishOutcome{DistinguishStatus::unit_input, std::nullopt};

    const std::vector<MPoly> coeffs = f.coeffs_in_last_var();
    std::vector<std::pair<std::uint32_t, Valuation>> higher;
    for (std::size_t s = coeffs.size(); s-- > 1;) {
        const Valuation v = coeffs[s].gauss_val();
        const auto ge1 = val_ge(v, 1);
        if (ge1.has_value() && *ge1) {
            if (coeffs[s].has_terms()) higher.emplace_back(static_cast<std::uint32_t>(s), v);
            continue;
        }
        if (!ge1.has_value())
            fail(Errc::precision_exhausted, "cannot certify coefficient norms at this precision");
        // v == Finite(0): this index attains the Gauss norm. Either it is the
        // distinguished order, or no smaller index can strictly dominate it.
        if (!is_tate_unit(coeffs[s]))
            return DistinguishOutcome{DistinguishStatus::not_distinguished, std::nullopt};
        DistinguishedInfo info;
        info.s0 = static_cast<std::uint32_t>(s);
        info.leading_unit_val = v;
        std::reverse(higher.begin(), higher.end());
        info.higher_coeff_vals = std::move(higher);
        return DistinguishOutcome{DistinguishStatus::distinguished, std::move(info)};
    }
    return DistinguishOutcome{DistinguishStatus::not_distinguished, std::nullopt};
}

namespace {

std::uint64_t pow_u64_capped(std::uint64_t base, std::uint32_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) return cap + 1;
    }
    return r;
}

OElem draw_unit(const RingCtx& ring, std::mt19937_64& rng) {
    OElem c;
    const std::uint32_t q = ring.field().q();
    c.c[0] = static_cast<felem>(1 + rng() % (q - 1)); // nonzero constant digit
    for (int i = 1; i < ring.precision(); ++i) c.c[i] = static_cast<felem>(rng() % q);
    return c;
}

/// Valuation of the pure x_n^s coefficient, clamped at the certified precision.
Valuation pure_power_val(const MPoly& f, std::uint32_t s) {
    ExpVec e(f.nvars(), 0);
    e[f.nvars() - 1] = s;
    const Valuation v = f.ring().val(f.coeff(e));
    if (v.finite && v.value < f.certified()) return v;
    return Valuation::at_least(f.certified());
}

} // namespace

MakeDistinguishedResult make_distinguished(const MPoly& f, const MakeDistinguishedOptions& opts) {
    if (f.is_zero_at_precision())
        fail(Errc::indeterminate_input, "zero polynomial at the working precision");
    const std::uint32_t n = f.nvars();
    int attempts = 0;
    bool precision_trouble = false;

    auto attempt = [&](const MPoly& g,
                       std::vector<Transform> trail) -> std::optional<MakeDistinguishedResult> {
        ++attempts;
        const DistinguishOutcome out = find_distinguished_order(g);
        if (out.status == DistinguishStatus::unit_input)
            fail(Errc::usage, "input is a unit at the origin; nothing to prepare");
        if (out.status != DistinguishStatus::distinguished) return std::nullopt;
        return MakeDistinguishedResult{std::move(trail), g, *out.info};
    };

    if (auto r = attempt(f, {})) return std::move(*r);
    if (n < 2) fail(Errc::search_exhausted, "univariate input admits no shear");

    // Power shears: small uniform exponents first (they tend to realize the
    // smallest distinguished order), then the degree-separating shear, which
    // maps distinct support exponents to distinct x_n-degrees.
    std::vector<ShearMap> shears;
    for (std::uint32_t c = 1; c <= 3; ++c) shears.push_back(ShearMap{std::vector<std::uint32_t>(n - 1, c)});
    {
        const std::uint64_t base = static_cast<std::uint64_t>(f.total_degree()) + 1;
        ShearMap big;
        bool ok = true;
        for (std::uint32_t i = 0; i + 1 < n; ++i) {
            const std::uint64_t d = pow_u64_capped(base, n - 1 - i, 1u << 20);
            if (d > (1u << 20)) ok = false;
            big.d.push_back(static_cast<std::uint32_t>(d));
        }
        if (ok && std::find_if(shears.begin(), shears.end(), [&](const ShearMap& s) {
                return s.d == big.d;
            }) == shears.end())
            shears.push_back(std::move(big));
    }
    if (opts.enable_power_shears) {
        for (const ShearMap& shear : shears) {
            if (attempts >= opts.max_attempts) break;
            if (auto r = attempt(f.substitute_power_shear(shear), {Transform{shear}}))
                return std::move(*r);
        }
    }

    // Random linear shears realize the generic coordinate change; the
    // follow-up rescale makes the x_n^K coefficient the dominant one.
    std::mt19937_64 rng(opts.seed);
    while (attempts < opts.max_attempts) {
        LinearShear shear;
        for (std::uint32_t i = 0; i + 1 < n; ++i) shear.c.push_back(draw_unit(f.ring(), rng));
        MPoly g = f.substitute_linear_shear(shear);
        const std::uint32_t order = g.order_at_zero();
        if (order == 0) {
            ++attempts;
            continue; // nonzero value at the origin: no order >= 1 to expose
        }
        const Valuation vk = pure_power_val(g, order);
        if (!vk.finite) {
            ++attempts;
            continue; // non-generic draw: the x_n^K coefficient collapsed
        }
        // Choose a >= 0 with v_K + a K < v_s + a s for every pure power s > K,
        // so the K-th coefficient strictly dominates after x -> t^a x.
        std::int64_t a_exp = 0;
        for (std::uint32_t s = order + 1; s <= g.degree_in_last(); ++s) {
            const Valuation vs = pure_power_val(g, s);
            if (!vs.finite) continue;
            if (vs.value > vk.value) continue;
            const std::int64_t need =
                (static_cast<std::int64_t>(vk.value) - vs.value) / (static_cast<std::int64_t>(s) - order) + 1;
            a_exp = std::max(a_exp, need);
        }
        std::vector<Transform> trail{Transform{shear}};
        if (a_exp > 0) {
            ScaleMap uniform{std::vector<std::uint32_t>(n, static_cast<std::uint32_t>(a_exp)), 0};
            g = g.rescale(uniform);
            trail.emplace_back(uniform);
        }
        const std::int64_t k0 = vk.value + a_exp * order;
        if (k0 >= g.certified()) {
            ++attempts;
            precision_trouble = true;
            continue;
        }
        // x' -> t^{k0+1} x', x_n fixed, then divide by t^{k0}: the K-th
        // coefficient becomes a unit and every mixed term gains a factor of t.
        ScaleMap shrink{std::vector<std::uint32_t>(n, static_cast<std::uint32_t>(k0 + 1)),
                        static_cast<std::uint32_t>(k0)};
        shrink.a[n - 1] = 0;
        g = g.rescale(shrink);
        trail.emplace_back(shrink);
        if (auto r = attempt(g, std::move(trail))) return std::move(*r);
    }

    if (precision_trouble)
        fail(Errc::precision_exhausted, "rescale normalization exhausts the certified precision");
    fail(Errc::search_exhausted,
         "no distinguishing transform found within " + std::to_string(opts.max_attempts) + " attempts");
}

namespace {

/// Plain polynomial division of res by f_head in x_n, inverting only the
/// leading coefficient. Returns (quotient, remainder with deg < s0).
std::pair<MPoly, MPoly> divide_by_head(const MPoly& res, const MPoly& f_head, const MPoly& inv_lead,
                                       std::uint32_t s0) {
    const RingCtx ring = res.ring();
    const std::uint32_t n = res.nvars();
    MPoly quotient(ring, n, res.certified());
    MPoly r = res.pruned_to_certified();
    while (r.has_terms()) {
        const std::uint32_t deg = r.degree_in_last();
        if (deg < s0) break;
        const MPoly lead = r.coeff_in_last(deg);
        const MPoly qterm = (lead * inv_lead).lift_last_var(deg - s0);
        quotient = quotient + qterm;
        r = (r - qterm * f_head).pruned_to_certified();
        if (r.has_terms() && r.degree_in_last() >= deg)
            fail(Errc::certification_failed, "head division failed to cancel the leading coefficient");
    }
    return {quotient, r};
}

} // namespace

std::pair<MPoly, MPoly> weierstrass_divide(const MPoly& g, const MPoly& f,
                                           const DistinguishedInfo& info) {
    if (!g.ring().same(f.ring()) || g.nvars() != f.nvars())
        fail(Errc::usage, "dividend and divisor live in different rings");
    const RingCtx ring = f.ring();
    const std::uint32_t n = f.nvars();
    const int prec = std::min(g.certified(), f.certified());
    const std::uint32_t s0 = info.s0;

    // Re-validate the certificate against f before trusting it.
    const std::vector<MPoly> fc = f.coeffs_in_last_var();
    if (fc.size() <= s0 || !is_tate_unit(fc[s0]))
        fail(Errc::certification_failed, "divisor is not distinguished of the claimed order");
    for (std::size_t s = s0 + 1; s < fc.size(); ++s) {
        const auto ge1 = val_ge(fc[s].gauss_val(), 1);
        if (!ge1.has_value() || !*ge1)
            fail(Errc::certification_failed, "higher coefficients are not strictly dominated");
    }

    MPoly f_head(ring, n, prec);
    for (std::uint32_t s = 0; s <= s0; ++s)
        if (s < fc.size()) f_head = f_head + fc[s].lift_last_var(s);
    const MPoly f_tail = (f.with_certified(prec) - f_head).pruned_to_certified();
    const MPoly inv_lead = invert_tate_unit(fc[s0].with_certified(prec));

    MPoly quot(ring, n, prec);
    MPoly rem(ring, n, prec);
    MPoly residual = g.with_certified(prec).pruned_to_certified();
    int rounds = 0;
    while (!residual.is_zero_at_precision()) {
        if (++rounds > prec) fail(Errc::certification_failed, "division failed to contract");
        auto [qi, ri] = divide_by_head(residual, f_head, inv_lead, s0);
        quot = quot + qi;
        rem = rem + ri;
        residual = (-(qi * f_tail)).pruned_to_certified();
        // Contraction certificate: after round i the residual has gained at
        // least i factors of t.
        const auto ge = val_ge(residual.gauss_val(), rounds);
        if (!ge.has_value() || !*ge)
            fail(Errc::certification_failed, "residual valuation did not increase");
    }
    return {quot, rem};
}

PreparationResult weierstrass_prepare(const MPoly& f, const DistinguishedInfo& info,
                                      std::vector<Transform> trail) {
    const RingCtx ring = f.ring();
    const std::uint32_t n = f.nvars();
    const int prec = f.certified();
    ExpVec top(n, 0);
    top[n - 1] = info.s0;
    const MPoly xn_pow = MPoly::monomial(ring, n, top, ring.one()).with_certified(prec);

    auto [quotient, remainder] = weierstrass_divide(xn_pow, f, info);
    const MPoly omega = (xn_pow - remainder).reduced_mod_certified();
    const MPoly unit_u = quotient.reduced_mod_certified();

    // Certification: residual of the defining identity, unit constant term,
    // monicity of omega. Failures indicate an internal bug, never bad input.
    if (!val_is_zero(ring.val(unit_u.coeff(ExpVec(n, 0)))))
        fail(Errc::certification_failed, "preparation unit has a non-unit constant term");
    const MPoly residual = (unit_u * f - omega).pruned_to_certified();
    if (residual.has_terms())
        fail(Errc::certification_failed, "preparation identity does not hold at the certified precision");
    if (!(omega.coeff_in_last(info.s0) ==
          MPoly::constant(ring, n - 1, ring.one()).with_certified(prec)) ||
        omega.degree_in_last() != info.s0)
        fail(Errc::certification_failed, "prepared polynomial is not monic of the distinguished order");
    if (!val_is_zero(omega.gauss_val()))
        fail(Errc::certification_failed, "prepared polynomial does not have Gauss norm 1");

    return PreparationResult{omega, unit_u, info.s0, prec, std::move(trail), f};
}

ReduceOutcome reduce_to_weierstrass(const MPoly& f, const ReduceOptions& opts) {
    if (f.is_zero_at_precision())
        fail(Errc::indeterminate_input, "the ideal generated by the zero polynomial is zero");
    const RingCtx ring = f.ring();
    const std::uint32_t n = f.nvars();
    ReduceOutcome out;
    out.value_at_origin = f.coeff(ExpVec(n, 0));

    MPoly g = f;
    std::vector<Transform> trail;
    const Valuation gv = g.gauss_val();
    if (gv.finite && gv.value > 0) {
        ScaleMap normalize{std::vector<std::uint32_t>(n, 0), static_cast<std::uint32_t>(gv.value)};
        g = g.rescale(normalize);
        trail.emplace_back(normalize);
    }

    if (val_is_zero(ring.val(g.coeff(ExpVec(n, 0))))) {
        out.status = ReduceStatus::unit_input;
        out.transforms = std::move(trail);
        return out;
    }

    DistinguishedInfo info;
    const DistinguishOutcome found = find_distinguished_order(g);
    if (found.status == DistinguishStatus::distinguished) {
        info = *found.info;
    } else {
        MakeDistinguishedResult made =
            make_distinguished(g, MakeDistinguishedOptions{opts.seed, opts.max_attempts});
        for (auto& t : made.transforms) trail.push_back(std::move(t));
        g = std::move(made.poly);
        info = std::move(made.info);
    }

    out.prep = weierstrass_prepare(g, info, trail);
    out.transforms = out.prep->transforms;
    out.status = ReduceStatus::prepared;
    return out;
}

} // namespace lctf
