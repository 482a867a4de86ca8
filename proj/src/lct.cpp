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

#include "lct.hpp"

#include <cmath>
#include <numeric>

#include "qexact.hpp"

namespace lctf {

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::weierstrass_degree: return "weierstrass_degree";
        case BoundKind::multiplicity: return "multiplicity";
        case BoundKind::complexity: return "complexity";
    }
    return "unknown";
}

namespace {

/// log_q(q^n N_k / N_{k+1}) as an exact integer when the ratio is a power of
/// q, nullopt otherwise.
std::optional<std::int64_t> exact_increment(std::uint64_t q, std::uint32_t n, std::uint64_t nk,
                                            std::uint64_t nk1) {
    __int128 numer = nk;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (numer > (static_cast<__int128>(1) << 100)) return std::nullopt;
        numer *= q;
    }
    if (nk1 == 0 || numer % nk1 != 0) return std::nullopt;
    __int128 ratio = numer / nk1;
    std::int64_t c = 0;
    while (ratio % q == 0) {
        ratio /= q;
        ++c;
    }
    if (ratio != 1) return std::nullopt;
    return c;
}

double double_increment(std::uint64_t q, std::uint32_t n, std::uint64_t nk, std::uint64_t nk1) {
    return static_cast<double>(n) +
           (std::log2(static_cast<double>(nk)) - std::log2(static_cast<double>(nk1))) /
               std::log2(static_cast<double>(q));
}

} // namespace

LctEstimate estimate_lct(const CountTable& table, Window window) {
    LctEstimate est;
    est.window = window;
    for (const auto& row : table.rows) {
        if (row.count == 0) {
            est.infinite = true; // the generators have no common zero on the ball
            return est;
        }
    }
    if (window.lo < 1 || window.hi <= window.lo)
        fail(Errc::usage, "estimate window must satisfy 1 <= lo < hi");
    for (std::uint32_t k = window.lo; k <= window.hi; ++k) {
        if (!table.lookup(k))
            fail(Errc::insufficient_data,
                 "count table does not cover the window row k=" + std::to_string(k));
    }

    bool all_exact = true;
    std::int64_t exact_sum = 0;
    double sum = 0.0;
    for (std::uint32_t k = window.lo; k < window.hi; ++k) {
        const std::uint64_t nk = *table.lookup(k);
        const std::uint64_t nk1 = *table.lookup(k + 1);
        const auto exact = exact_increment(table.q, table.nvars, nk, nk1);
        double slope;
        if (exact) {
            exact_sum += *exact;
            slope = static_cast<double>(*exact);
        } else {
            all_exact = false;
            slope = double_increment(table.q, table.nvars, nk, nk1);
        }
        sum += slope;
        est.point_slopes.emplace_back(k, slope);
    }
    const std::uint32_t width = window.hi - window.lo;
    if (all_exact) {
        est.exact = Rational(exact_sum, static_cast<std::int64_t>(width));
        est.regression = static_cast<double>(est.exact->num) / static_cast<double>(est.exact->den);
    } else {
        est.regression = sum / width;
    }
    return est;
}

BoundCert weierstrass_lower_bound(const PreparationResult& prep) {
    BoundCert cert;
    cert.kind = BoundKind::weierstrass_degree;
    cert.d = prep.s0;
    cert.value = Rational(1, static_cast<std::int64_t>(prep.s0));
    return cert;
}

BoundCert multiplicity_lower_bound(const MPoly& f) {
    BoundCert cert;
    cert.kind = BoundKind::multiplicity;
    const std::uint32_t order = f.order_at_zero();
    if (order == 0) {
        // nonzero value at the point: |f| is bounded below near it
        cert.infinite = true;
        return cert;
    }
    cert.K = order;
    cert.value = Rational(1, static_cast<std::int64_t>(order));
    return cert;
}

BoundCert complexity_lower_bound(const BoundParams& params) {
    if (params.d < 1 || params.D < 1) fail(Errc::usage, "degrees d and D must be >= 1");
    std::uint64_t denom = params.d;
    for (std::uint32_t i = 0; i < params.m; ++i) {
        denom *= params.D;
        if (denom > (std::uint64_t{1} << 32)) fail(Errc::cap_exceeded, "d * D^m too large");
    }
    BoundCert cert;
    cert.kind = BoundKind::complexity;
    cert.d = params.d;
    cert.D = params.D;
    cert.m = params.m;
    cert.value = Rational(1, static_cast<std::int64_t>(denom));
    return cert;
}

ZetaResult zeta_partial_sum(const CountTable& table, Rational s, std::uint32_t k_max,
                            std::optional<std::uint32_t> weierstrass_degree,
                            std::uint32_t p, std::uint32_t e) {
    if (s.num < 0) fail(Errc::usage, "the zeta variable s must be >= 0");
    ZetaResult res;
    res.s = s;
    res.degree = weierstrass_degree;
    if (!table.lookup(k_max + 1))
        fail(Errc::insufficient_data,
             "zeta partial sums to k_max need table depth k_max + 1 (mu(val = k) = mu_k - mu_{k+1})");

    const std::uint64_t q = table.q;
    const std::uint32_t n = table.nvars;
    const double logq = std::log2(static_cast<double>(q));
    double running = 0.0;
    std::vector<QPowTerm> sum_terms;
    for (std::uint32_t k = 0; k <= k_max; ++k) {
        const std::uint64_t nk = (k == 0) ? 1 : *table.lookup(k);
        const std::uint64_t nk1 = *table.lookup(k + 1);
        __int128 z = nk;
        for (std::uint32_t i = 0; i < n; ++i) z *= q;
        z -= nk1;
        if (z < 0) fail(Errc::internal, "count table is not volume-monotone");
        if (z > static_cast<__int128>(std::int64_t{1} << 62))
            fail(Errc::cap_exceeded, "zeta term coefficient too large");
        ZetaTerm term;
        term.k = k;
        term.coeff = static_cast<std::uint64_t>(z);
        term.exponent = Rational(static_cast<std::int64_t>(k) * s.num, s.den) -
                        Rational(static_cast<std::int64_t>(n) * (k + 1), 1);
        res.terms.push_back(term);
        running += static_cast<double>(term.coeff) *
                   std::exp2(term.exponent.to_double() * logq);
        res.partial_sums.push_back(running);
        sum_terms.push_back(QPowTerm{static_cast<std::int64_t>(term.coeff), term.exponent});
    }

    // strictly growing tail: the series cannot converge for this s
    if (res.terms.size() >= 3) {
        bool grow = true;
        for (std::size_t i = res.terms.size() - 2; i < res.terms.size(); ++i) {
            const auto& prev = res.terms[i - 1];
            const auto& cur = res.terms[i];
            const std::vector<QPowTerm> diff{
                QPowTerm{static_cast<std::int64_t>(cur.coeff), cur.exponent},
                QPowTerm{-static_cast<std::int64_t>(prev.coeff), prev.exponent}};
            if (qpow_sum_sign(p, e, diff) <= 0) grow = false;
        }
        res.diverging = grow;
    }

    if (weierstrass_degree) {
        const std::uint32_t d = *weierstrass_degree;
        const Rational gamma = Rational(1, d) - s;
        if (gamma.num > 0) {
            // partial_sum <= d / (1 - q^{-gamma}), cross-multiplied:
            // d - sum + sum * q^{-gamma} >= 0
            std::vector<QPowTerm> diff;
            diff.push_back(QPowTerm{static_cast<std::int64_t>(d), Rational(0, 1)});
            for (const auto& t : sum_terms) {
                diff.push_back(QPowTerm{-t.coeff, t.exp});
                diff.push_back(QPowTerm{t.coeff, t.exp - gamma});
            }
            res.within_bound = qpow_sum_sign(p, e, diff) >= 0;
            res.bound_approx =
                d / (1.0 - std::exp2(-gamma.to_double() * logq));
        }
    }
    return res;
}

ExampleCurveReport example_curve(const Field& field, std::uint32_t d, std::uint32_t D,
                                 std::uint32_t m, std::uint32_t k_max, const CountOptions& opts,
                                 std::uint32_t degree_cap) {
    const BoundCert bound = complexity_lower_bound(BoundParams{d, D, m, 1});
    const std::uint32_t pullback = static_cast<std::uint32_t>(bound.value.den);
    if (pullback > degree_cap)
        fail(Errc::cap_exceeded, "d * D^m = " + std::to_string(pullback) + " exceeds the cap " +
                                     std::to_string(degree_cap));
    if (k_max == 0) k_max = 2 * pullback;
    if (k_max > static_cast<std::uint32_t>(kMaxPrecision))
        fail(Errc::cap_exceeded, "k_max exceeds the precision cap");
    if (k_max / pullback < 2)
        fail(Errc::usage, "k_max must cover at least two periods of d * D^m");

    // the projection to the first coordinate turns the counting problem into
    // the one-variable monomial y^{d D^m}
    RingCtx ring(&field, static_cast<int>(k_max));
    const MPoly f = MPoly::variable(ring, 1, 0).pow(pullback);
    const std::uint32_t hi = pullback * (k_max / pullback);

    ExampleCurveReport report;
    report.d = d;
    report.D = D;
    report.m = m;
    report.pullback_degree = pullback;
    report.bound = bound;
    report.table = count_table(IdealSpec({f}, {}, 0), hi, opts);
    report.estimate = estimate_lct(report.table, Window{pullback, hi});
    report.match = report.estimate.exact && *report.estimate.exact == bound.value;
    return report;
}

} // namespace lctf
