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
#include <optional>
#include <vector>

#include "counting.hpp"
#include "rational.hpp"
#include "weierstrass.hpp"

namespace lctf {

/// Tail window [lo, hi]: the estimator uses the increments at
/// k = lo, ..., hi-1, hence the counts N_lo..N_hi.
struct Window {
    std::uint32_t lo = 1;
    std::uint32_t hi = 2;
};

/// Decay-rate estimate for the sublevel volumes mu_k = N_k q^{-nk}. The
/// regression slope is the least-squares fit on the per-k increments
/// log_q(mu_k / mu_{k+1}), i.e. their window mean; when every increment in
/// the window is an exact power of q the slope is also reported as an exact
/// rational. This is an estimate, never a certificate.
struct LctEstimate {
    std::vector<std::pair<std::uint32_t, double>> point_slopes;
    double regression = 0.0;
    std::optional<Rational> exact;
    Window window;
    bool infinite = false; // some N_k = 0: the ideal does not vanish on the ball
};

LctEstimate estimate_lct(const CountTable& table, Window window);

enum class BoundKind { weierstrass_degree, multiplicity, complexity };
const char* bound_kind_name(BoundKind k);

/// Certified lower bound on the threshold, always an exact rational in
/// (0, 1], or the infinite outcome when the value at the point is nonzero.
struct BoundCert {
    Rational value{0, 1};
    BoundKind kind = BoundKind::multiplicity;
    bool infinite = false;
    std::uint32_t d = 0; // prepared degree (weierstrass) or max degree (complexity)
    std::uint32_t K = 0; // order of vanishing (multiplicity)
    std::uint32_t D = 0; // defining-equation degree (complexity)
    std::uint32_t m = 0; // codimension (complexity)
    int generator_index = -1;
};

/// 1/deg(omega) from a certified preparation.
BoundCert weierstrass_lower_bound(const PreparationResult& prep);

/// 1/K where K is the order of vanishing at the origin; infinite when the
/// value at the origin is certified nonzero (K = 0).
BoundCert multiplicity_lower_bound(const MPoly& f);

struct BoundParams {
    std::uint32_t d = 1;
    std::uint32_t D = 1;
    std::uint32_t m = 0;
    std::uint32_t n = 1;
};

/// 1/(d * D^m) for polynomials of degree <= d on a smooth subvariety cut out
/// by equations of degree <= D in codimension m.
BoundCert complexity_lower_bound(const BoundParams& params);

struct ZetaTerm {
    std::uint32_t k = 0;
    std::uint64_t coeff = 0; // q^n N_k - N_{k+1}, so the term is coeff * q^{exponent}
    Rational exponent;       // k s - n (k + 1)
};

struct ZetaResult {
    Rational s;
    std::vector<ZetaTerm> terms; // k = 0..k_max
    std::vector<double> partial_sums;
    std::optional<std::uint32_t> degree; // supplied Weierstrass degree, if any
    /// Exact verdict of partial_sum <= d / (1 - q^{-(1/d - s)}), present when
    /// a degree was supplied and s < 1/d; cross-multiplied, certified.
    std::optional<bool> within_bound;
    double bound_approx = 0.0;
    bool diverging = false; // strictly growing tail terms
};

/// Exact partial sums of sum_k mu(val = k) q^{ks}. Requires table depth
/// k_max + 1 (the k-th term needs mu_{k+1}).
ZetaResult zeta_partial_sum(const CountTable& table, Rational s, std::uint32_t k_max,
                            std::optional<std::uint32_t> weierstrass_degree,
                            std::uint32_t p, std::uint32_t e);

struct ExampleCurveReport {
    std::uint32_t d = 1, D = 1, m = 0;
    std::uint32_t pullback_degree = 1; // d * D^m
    CountTable table;
    LctEstimate estimate;
    BoundCert bound;
    bool match = false; // estimate equals the bound exactly
};

/// The optimal-bound witness: the monomial curve x_{i+1} = x_i^D pulls the
/// degree-d monomial back to y^{d D^m}; counting recovers 1/(d D^m) exactly
/// on a period-aligned window.
ExampleCurveReport example_curve(const Field& field, std::uint32_t d, std::uint32_t D,
                                 std::uint32_t m, std::uint32_t k_max, const CountOptions& opts,
                                 std::uint32_t degree_cap);

} // namespace lctf
