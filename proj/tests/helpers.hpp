#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "counting.hpp"
#include "parse.hpp"

// Shared fixtures for the test suite: long-lived fields, parsing shortcuts,
// deterministic random generators, and an independent brute-force counting
// oracle (term-by-term evaluation, no Horner, no pruning).
namespace lctf::testutil {

inline const Field& gf(std::uint32_t p) {
    static Field f2 = Field::prime_field(2);
    static Field f3 = Field::prime_field(3);
    static Field f5 = Field::prime_field(5);
    static Field f7 = Field::prime_field(7);
    switch (p) {
        case 2: return f2;
        case 3: return f3;
        case 5: return f5;
        case 7: return f7;
        default: fail(Errc::usage, "no fixture for GF(" + std::to_string(p) + ")");
    }
}

inline const Field& gf4() {
    static Field f(Field::Params{2, 2, {1, 1, 1}, "g"}); // g^2 + g + 1
    return f;
}

inline const Field& gf8() {
    static Field f(Field::Params{2, 3, {1, 1, 0, 1}, "g"}); // g^3 + g + 1
    return f;
}

inline const Field& gf9() {
    static Field f(Field::Params{3, 2, {1, 0, 1}, "g"}); // g^2 + 1
    return f;
}

inline MPoly P(const RingCtx& ring, std::uint32_t nvars, const std::string& text) {
    return parse_poly(text, ring, nvars);
}

inline OElem random_elem(const RingCtx& ring, std::mt19937_64& rng) {
    OElem x;
    for (int i = 0; i < ring.precision(); ++i)
        x.c[i] = static_cast<felem>(rng() % ring.field().q());
    return x;
}

inline OElem random_unit(const RingCtx& ring, std::mt19937_64& rng) {
    OElem x = random_elem(ring, rng);
    x.c[0] = static_cast<felem>(1 + rng() % (ring.field().q() - 1));
    return x;
}

inline MPoly random_poly(const RingCtx& ring, std::uint32_t nvars, std::uint32_t max_deg,
                         std::size_t terms, std::mt19937_64& rng) {
    MPoly f(ring, nvars);
    for (std::size_t i = 0; i < terms; ++i) {
        ExpVec e(nvars);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (max_deg + 1));
        f = f + MPoly::monomial(ring, nvars, e, random_elem(ring, rng));
    }
    return f;
}

/// Distinguished of order exactly s0 in the last variable: a unit leading
/// coefficient, arbitrary integral lower coefficients, higher coefficients
/// pushed below the Gauss norm by a factor of t. The constant coefficient is
/// kept out of the units so the origin is a zero.
inline MPoly random_distinguished(const RingCtx& ring, std::uint32_t nvars, std::uint32_t s0,
                                  std::uint32_t extra_degrees, std::mt19937_64& rng) {
    const std::uint32_t n1 = nvars - 1;
    std::vector<MPoly> coeffs;
    for (std::uint32_t s = 0; s < s0; ++s) {
        MPoly a = random_poly(ring, n1, 2, 2, rng);
        // no unit value at the origin: drop the constant term's t^0 digit
        MPoly c = MPoly::constant(ring, n1, a.coeff(ExpVec(n1, 0)));
        a = (a - c) + c.times_tpow(1);
        coeffs.push_back(a);
    }
    MPoly lead = random_poly(ring, n1, 2, 2, rng).times_tpow(1) +
                 MPoly::constant(ring, n1, random_unit(ring, rng));
    coeffs.push_back(lead);
    for (std::uint32_t s = 0; s < extra_degrees; ++s)
        coeffs.push_back(random_poly(ring, n1, 2, 2, rng).times_tpow(1));
    return MPoly::assemble_in_last_var(ring, nvars, coeffs);
}

inline MPoly random_monic_univariate(const RingCtx& ring, std::uint32_t degree,
                                     std::mt19937_64& rng) {
    MPoly f = MPoly::variable(ring, 1, 0).pow(degree);
    for (std::uint32_t s = 0; s < degree; ++s)
        f = f + MPoly::monomial(ring, 1, ExpVec{s}, random_elem(ring, rng));
    return f;
}

/// Monic in x2 of the given degree with integral coefficient polynomials in
/// x1 (a random Weierstrass polynomial).
inline MPoly random_weierstrass(const RingCtx& ring, std::uint32_t degree,
                                std::uint32_t coeff_degree, std::mt19937_64& rng) {
    std::vector<MPoly> coeffs;
    for (std::uint32_t s = 0; s < degree; ++s)
        coeffs.push_back(random_poly(ring, 1, coeff_degree, 2, rng));
    coeffs.push_back(MPoly::constant(ring, 1, ring.one()));
    return MPoly::assemble_in_last_var(ring, 2, coeffs);
}

/// Independent brute-force count: enumerate every residue tuple and evaluate
/// term by term with plain ring operations.
inline OElem oracle_eval(const MPoly& f, const std::vector<OElem>& point) {
    const RingCtx& ring = f.ring();
    OElem acc = ring.zero();
    for (const auto& [e, c] : f.terms()) {
        OElem term = c;
        for (std::uint32_t i = 0; i < f.nvars(); ++i)
            for (std::uint32_t rep = 0; rep < e[i]; ++rep) term = ring.mul(term, point[i]);
        acc = ring.add(acc, term);
    }
    return acc;
}

inline std::uint64_t oracle_count(const std::vector<MPoly>& gens, std::uint32_t k) {
    const RingCtx& ring = gens.front().ring();
    const std::uint32_t nvars = gens.front().nvars();
    const std::vector<OElem> residues = ring.enumerate(static_cast<int>(k));
    std::vector<std::size_t> idx(nvars, 0);
    std::vector<OElem> point(nvars, ring.zero());
    std::uint64_t count = 0;
    while (true) {
        for (std::uint32_t i = 0; i < nvars; ++i) point[i] = residues[idx[i]];
        bool ok = true;
        for (const auto& g : gens) {
            if (!ring.is_zero_trunc(oracle_eval(g, point), static_cast<int>(k))) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        std::uint32_t pos = 0;
        while (pos < nvars && ++idx[pos] == residues.size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == nvars) break;
    }
    return count;
}

} // namespace lctf::testutil
