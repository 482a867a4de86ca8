#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace lctf;
using namespace lctf::testutil;

TEST_CASE("ring arithmetic examples") {
    RingCtx r2(&gf(2), 3);
    const OElem one_t = r2.make({1, 1}); // 1 + t
    CHECK(r2.mul(one_t, one_t) == r2.make({1, 0, 1})); // (1+t)^2 = 1 + t^2 in char 2

    RingCtx r3(&gf(3), 2);
    CHECK(r3.add(r3.make({1, 1}), r3.make({2, 2})) == r3.zero());

    // truncation: t * t^2 = 0 at M = 3, valuation reported at least 3
    CHECK(r2.mul(r2.tpow(1), r2.tpow(2)) == r2.zero());
    CHECK(r2.val(r2.mul(r2.tpow(1), r2.tpow(2))) == Valuation::at_least(3));
}

TEST_CASE("valuation examples") {
    RingCtx r(&gf(2), 4);
    CHECK(r.val(r.add(r.tpow(2), r.tpow(3))) == Valuation::fin(2));
    CHECK(r.val(r.zero()) == Valuation::at_least(4));
    CHECK(r.val(r.make({1, 1})) == Valuation::fin(0));
}

TEST_CASE("unit inversion by the geometric series") {
    RingCtx r(&gf(2), 3);
    CHECK(r.inv(r.make({1, 1})) == r.make({1, 1, 1})); // (1+t)^{-1} = 1+t+t^2 mod t^3
    CHECK(r.inv(r.one()) == r.one());
    CHECK_THROWS_AS(r.inv(r.tpow(1)), Error);
    try {
        (void)r.inv(r.tpow(1));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_a_unit);
    }
}

TEST_CASE("inversion round-trips on random units") {
    for (const Field* f : {&gf(2), &gf(3), &gf4()}) {
        RingCtx r(f, 6);
        std::mt19937_64 rng(42);
        for (int i = 0; i < 500; ++i) {
            const OElem u = random_unit(r, rng);
            CHECK(r.mul(u, r.inv(u)) == r.one());
        }
    }
}

TEST_CASE("residue enumeration") {
    RingCtx r2(&gf(2), 3);
    CHECK(r2.enumerate(1) == std::vector<OElem>{r2.zero(), r2.one()});
    const auto mod_t2 = r2.enumerate(2);
    REQUIRE(mod_t2.size() == 4);
    CHECK(mod_t2[0] == r2.zero());
    CHECK(mod_t2[1] == r2.one());
    CHECK(mod_t2[2] == r2.tpow(1));
    CHECK(mod_t2[3] == r2.make({1, 1}));

    RingCtx r3(&gf(3), 2);
    CHECK(r3.enumerate(2).size() == 9);

    CHECK_THROWS_AS(r2.enumerate(4), Error); // k > M
    try {
        (void)r2.enumerate(4);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::precision_exceeded);
    }
}

TEST_CASE("ultrametric and multiplicativity properties") {
    RingCtx r(&gf(3), 6);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const OElem a = random_elem(r, rng);
        const OElem b = random_elem(r, rng);
        const Valuation va = r.val(a), vb = r.val(b), vs = r.val(r.add(a, b));
        // val(a+b) >= min(val a, val b), equality when they differ
        const std::int32_t lower = std::min(va.value, vb.value);
        CHECK(vs.value >= lower);
        if (va.finite && vb.finite && va.value != vb.value) {
            CHECK(vs == Valuation::fin(lower));
        }
        // val(ab) = val(a) + val(b) below the precision
        const Valuation vp = r.val(r.mul(a, b));
        if (va.finite && vb.finite && va.value + vb.value < r.precision()) {
            CHECK(vp == Valuation::fin(va.value + vb.value));
        } else {
            CHECK(!vp.finite);
        }
    }
}

TEST_CASE("element serialization") {
    RingCtx r(&gf(3), 4);
    CHECK(r.to_string(r.make({1, 2, 1})) == "1 + 2*t + t^2");
    CHECK(r.to_string(r.zero()) == "0");
    RingCtx r4(&gf4(), 3);
    const OElem gt = r4.shift_up(r4.from_const(gf4().add(gf4().generator(), 1)), 1);
    CHECK(r4.to_string(gt) == "(g+1)*t");
}

TEST_CASE("exact t-power division") {
    RingCtx r(&gf(2), 4);
    const OElem t2x = r.shift_up(r.one(), 2);
    CHECK(r.shift_down_exact(t2x, 2) == r.one());
    CHECK_THROWS_AS(r.shift_down_exact(r.one(), 1), Error);
}
