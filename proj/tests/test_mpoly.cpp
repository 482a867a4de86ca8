#include <doctest.h>

#include "helpers.hpp"

using namespace lctf;
using namespace lctf::testutil;

TEST_CASE("gauss valuation") {
    RingCtx r(&gf(2), 4);
    CHECK(P(r, 2, "t*x1 + x2^2").gauss_val() == Valuation::fin(0));
    CHECK(P(r, 2, "t*x1 + t^3").gauss_val() == Valuation::fin(1));
    CHECK(MPoly(r, 2).gauss_val() == Valuation::at_least(4));
}

TEST_CASE("evaluation examples") {
    RingCtx r(&gf(2), 3);
    const MPoly f = P(r, 1, "x1^2 + t");
    const OElem at_t = f.evaluate(std::vector<OElem>{r.tpow(1)});
    CHECK(at_t == r.add(r.tpow(2), r.tpow(1)));
    CHECK(r.val(at_t) == Valuation::fin(1));

    const MPoly prod = P(r, 2, "x1*x2");
    CHECK(prod.evaluate(std::vector<OElem>{r.zero(), r.make({1, 1})}) == r.zero());
    CHECK(P(r, 1, "1").evaluate(std::vector<OElem>{r.tpow(1)}) == r.one());
}

TEST_CASE("power shear examples") {
    RingCtx r(&gf(2), 3);
    CHECK(P(r, 2, "x1").substitute_power_shear(ShearMap{{2}}) == P(r, 2, "x1 + x2^2"));
    CHECK(P(r, 2, "x2").substitute_power_shear(ShearMap{{3}}) == P(r, 2, "x2"));
    CHECK(P(r, 2, "x1*x2").substitute_power_shear(ShearMap{{1}}) == P(r, 2, "x1*x2 + x2^2"));
}

TEST_CASE("linear shear examples") {
    RingCtx r(&gf(2), 3);
    const LinearShear unit_shear{{r.one()}};
    CHECK(P(r, 2, "x1").substitute_linear_shear(unit_shear) == P(r, 2, "x1 + x2"));
    // char 2: the cross term of (x1 + x2)^2 vanishes
    CHECK(P(r, 2, "x1^2").substitute_linear_shear(unit_shear) == P(r, 2, "x1^2 + x2^2"));
    CHECK(P(r, 2, "x2^4").substitute_linear_shear(unit_shear) == P(r, 2, "x2^4"));
    CHECK_THROWS_AS(P(r, 2, "x1").substitute_linear_shear(LinearShear{{r.tpow(1)}}), Error);
}

TEST_CASE("rescale examples") {
    RingCtx r(&gf(2), 4);
    CHECK(P(r, 1, "x1^2").rescale(ScaleMap{{1}, 0}) == P(r, 1, "t^2*x1^2"));
    const MPoly scaled = P(r, 1, "t^2*x1").rescale(ScaleMap{{0}, 2});
    CHECK(scaled == P(r, 1, "x1"));
    CHECK(scaled.certified() == 2); // precision drops by the divided power

    CHECK_THROWS_AS(P(r, 1, "x1 + t").rescale(ScaleMap{{0}, 1}), Error); // x1 coeff val 0 < 1
    try {
        (void)P(r, 1, "x1").rescale(ScaleMap{{0}, 4});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::precision_exhausted);
    }
}

TEST_CASE("coefficients in the last variable") {
    RingCtx r(&gf(2), 3);
    const MPoly f = P(r, 2, "x2^2 + t*x1*x2");
    const auto coeffs = f.coeffs_in_last_var();
    REQUIRE(coeffs.size() == 3);
    CHECK(!coeffs[0].has_terms());
    CHECK(coeffs[1] == P(r, 1, "t*x1"));
    CHECK(coeffs[2] == P(r, 1, "1"));
    CHECK(MPoly::assemble_in_last_var(r, 2, coeffs) == f);

    CHECK(P(r, 1, "x1").coeffs_in_last_var().size() == 2);
    const auto high = P(r, 2, "x2^3 + x1*x2^3").coeffs_in_last_var();
    REQUIRE(high.size() == 4);
    CHECK(high[3] == P(r, 1, "1 + x1"));
}

TEST_CASE("order at the origin") {
    RingCtx r(&gf(2), 4);
    CHECK(P(r, 1, "x1^2 + x1^3").order_at_zero() == 2);
    CHECK(P(r, 1, "1 + x1").order_at_zero() == 0);
    CHECK(P(r, 1, "t*x1 + x1^5").order_at_zero() == 1);
    CHECK_THROWS_AS(MPoly(r, 1).order_at_zero(), Error);
    // t^3 * x1 at certified precision 2 is indistinguishable from zero
    CHECK_THROWS_AS(P(r, 1, "t^3*x1").with_certified(2).order_at_zero(), Error);
}

TEST_CASE("gauss valuation is additive on products") {
    std::mt19937_64 rng(11);
    RingCtx r(&gf(3), 5);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const MPoly f = random_poly(r, 3, 4, 3, rng);
        const MPoly g = random_poly(r, 3, 4, 3, rng);
        const Valuation vf = f.gauss_val(), vg = g.gauss_val();
        if (!vf.finite || !vg.finite || vf.value + vg.value >= r.precision()) continue;
        CHECK((f * g).gauss_val() == Valuation::fin(vf.value + vg.value));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("power shears invert exactly") {
    std::mt19937_64 rng(13);
    RingCtx r(&gf(2), 4);
    for (int i = 0; i < 200; ++i) {
        const MPoly f = random_poly(r, 2, 3, 3, rng);
        ShearMap shear{{static_cast<std::uint32_t>(1 + rng() % 3)}};
        const MPoly back = f.substitute_power_shear(shear).substitute_power_shear(shear, true);
        CHECK(back == f);
    }
}

TEST_CASE("evaluation commutes with substitution") {
    std::mt19937_64 rng(17);
    RingCtx r(&gf(3), 4);
    for (int i = 0; i < 200; ++i) {
        const MPoly f = random_poly(r, 2, 3, 3, rng);
        const ShearMap shear{{static_cast<std::uint32_t>(1 + rng() % 3)}};
        const OElem x = random_elem(r, rng);
        const OElem y = random_elem(r, rng);
        // phi(x, y) = (x + y^d, y)
        OElem ypow = r.one();
        for (std::uint32_t rep = 0; rep < shear.d[0]; ++rep) ypow = r.mul(ypow, y);
        const std::vector<OElem> moved{r.add(x, ypow), y};
        const std::vector<OElem> original{x, y};
        CHECK(f.substitute_power_shear(shear).evaluate(original) == f.evaluate(moved));
    }
}

TEST_CASE("order at zero is additive on products") {
    std::mt19937_64 rng(19);
    RingCtx r(&gf(2), 5);
    // the product's bottom homogeneous layer is certified when the valuations
    // of the two bottom layers sum below the precision
    auto bottom_layer_val = [&](const MPoly& f) {
        const std::uint32_t order = f.order_at_zero();
        std::int32_t best = r.precision();
        for (const auto& [e, c] : f.terms()) {
            std::uint64_t deg = 0;
            for (auto x : e) deg += x;
            if (deg != order) continue;
            const Valuation v = r.val(c);
            if (v.finite) best = std::min(best, v.value);
        }
        return best;
    };
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const MPoly f = random_poly(r, 2, 2, 2, rng);
        const MPoly g = random_poly(r, 2, 2, 2, rng);
        if (f.is_zero_at_precision() || g.is_zero_at_precision()) continue;
        const MPoly fg = f * g;
        if (fg.is_zero_at_precision()) continue;
        if (bottom_layer_val(f) + bottom_layer_val(g) >= r.precision()) continue;
        CHECK(fg.order_at_zero() == f.order_at_zero() + g.order_at_zero());
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("canonical serialization is graded-lex and round-trips") {
    RingCtx r(&gf(2), 3);
    const MPoly f = P(r, 2, "x1*x2 + x2^2 + 1 + x1^3");
    CHECK(f.to_string() == "1 + x1*x2 + x2^2 + x1^3");
    CHECK(P(r, 2, f.to_string()) == f);
    const MPoly withcoef = P(r, 2, "(1+t)*x1^3 + t*x2");
    CHECK(withcoef.to_string() == "t*x2 + (1 + t)*x1^3");
    CHECK(P(r, 2, withcoef.to_string()) == withcoef);
    CHECK(MPoly(r, 2).to_string() == "0");
}

TEST_CASE("affine substitution recentres") {
    RingCtx r(&gf(2), 4);
    const MPoly f = P(r, 1, "x1^2 + t");
    // x1 -> t + t x1: f becomes t^2(1 + x1)^2 + t
    const MPoly moved = f.substitute_affine(std::vector<OElem>{r.tpow(1)}, 1);
    const std::vector<OElem> pt{r.one()};
    const std::vector<OElem> moved_pt{r.add(r.tpow(1), r.mul(r.tpow(1), r.one()))};
    CHECK(moved.evaluate(pt) == f.evaluate(moved_pt));
}
