#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace lctf;
using namespace lctf::testutil;

TEST_CASE("prime field basics") {
    const Field& f2 = gf(2);
    CHECK(f2.mul(1, 1) == 1);
    const Field& f3 = gf(3);
    CHECK(f3.mul(2, 2) == 1); // (-1)(-1) = 1
    const Field& f5 = gf(5);
    CHECK(f5.inv(2) == 3); // 2*3 = 6 = 1
    CHECK(f2.inv(1) == 1);
}

TEST_CASE("GF(4) multiplication and inverse through the modulus") {
    const Field& f4 = gf4();
    const felem g = f4.generator();
    const felem g1 = f4.add(g, f4.one()); // g + 1
    CHECK(f4.mul(g, g) == g1);            // g^2 = g + 1
    CHECK(f4.inv(g) == g1);
    CHECK(f4.mul(g, g1) == f4.one());
    CHECK(f4.to_string(g1) == "g+1");
}

TEST_CASE("enumeration is 0, 1, ... with q distinct elements") {
    CHECK(gf(2).enumerate() == std::vector<felem>{0, 1});
    CHECK(gf(3).enumerate() == std::vector<felem>{0, 1, 2});
    const auto e4 = gf4().enumerate();
    REQUIRE(e4.size() == 4);
    CHECK(e4[0] == 0);
    CHECK(e4[1] == 1);
    CHECK(e4[2] == gf4().generator());
    for (const Field* f : {&gf(2), &gf(3), &gf4(), &gf(5), &gf(7), &gf8(), &gf9()}) {
        const auto all = f->enumerate();
        CHECK(all.size() == f->q());
        CHECK(std::set<felem>(all.begin(), all.end()).size() == f->q());
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 9") {
    for (const Field* f : {&gf(2), &gf(3), &gf4(), &gf(5), &gf(7), &gf8(), &gf9()}) {
        const auto all = f->enumerate();
        for (felem a : all) {
            CHECK(f->add(a, f->zero()) == a);
            CHECK(f->mul(a, f->one()) == a);
            CHECK(f->add(a, f->neg(a)) == f->zero());
            // Frobenius: a^q = a
            CHECK(f->pow(a, f->q()) == a);
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == f->one());
            for (felem b : all) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (felem c : all) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("unique inverses") {
    for (const Field* f : {&gf(3), &gf4(), &gf8(), &gf9()}) {
        for (felem a : f->enumerate()) {
            if (a == 0) continue;
            std::size_t inverses = 0;
            for (felem b : f->enumerate())
                if (f->mul(a, b) == f->one()) ++inverses;
            CHECK(inverses == 1);
        }
    }
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_WITH_AS(Field::prime_field(4), doctest::Contains("not prime"), Error);
    CHECK_THROWS_AS(Field::prime_field(1), Error);
    // g^2 + 1 is reducible over GF(2): (g+1)^2
    CHECK_THROWS_WITH_AS(Field(Field::Params{2, 2, {1, 0, 1}, "g"}), doctest::Contains("reducible"),
                         Error);
    // wrong length
    CHECK_THROWS_AS(Field(Field::Params{2, 2, {1, 1}, "g"}), Error);
    // not monic
    CHECK_THROWS_AS(Field(Field::Params{3, 2, {1, 1, 2}, "g"}), Error);
    // cardinality cap: 2^17
    CHECK_THROWS_AS(Field(Field::Params{2, 17, std::vector<std::uint32_t>(18, 1), "g"}), Error);
    CHECK_THROWS_AS(gf(2).inv(0), Error);
    try {
        (void)gf(2).inv(0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::division_by_zero);
    }
}

TEST_CASE("integer embedding reduces mod p") {
    CHECK(gf(3).from_int(-1) == 2);
    CHECK(gf(3).from_int(7) == 1);
    CHECK(gf(5).from_int(-12) == 3);
}
