#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace lctf;
using namespace lctf::testutil;

namespace {

IdealSpec single(const MPoly& f) { return IdealSpec({f}, {}, 0); }

std::uint64_t q_pow(std::uint64_t q, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= q;
    return r;
}

} // namespace

TEST_CASE("counting examples") {
    RingCtx r(&gf(2), 4);
    CHECK(count_nk(single(P(r, 1, "x1")), 3) == 1);
    CHECK(count_nk(single(P(r, 1, "x1^2")), 3) == 2); // x in {0, t^2}
    RingCtx r2(&gf(2), 3);
    CHECK(count_nk(single(P(r2, 2, "x1*x2")), 2) == 8);
}

TEST_CASE("monomial closed form across strategies") {
    for (std::uint32_t p : {2u, 3u}) {
        RingCtx r(&gf(p), 12);
        for (std::uint32_t N = 1; N <= 5; ++N) {
            const MPoly f = P(r, 1, "x1").pow(N);
            for (Strategy strategy : {Strategy::pruned, Strategy::flat}) {
                if (strategy == Strategy::flat && p == 3) continue; // flat at 3^12 is needless here
                CountOptions opts;
                opts.strategy = strategy;
                const CountTable table = count_table(single(f), 12, opts);
                for (const auto& row : table.rows) {
                    const std::uint32_t ceil_div = (row.k + N - 1) / N;
                    CHECK(row.count == q_pow(p, row.k - ceil_div));
                }
            }
        }
    }
}

TEST_CASE("unit and zero generators") {
    RingCtx r(&gf(2), 3);
    const CountTable table = count_table(single(P(r, 1, "1")), 3);
    for (const auto& row : table.rows) CHECK(row.count == 0);

    // a zero generator is absorbed by the min; the count follows x1
    IdealSpec mixed({MPoly(r, 1), P(r, 1, "x1")}, {}, 0);
    CHECK(mixed.generators().size() == 1);
    CHECK(count_nk(mixed, 2) == 1);

    CHECK_THROWS_AS(IdealSpec({MPoly(r, 1)}, {}, 0), Error);
    try {
        IdealSpec both({MPoly(r, 1), MPoly(r, 1)}, {}, 0);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::indeterminate_input);
    }
}

TEST_CASE("flat and pruned agree with the brute-force oracle") {
    std::mt19937_64 rng(41);
    RingCtx r(&gf(2), 4);
    for (int i = 0; i < 50; ++i) {
        const std::uint32_t nvars = 1 + static_cast<std::uint32_t>(rng() % 2);
        std::vector<MPoly> gens;
        const std::size_t count = 1 + rng() % 2;
        for (std::size_t gi = 0; gi < count; ++gi) gens.push_back(random_poly(r, nvars, 3, 3, rng));
        bool some_nonzero = false;
        for (const auto& g : gens) some_nonzero = some_nonzero || !g.is_zero_at_precision();
        if (!some_nonzero) continue;
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
        if (q_pow(2, static_cast<std::uint64_t>(nvars) * k) > (1u << 16)) continue;

        IdealSpec spec(gens, {}, 0);
        CountOptions flat;
        flat.strategy = Strategy::flat;
        CountOptions pruned;
        pruned.strategy = Strategy::pruned;
        const std::uint64_t expected = oracle_count(spec.counting_generators(), k);
        CHECK(count_nk(spec, k, flat) == expected);
        CHECK(count_nk(spec, k, pruned) == expected);
    }
}

TEST_CASE("volume monotonicity and vanishing origin") {
    std::mt19937_64 rng(43);
    RingCtx r(&gf(3), 5);
    for (int i = 0; i < 20; ++i) {
        MPoly f = random_poly(r, 2, 3, 3, rng);
        if (f.is_zero_at_precision()) continue;
        IdealSpec spec({f}, {}, 0);
        const CountTable table = count_table(spec, 4);
        for (std::size_t idx = 1; idx < table.rows.size(); ++idx)
            CHECK(table.rows[idx].count <= 9 * table.rows[idx - 1].count);
        if (spec.vanishes_at_origin()) {
            for (const auto& row : table.rows) CHECK(row.count >= 1);
        }
    }
}

TEST_CASE("counting only depends on the residue") {
    std::mt19937_64 rng(47);
    RingCtx r(&gf(2), 6);
    for (int i = 0; i < 200; ++i) {
        const MPoly f = random_poly(r, 1, 4, 3, rng);
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 4);
        OElem x = random_elem(r, rng);
        OElem y = x;
        for (int level = static_cast<int>(k); level < r.precision(); ++level)
            y.c[level] = static_cast<felem>(rng() % 2); // same residue mod t^k
        const bool vx = r.is_zero_trunc(f.evaluate(std::vector<OElem>{x}), static_cast<int>(k));
        const bool vy = r.is_zero_trunc(f.evaluate(std::vector<OElem>{y}), static_cast<int>(k));
        CHECK(vx == vy);
    }
}

TEST_CASE("adding generators never increases counts") {
    std::mt19937_64 rng(53);
    RingCtx r(&gf(2), 4);
    for (int i = 0; i < 40; ++i) {
        const MPoly f = random_poly(r, 2, 2, 3, rng);
        const MPoly g = random_poly(r, 2, 2, 3, rng);
        if (f.is_zero_at_precision() || g.is_zero_at_precision()) continue;
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
        CHECK(count_nk(IdealSpec({f, g}, {}, 0), k) <= count_nk(IdealSpec({f}, {}, 0), k));
    }
}

TEST_CASE("translation invariance") {
    std::mt19937_64 rng(59);
    RingCtx r(&gf(2), 6);
    for (int i = 0; i < 30; ++i) {
        const MPoly f = random_poly(r, 2, 3, 3, rng);
        if (f.is_zero_at_precision()) continue;
        const std::vector<OElem> x0{random_elem(r, rng), random_elem(r, rng)};
        const std::uint32_t j = static_cast<std::uint32_t>(rng() % 2);
        const std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
        // counting over x0 + t^j O^n equals counting the translated polynomial
        IdealSpec centred({f}, x0, j);
        IdealSpec explicit_translate({f.substitute_affine(x0, j)}, {}, 0);
        CHECK(count_nk(centred, k) == count_nk(explicit_translate, k));
    }
}

TEST_CASE("partition and merge") {
    RingCtx r(&gf(2), 3);
    const MPoly f = P(r, 1, "x1");
    IdealSpec spec({f}, {}, 0);

    const PartitionPlan trivial = partition(spec, 2, 0);
    CHECK(trivial.prefixes.size() == 1);
    CHECK(count_cell(spec, 2, trivial.prefixes[0], 0) == count_nk(spec, 2));

    const PartitionPlan split = partition(spec, 2, 1);
    REQUIRE(split.prefixes.size() == 2);
    std::vector<std::uint64_t> parts;
    for (const auto& prefix : split.prefixes) parts.push_back(count_cell(spec, 2, prefix, 1));
    CHECK(parts == std::vector<std::uint64_t>{1, 0});
    CHECK(merge_counts(parts) == 1);

    // merge is order independent
    std::vector<std::uint64_t> shuffled = parts;
    std::reverse(shuffled.begin(), shuffled.end());
    CHECK(merge_counts(shuffled) == merge_counts(parts));

    // cells partition the residues exactly
    RingCtx r2(&gf(2), 4);
    IdealSpec spec2({P(r2, 2, "x1*x2 + x2^3")}, {}, 0);
    const PartitionPlan plan2 = partition(spec2, 3, 1);
    std::vector<std::uint64_t> parts2;
    for (const auto& prefix : plan2.prefixes) parts2.push_back(count_cell(spec2, 3, prefix, 1));
    CHECK(merge_counts(parts2) == count_nk(spec2, 3));
}

TEST_CASE("parallel counting is bit-identical to single-threaded") {
    RingCtx r(&gf(2), 8);
    const MPoly f = P(r, 2, "x1*x2 + x2^3 + t*x1");
    IdealSpec spec({f}, {}, 0);
    for (Strategy strategy : {Strategy::flat, Strategy::pruned}) {
        CountOptions serial;
        serial.strategy = strategy;
        CountOptions parallel;
        parallel.strategy = strategy;
        parallel.workers = 4;
        const std::uint32_t k = strategy == Strategy::flat ? 6 : 8;
        const CountTable a = count_table(spec, k, serial);
        const CountTable b = count_table(spec, k, parallel);
        REQUIRE(a.rows.size() == b.rows.size());
        for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].count == b.rows[i].count);
    }
}

TEST_CASE("budget exhaustion returns the partial table") {
    RingCtx r(&gf(2), 8);
    IdealSpec spec({P(r, 2, "t*x1")}, {}, 0); // weak pruning: wide tree
    CountOptions opts;
    opts.node_budget = 100;
    try {
        count_table(spec, 8, opts);
        FAIL("budget should have tripped");
    } catch (const BudgetExceededError& e) {
        CHECK(e.code() == Errc::budget_exceeded);
        CHECK(!e.partial.rows.empty());
        CHECK(e.partial.rows.size() < 8);
        for (std::size_t i = 0; i < e.partial.rows.size(); ++i)
            CHECK(e.partial.rows[i].k == i + 1);
    }
}

TEST_CASE("precision guard") {
    RingCtx r(&gf(2), 3);
    CHECK_THROWS_AS(count_nk(single(P(r, 1, "x1")), 4), Error);
    try {
        count_nk(single(P(r, 1, "x1")), 4);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::precision_exceeded);
    }
    CHECK_THROWS_AS(verify_remez_monic(P(r, 1, "x1^2"), 4), Error);
}

TEST_CASE("flat enumeration rejects over-budget work upfront") {
    RingCtx r(&gf(2), 12);
    IdealSpec spec({P(r, 2, "x1*x2")}, {}, 0);
    CountOptions opts;
    opts.strategy = Strategy::flat;
    opts.node_budget = 1000; // 2^{2k} blows through immediately at k = 5
    try {
        count_table(spec, 12, opts);
        FAIL("budget should have tripped");
    } catch (const BudgetExceededError& e) {
        CHECK(e.partial.rows.size() == 4);
        CHECK(e.partial.rows.back().count == count_nk(spec, 4));
    }
}

TEST_CASE("sublevel volumes as exact pairs") {
    RingCtx r(&gf(2), 4);
    // mu = N_k * q^{-nk}, never a float
    CHECK(sublevel_volume(single(P(r, 1, "x1^2")), 2) ==
          std::pair<std::uint64_t, std::uint32_t>{2, 2}); // 2/4 = 1/2
    CHECK(sublevel_volume(single(P(r, 1, "x1")), 3) ==
          std::pair<std::uint64_t, std::uint32_t>{1, 3}); // q^{-3}
    RingCtx r2(&gf(2), 3);
    CHECK(sublevel_volume(IdealSpec({P(r2, 2, "x1*x2")}, {}, 0), 2) ==
          std::pair<std::uint64_t, std::uint32_t>{8, 4}); // 8/16 = 1/2
}

TEST_CASE("monic small-ball verification") {
    RingCtx r(&gf(2), 4);
    const SmallBallReport sq = verify_remez_monic(P(r, 1, "x1^2"), 2);
    CHECK(sq.degree == 2);
    CHECK(sq.all_pass);
    // k = 2: mu = 1/2 <= 1: lhs = N^2 q^2 = 16, rhs = 4 * 16 = 64
    CHECK(sq.rows[1].count == 2);
    CHECK(sq.rows[1].lhs == "16");
    CHECK(sq.rows[1].rhs == "64");

    // d = 1 is tight at every depth: equality of both sides
    const SmallBallReport lin = verify_remez_monic(P(r, 1, "x1"), 4);
    CHECK(lin.all_pass);
    for (const auto& row : lin.rows) CHECK(row.lhs == row.rhs);

    // no zero of x^2 + t of valuation >= 2 in char 2
    const SmallBallReport shifted = verify_remez_monic(P(r, 1, "x1^2 + t"), 3);
    CHECK(shifted.all_pass);
    CHECK(shifted.rows[1].count == 0);
    CHECK(shifted.rows[2].count == 0);

    CHECK_THROWS_AS(verify_remez_monic(P(r, 1, "t*x1^2"), 2), Error);   // not monic
    CHECK_THROWS_AS(verify_remez_monic(P(r, 2, "x1*x2"), 2), Error);    // not univariate
}

TEST_CASE("Weierstrass small-ball verification") {
    RingCtx r(&gf(2), 3);
    const SmallBallReport w = verify_weierstrass_smallball(P(r, 2, "x2^2 + t*x1*x2 + t"), 3);
    CHECK(w.degree == 2);
    CHECK(w.all_pass);

    const SmallBallReport lin = verify_weierstrass_smallball(P(r, 2, "x2"), 3);
    CHECK(lin.all_pass);
    for (const auto& row : lin.rows) CHECK(row.lhs == row.rhs); // d = 1: equality

    const SmallBallReport sq = verify_weierstrass_smallball(P(r, 2, "x2^2"), 3);
    CHECK(sq.all_pass);
    // mu_k = 2^{-ceil(k/2)}
    CHECK(sq.rows[0].count == 2); // k=1: val(x2) >= 1 among 4 pairs... N = 2^{2-1} = 2
    CHECK_THROWS_AS(verify_weierstrass_smallball(P(r, 2, "t*x2^2"), 2), Error);
}

TEST_CASE("count cache round-trips and detects conflicts") {
    RingCtx r(&gf(2), 4);
    const MPoly f = P(r, 2, "x1*x2");
    IdealSpec spec({f}, {}, 0);
    const std::string path = "test_counts_cache.jsonl";
    std::remove(path.c_str());

    {
        CountCache cache(path);
        CountOptions opts;
        opts.cache = &cache;
        opts.tool_version = "test";
        const CountTable cold = count_table(spec, 3, opts);
        CHECK(cache.size() == 3);
        // warm run: identical table
        const CountTable warm = count_table(spec, 3, opts);
        REQUIRE(warm.rows.size() == cold.rows.size());
        for (std::size_t i = 0; i < warm.rows.size(); ++i)
            CHECK(warm.rows[i].count == cold.rows[i].count);
    }
    {
        // reload from disk in a fresh instance
        CountCache cache(path);
        CHECK(cache.size() == 3);
        CHECK(cache.lookup(spec.fingerprint(), 2) == std::uint64_t{8});
        // identical duplicate accepted
        CacheRecord dup{spec.fingerprint(), 2, 1, 2, 2, "8", "pruned", "test"};
        cache.append(dup);
        // conflicting count rejected
        CacheRecord bad{spec.fingerprint(), 2, 1, 2, 2, "9", "pruned", "test"};
        CHECK_THROWS_AS(cache.append(bad), Error);
    }
    std::remove(path.c_str());
}
