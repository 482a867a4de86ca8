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

#include "counting.hpp"

#include <algorithm>
#include <thread>

#include "bigint.hpp"

namespace lctf {

const char* strategy_name(Strategy s) { return s == Strategy::flat ? "flat" : "pruned"; }

namespace {

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

bool all_zero(const std::vector<OElem>& point, const RingCtx& ring) {
    for (const auto& x : point)
        if (!ring.is_zero(x)) return false;
    return true;
}

} // namespace

namespace {
const RingCtx& ring_of(const std::vector<MPoly>& gens) {
    if (gens.empty()) fail(Errc::usage, "at least one generator required");
    return gens.front().ring();
}
} // namespace

IdealSpec::IdealSpec(std::vector<MPoly> generators, std::vector<OElem> base_point,
                     std::uint32_t radius_j)
    : ring_(ring_of(generators)), nvars_(generators.front().nvars()), radius_j_(radius_j),
      base_point_(std::move(base_point)), certified_(ring_.precision()) {
    for (const auto& g : generators) {
        if (g.nvars() != nvars_ || !g.ring().same(ring_))
            fail(Errc::usage, "generators live in different rings");
    }
    if (base_point_.empty()) base_point_.assign(nvars_, ring_.zero());
    if (base_point_.size() != nvars_) fail(Errc::usage, "base point arity mismatch");
    if (radius_j_ >= static_cast<std::uint32_t>(ring_.precision()))
        fail(Errc::precision_exceeded, "ball radius exponent exceeds the working precision");

    // Zero generators are absorbed by the min (their valuation is infinite);
    // a zero ideal is rejected outright.
    for (auto& g : generators) {
        if (!g.is_zero_at_precision()) generators_.push_back(std::move(g));
    }
    if (generators_.empty())
        fail(Errc::indeterminate_input, "all generators vanish at the working precision");

    const bool centred = all_zero(base_point_, ring_) && radius_j_ == 0;
    for (const auto& g : generators_) {
        certified_ = std::min(certified_, g.certified());
        counting_.push_back(centred ? g.pruned_to_certified()
                                    : g.substitute_affine(base_point_, radius_j_).pruned_to_certified());
    }

    std::string canon = ring_.field().canonical_key() + ";n=" + std::to_string(nvars_) +
                        ";j=" + std::to_string(radius_j_) + ";x0=";
    for (const auto& x : base_point_) canon += ring_.to_string(x) + ",";
    canon += ";gens=";
    for (const auto& g : generators_) canon += g.to_string() + ";";
    fingerprint_ = hex64(fnv1a(canon));
}

bool IdealSpec::vanishes_at_origin() const {
    const ExpVec origin(nvars_, 0);
    for (const auto& g : counting_) {
        const Valuation v = ring_.val(g.coeff(origin));
        if (v.finite && v.value < certified_) return false;
    }
    return true;
}

std::optional<std::uint64_t> CountTable::lookup(std::uint32_t k) const {
    for (const auto& row : rows)
        if (row.k == k) return row.count;
    return std::nullopt;
}

namespace {

/// Shared immutable state for one counting run.
struct CountContext {
    RingCtx ring;
    std::uint32_t nvars;
    std::uint32_t q;
    std::vector<HornerForm> forms;

    explicit CountContext(const IdealSpec& spec)
        : ring(spec.ring()), nvars(spec.nvars()), q(spec.ring().field().q()) {
        for (const auto& g : spec.counting_generators()) forms.emplace_back(g);
    }

    bool alive(std::span<const OElem> point, int depth) const {
        for (const auto& form : forms) {
            if (!ring.is_zero_trunc(form.eval(ring, point, depth), depth)) return false;
        }
        return true;
    }
};

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

/// q^{n*levels} with an overflow guard; counting work is bounded by the node
/// budget long before 2^63.
std::uint64_t cell_volume(std::uint32_t q, std::uint32_t n, std::uint32_t levels) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < n * levels; ++i) {
        if (r > (std::uint64_t{1} << 62) / q) fail(Errc::cap_exceeded, "residue space too large");
        r *= q;
    }
    return r;
}

/// Enumerate completions of `prefix` (digits below `delta` per coordinate)
/// up to depth k and count the residues where every generator vanishes
/// mod t^k. Digit layout: coordinate-major, level-minor.
std::uint64_t flat_cell_count(const CountContext& cc, std::uint32_t k,
                              std::span<const felem> prefix, std::uint32_t delta) {
    std::vector<OElem> point(cc.nvars);
    for (std::uint32_t c = 0; c < cc.nvars; ++c)
        for (std::uint32_t l = 0; l < delta; ++l) point[c].c[l] = prefix[c * delta + l];

    const std::uint32_t free_levels = k - delta;
    const std::uint64_t total = cell_volume(cc.q, cc.nvars, free_levels);
    std::vector<felem> digits(static_cast<std::size_t>(cc.nvars) * free_levels, 0);
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0;; ++idx) {
        if (cc.alive(point, static_cast<int>(k))) ++count;
        if (idx + 1 == total) break;
        // odometer advance, digit 0 fastest; refresh every digit the carry touched
        std::size_t pos = 0;
        while (true) {
            if (++digits[pos] < cc.q) break;
            digits[pos] = 0;
            ++pos;
        }
        for (std::size_t p = 0; p <= pos; ++p)
            point[p / free_levels].c[delta + (p % free_levels)] = digits[p];
    }
    return count;
}

/// Frontier of surviving residues at one depth; node i occupies the slice
/// [i*n*depth, (i+1)*n*depth), coordinate-major.
struct Frontier {
    std::uint32_t depth = 0;
    std::vector<felem> digits;
    std::uint64_t count(std::uint32_t nvars) const {
        const std::size_t stride = static_cast<std::size_t>(nvars) * depth;
        return stride == 0 ? 1 : digits.size() / stride;
    }
};

/// Expand one slice of the frontier from `depth` to depth+1.
void expand_slice(const CountContext& cc, const Frontier& src, std::size_t node_begin,
                  std::size_t node_end, std::vector<felem>& out) {
    const std::uint32_t depth = src.depth;
    const std::size_t stride = static_cast<std::size_t>(cc.nvars) * depth;
    const std::size_t next_stride = static_cast<std::size_t>(cc.nvars) * (depth + 1);
    const std::uint64_t combos = pow_u64(cc.q, cc.nvars);
    std::vector<OElem> point(cc.nvars);
    std::vector<felem> next_digits(cc.nvars, 0);
    for (std::size_t node = node_begin; node < node_end; ++node) {
        for (std::uint32_t c = 0; c < cc.nvars; ++c) {
            point[c] = OElem{};
            for (std::uint32_t l = 0; l < depth; ++l)
                point[c].c[l] = src.digits[node * stride + c * depth + l];
        }
        std::fill(next_digits.begin(), next_digits.end(), 0);
        for (std::uint64_t combo = 0;; ++combo) {
            for (std::uint32_t c = 0; c < cc.nvars; ++c) point[c].c[depth] = next_digits[c];
            if (cc.alive(point, static_cast<int>(depth) + 1)) {
                const std::size_t base = out.size();
                out.resize(base + next_stride);
                for (std::uint32_t c = 0; c < cc.nvars; ++c) {
                    for (std::uint32_t l = 0; l < depth; ++l)
                        out[base + c * (depth + 1) + l] = src.digits[node * stride + c * depth + l];
                    out[base + c * (depth + 1) + depth] = next_digits[c];
                }
            }
            if (combo + 1 == combos) break;
            std::size_t pos = 0;
            while (true) {
                if (++next_digits[pos] < cc.q) break;
                next_digits[pos] = 0;
                ++pos;
            }
        }
    }
}

Frontier expand(const CountContext& cc, const Frontier& src, std::uint32_t workers) {
    Frontier next;
    next.depth = src.depth + 1;
    const std::uint64_t nodes = src.count(cc.nvars);
    const std::uint32_t nthreads = static_cast<std::uint32_t>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, nodes)));
    if (nthreads == 1) {
        expand_slice(cc, src, 0, static_cast<std::size_t>(nodes), next.digits);
        return next;
    }
    std::vector<std::vector<felem>> outputs(nthreads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (nodes + nthreads - 1) / nthreads;
    for (std::uint32_t tindex = 0; tindex < nthreads; ++tindex) {
        const std::size_t begin = static_cast<std::size_t>(std::min<std::uint64_t>(tindex * chunk, nodes));
        const std::size_t end =
            static_cast<std::size_t>(std::min<std::uint64_t>((tindex + 1) * chunk, nodes));
        pool.emplace_back(
            [&, tindex, begin, end] { expand_slice(cc, src, begin, end, outputs[tindex]); });
    }
    for (auto& th : pool) th.join();
    // concatenate in slice order: the merged frontier is identical to a
    // single-threaded expansion
    for (const auto& out : outputs) next.digits.insert(next.digits.end(), out.begin(), out.end());
    return next;
}

void check_depth(const IdealSpec& spec, std::uint32_t k) {
    if (k < 1) fail(Errc::usage, "depth k must be >= 1");
    if (static_cast<int>(k) > spec.certified())
        fail(Errc::precision_exceeded, "depth " + std::to_string(k) +
                                           " exceeds the certified precision " +
                                           std::to_string(spec.certified()));
}

CountTable make_table(const IdealSpec& spec, Strategy strategy) {
    CountTable t;
    t.q = spec.ring().field().q();
    t.nvars = spec.nvars();
    t.fingerprint = spec.fingerprint();
    t.strategy = strategy;
    return t;
}

void cache_rows(const IdealSpec& spec, const CountTable& table, const CountOptions& opts) {
    if (opts.cache == nullptr) return;
    for (const auto& row : table.rows) {
        CacheRecord rec;
        rec.fingerprint = spec.fingerprint();
        rec.q = spec.ring().field().q();
        rec.e = spec.ring().field().e();
        rec.n = spec.nvars();
        rec.k = row.k;
        rec.count_decimal = std::to_string(row.count);
        rec.strategy = strategy_name(table.strategy);
        rec.tool_version = opts.tool_version;
        opts.cache->append(rec);
    }
}

CountTable pruned_table(const IdealSpec& spec, std::uint32_t k_max, const CountOptions& opts) {
    const CountContext cc(spec);
    CountTable table = make_table(spec, Strategy::pruned);
    Frontier frontier; // depth 0: the single empty residue
    std::uint64_t consumed = 0;
    for (std::uint32_t k = 1; k <= k_max; ++k) {
        const std::uint64_t cost = frontier.count(cc.nvars) * pow_u64(cc.q, cc.nvars);
        if (consumed + cost > opts.node_budget)
            throw BudgetExceededError("node budget " + std::to_string(opts.node_budget) +
                                          " exceeded at depth " + std::to_string(k),
                                      std::move(table));
        consumed += cost;
        frontier = expand(cc, frontier, opts.workers);
        table.rows.push_back(CountRow{k, frontier.count(cc.nvars)});
    }
    return table;
}

std::uint64_t flat_nk(const IdealSpec& spec, std::uint32_t k, const CountOptions& opts,
                      std::uint64_t& consumed) {
    const CountContext cc(spec);
    const std::uint64_t total = cell_volume(cc.q, cc.nvars, k);
    if (consumed + total > opts.node_budget)
        throw BudgetExceededError("node budget " + std::to_string(opts.node_budget) +
                                      " exceeded by flat enumeration at depth " + std::to_string(k),
                                  make_table(spec, Strategy::flat));
    consumed += total;

    // pick the split depth so there are enough cells to spread across workers
    std::uint32_t delta = 0;
    if (opts.workers > 1) {
        while (delta < k && cell_volume(cc.q, cc.nvars, delta) < std::uint64_t{4} * opts.workers)
            ++delta;
    }
    const PartitionPlan plan = partition(spec, k, delta);
    std::vector<std::uint64_t> partial(plan.prefixes.size(), 0);
    const std::uint32_t nthreads = static_cast<std::uint32_t>(std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(opts.workers, plan.prefixes.size())));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < plan.prefixes.size(); ++i)
            partial[i] = flat_cell_count(cc, k, plan.prefixes[i], delta);
    } else {
        std::vector<std::thread> pool;
        for (std::uint32_t tindex = 0; tindex < nthreads; ++tindex) {
            pool.emplace_back([&, tindex] {
                for (std::size_t i = tindex; i < plan.prefixes.size(); i += nthreads)
                    partial[i] = flat_cell_count(cc, k, plan.prefixes[i], delta);
            });
        }
        for (auto& th : pool) th.join();
    }
    return merge_counts(partial);
}

} // namespace

std::uint64_t count_nk(const IdealSpec& spec, std::uint32_t k, const CountOptions& opts) {
    check_depth(spec, k);
    if (opts.cache != nullptr) {
        if (auto hit = opts.cache->lookup(spec.fingerprint(), k)) return *hit;
    }
    std::uint64_t result = 0;
    if (opts.strategy == Strategy::flat) {
        std::uint64_t consumed = 0;
        result = flat_nk(spec, k, opts, consumed);
    } else {
        CountOptions sub = opts;
        sub.cache = nullptr;
        const CountTable t = pruned_table(spec, k, sub);
        result = t.rows.back().count;
    }
    if (opts.cache != nullptr) {
        CountTable single = make_table(spec, opts.strategy);
        single.rows.push_back(CountRow{k, result});
        cache_rows(spec, single, opts);
    }
    return result;
}

CountTable count_table(const IdealSpec& spec, std::uint32_t k_max, const CountOptions& opts) {
    check_depth(spec, k_max);

    if (opts.cache != nullptr) {
        // serve fully-cached tables without recomputation
        CountTable cached = make_table(spec, opts.strategy);
        bool complete = true;
        for (std::uint32_t k = 1; k <= k_max && complete; ++k) {
            if (auto hit = opts.cache->lookup(spec.fingerprint(), k))
                cached.rows.push_back(CountRow{k, *hit});
            else
                complete = false;
        }
        if (complete) return cached;
    }

    CountTable table;
    if (opts.strategy == Strategy::pruned) {
        table = pruned_table(spec, k_max, opts);
    } else {
        table = make_table(spec, Strategy::flat);
        std::uint64_t consumed = 0;
        for (std::uint32_t k = 1; k <= k_max; ++k) {
            std::optional<std::uint64_t> hit;
            if (opts.cache != nullptr) hit = opts.cache->lookup(spec.fingerprint(), k);
            std::uint64_t nk = 0;
            if (hit) {
                nk = *hit;
            } else {
                try {
                    nk = flat_nk(spec, k, opts, consumed);
                } catch (BudgetExceededError& e) {
                    e.partial = table;
                    throw;
                }
            }
            table.rows.push_back(CountRow{k, nk});
        }
    }

    // a freshly computed row must agree with any cached one
    if (opts.cache != nullptr) {
        for (const auto& row : table.rows) {
            if (auto hit = opts.cache->lookup(spec.fingerprint(), row.k)) {
                if (*hit != row.count)
                    fail(Errc::integrity, "computed count disagrees with cache for k=" +
                                              std::to_string(row.k));
            }
        }
        cache_rows(spec, table, opts);
    }

    // monotonicity of the volumes: N_{k+1} <= q^n N_k
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        const std::uint64_t bound = table.rows[i - 1].count * pow_u64(table.q, table.nvars);
        if (table.rows[i].count > bound)
            fail(Errc::internal, "count table violates volume monotonicity");
    }
    return table;
}

std::pair<std::uint64_t, std::uint32_t> sublevel_volume(const IdealSpec& spec, std::uint32_t k,
                                                        const CountOptions& opts) {
    return {count_nk(spec, k, opts), spec.nvars() * k};
}

PartitionPlan partition(const IdealSpec& spec, std::uint32_t k, std::uint32_t delta_split) {
    if (delta_split > k) fail(Errc::usage, "split depth exceeds the counting depth");
    PartitionPlan plan;
    plan.delta_split = delta_split;
    const std::uint32_t q = spec.ring().field().q();
    const std::uint64_t cells = cell_volume(q, spec.nvars(), delta_split);
    if (cells > (std::uint64_t{1} << 22)) fail(Errc::cap_exceeded, "too many partition cells");
    const std::size_t stride = static_cast<std::size_t>(spec.nvars()) * delta_split;
    std::vector<felem> digits(stride, 0);
    plan.prefixes.reserve(cells);
    for (std::uint64_t idx = 0;; ++idx) {
        plan.prefixes.push_back(digits);
        if (idx + 1 == cells) break;
        std::size_t pos = 0;
        while (true) {
            if (++digits[pos] < q) break;
            digits[pos] = 0;
            ++pos;
        }
    }
    return plan;
}

std::uint64_t count_cell(const IdealSpec& spec, std::uint32_t k, const std::vector<felem>& prefix,
                         std::uint32_t delta_split, const CountOptions& opts) {
    check_depth(spec, k);
    if (prefix.size() != static_cast<std::size_t>(spec.nvars()) * delta_split)
        fail(Errc::usage, "prefix length does not match the split depth");
    const CountContext cc(spec);
    if (opts.strategy == Strategy::flat) return flat_cell_count(cc, k, prefix, delta_split);

    // pruned: descend from the prefix node alone
    std::vector<OElem> point(cc.nvars);
    for (std::uint32_t c = 0; c < cc.nvars; ++c)
        for (std::uint32_t l = 0; l < delta_split; ++l)
            point[c].c[l] = prefix[c * delta_split + l];
    if (delta_split > 0 && !cc.alive(point, static_cast<int>(delta_split))) return 0;
    Frontier frontier;
    frontier.depth = delta_split;
    frontier.digits = prefix;
    std::uint64_t consumed = 0;
    for (std::uint32_t depth = delta_split; depth < k; ++depth) {
        const std::uint64_t cost = frontier.count(cc.nvars) * pow_u64(cc.q, cc.nvars);
        if (consumed + cost > opts.node_budget)
            throw BudgetExceededError("node budget exceeded in cell count",
                                      make_table(spec, Strategy::pruned));
        consumed += cost;
        frontier = expand(cc, frontier, 1);
    }
    return frontier.count(cc.nvars);
}

std::uint64_t merge_counts(const std::vector<std::uint64_t>& partials) {
    std::uint64_t total = 0;
    for (std::uint64_t p : partials) total += p;
    return total;
}

namespace {

SmallBallReport small_ball_report(const IdealSpec& spec, std::uint32_t degree, std::uint32_t k_max,
                                  const CountOptions& opts) {
    const CountTable table = count_table(spec, k_max, opts);
    const std::uint64_t q = spec.ring().field().q();
    SmallBallReport report;
    report.degree = degree;
    report.nvars = spec.nvars();
    for (const auto& row : table.rows) {
        // cross-multiplied exact comparison of mu_k <= d q^{-k/d}:
        //   N_k^d q^k <= d^d q^{n k d}
        const BigUint lhs = BigUint::pow(BigUint(row.count), degree) * BigUint::pow_u64(q, row.k);
        const BigUint rhs = BigUint::pow_u64(degree, degree) *
                            BigUint::pow_u64(q, static_cast<std::uint64_t>(spec.nvars()) * row.k * degree);
        SmallBallRow r;
        r.k = row.k;
        r.count = row.count;
        r.lhs = lhs.to_decimal();
        r.rhs = rhs.to_decimal();
        r.pass = lhs <= rhs;
        report.all_pass = report.all_pass && r.pass;
        report.rows.push_back(std::move(r));
    }
    return report;
}

} // namespace

SmallBallReport verify_remez_monic(const MPoly& f, std::uint32_t k_max, const CountOptions& opts) {
    if (f.nvars() != 1) fail(Errc::usage, "monic small-ball check expects one variable");
    const std::uint32_t d = f.degree_in_last();
    if (d < 1) fail(Errc::usage, "degree must be >= 1");
    const MPoly lead = f.coeff_in_last(d);
    if (!(lead == MPoly::constant(f.ring(), 0, f.ring().one()).with_certified(f.certified())))
        fail(Errc::usage, "polynomial is not monic");
    IdealSpec spec({f}, {}, 0);
    return small_ball_report(spec, d, k_max, opts);
}

SmallBallReport verify_weierstrass_smallball(const MPoly& f, std::uint32_t k_max,
                                             const CountOptions& opts) {
    const std::uint32_t d = f.degree_in_last();
    if (d < 1) fail(Errc::usage, "degree in the last variable must be >= 1");
    const MPoly lead = f.coeff_in_last(d);
    if (!(lead == MPoly::constant(f.ring(), f.nvars() - 1, f.ring().one()).with_certified(f.certified())))
        fail(Errc::usage, "polynomial is not monic in the last variable");
    const auto gz = val_ge(f.gauss_val(), 1);
    if (!gz.has_value() || *gz) fail(Errc::usage, "not a Weierstrass polynomial (Gauss norm != 1)");
    IdealSpec spec({f}, {}, 0);
    return small_ball_report(spec, d, k_max, opts);
}

} // namespace lctf
