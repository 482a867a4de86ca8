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

#include "commands.hpp"

#include <ctime>

#include "lct.hpp"
#include "parse.hpp"
#include "version.hpp"
#include "weierstrass.hpp"

namespace lctf {

using nlohmann::json;

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

template <typename T>
T field_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key) || j.at(key).is_null()) return fallback;
    return j.at(key).get<T>();
}

std::uint32_t required_u32(const json& j, const char* key) {
    if (!j.contains(key)) fail(Errc::usage, std::string("missing required field '") + key + "'");
    return j.at(key).get<std::uint32_t>();
}

Strategy parse_strategy(const std::string& name) {
    if (name == "flat") return Strategy::flat;
    if (name == "pruned") return Strategy::pruned;
    fail(Errc::usage, "unknown strategy '" + name + "' (expected flat or pruned)");
}

} // namespace

SessionConfig SessionConfig::from_json(const json& config) {
    SessionConfig c;
    if (config.contains("q")) {
        const json& qj = config.at("q");
        if (!qj.is_object()) fail(Errc::usage, "config key 'q' must be an object {p, e, modulus}");
        c.field.p = field_or<std::uint32_t>(qj, "p", 2);
        c.field.e = field_or<std::uint32_t>(qj, "e", 1);
        if (qj.contains("modulus")) c.field.modulus = qj.at("modulus").get<std::vector<std::uint32_t>>();
        c.field.generator_symbol = field_or<std::string>(qj, "generator", "g");
    }
    c.precision = field_or<int>(config, "M", 8);
    c.nvars = field_or<std::uint32_t>(config, "n", 1);
    c.radius_j = field_or<std::uint32_t>(config, "radius_j", 0);
    c.strategy = parse_strategy(field_or<std::string>(config, "strategy", "pruned"));
    c.workers = field_or<std::uint32_t>(config, "workers", 1);
    c.node_budget = field_or<std::uint64_t>(config, "budget", kDefaultNodeBudget);
    c.seed = field_or<std::uint64_t>(config, "seed", 0);
    c.cache_path = field_or<std::string>(config, "cache", "");
    c.curve_degree_cap = field_or<std::uint32_t>(config, "curve_cap", 16);

    if (c.precision < 1 || c.precision > kMaxPrecision)
        fail(Errc::usage, "M must lie in [1, " + std::to_string(kMaxPrecision) + "]");
    if (c.nvars < 1 || c.nvars > 8) fail(Errc::usage, "n must lie in [1, 8]");
    if (c.radius_j >= static_cast<std::uint32_t>(c.precision))
        fail(Errc::usage, "radius_j must be smaller than M");
    if (c.workers < 1 || c.workers > 64) fail(Errc::usage, "workers must lie in [1, 64]");
    if (c.node_budget < 1 || c.node_budget > 1'000'000'000'000ull)
        fail(Errc::usage, "budget must lie in [1, 1e12]");
    Field probe(c.field); // field parameters are validated before any computation
    return c;
}

Session::Session(SessionConfig config) : config_(std::move(config)), field_(config_.field) {
    if (!config_.cache_path.empty()) cache_ = std::make_unique<CountCache>(config_.cache_path);
}

CountOptions Session::count_options() {
    CountOptions opts;
    opts.strategy = config_.strategy;
    opts.workers = config_.workers;
    opts.node_budget = config_.node_budget;
    opts.cache = cache();
    opts.tool_version = kToolVersion;
    return opts;
}

namespace {

json rational_json(const Rational& r) { return json::array({r.num, r.den}); }

json valuation_json(const Valuation& v) {
    return v.finite ? json{{"finite", v.value}} : json{{"at_least", v.value}};
}

json transform_json_with_ring(const Transform& t, const RingCtx& ring) {
    json j;
    j["kind"] = transform_kind(t);
    if (const auto* scale = std::get_if<ScaleMap>(&t)) {
        j["a"] = scale->a;
        j["b"] = scale->b;
    } else if (const auto* shear = std::get_if<ShearMap>(&t)) {
        j["d"] = shear->d;
    } else if (const auto* lin = std::get_if<LinearShear>(&t)) {
        json cs = json::array();
        for (const auto& c : lin->c) cs.push_back(ring.to_string(c));
        j["c"] = std::move(cs);
    }
    return j;
}

json counts_json(const CountTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) rows.push_back(json::array({row.k, row.count}));
    return rows;
}

json estimate_json(const LctEstimate& est) {
    json j;
    j["window"] = json::array({est.window.lo, est.window.hi});
    j["infinite"] = est.infinite;
    json slopes = json::array();
    for (const auto& [k, slope] : est.point_slopes) slopes.push_back(json::array({k, slope}));
    j["slopes"] = std::move(slopes);
    if (!est.infinite) {
        j["regression"] = est.regression;
        if (est.exact) j["exact"] = rational_json(*est.exact);
    }
    return j;
}

json bound_json(const BoundCert& cert) {
    json j;
    j["provenance"] = bound_kind_name(cert.kind);
    if (cert.infinite) {
        j["infinite"] = true;
    } else {
        j["value_num"] = cert.value.num;
        j["value_den"] = cert.value.den;
    }
    json data;
    switch (cert.kind) {
        case BoundKind::weierstrass_degree: data["d"] = cert.d; break;
        case BoundKind::multiplicity: data["K"] = cert.K; break;
        case BoundKind::complexity:
            data["d"] = cert.d;
            data["D"] = cert.D;
            data["m"] = cert.m;
            break;
    }
    j["data"] = std::move(data);
    if (cert.generator_index >= 0) j["generator_index"] = cert.generator_index;
    return j;
}

struct ParsedIdeal {
    std::vector<MPoly> generators;
    std::vector<std::string> canonical;
    std::vector<OElem> x0;
    std::vector<std::string> x0_canonical;
};

} // namespace

nlohmann::json Session::run(std::string_view command, const json& request) {
    const RingCtx ring = this->ring();
    const std::uint32_t nvars = config_.nvars;

    auto parse_ideal = [&](const json& req) {
        ParsedIdeal out;
        if (!req.contains("generators") || !req.at("generators").is_array() ||
            req.at("generators").empty())
            fail(Errc::usage, "request needs a non-empty 'generators' array");
        for (const auto& text : req.at("generators")) {
            MPoly f = parse_poly(text.get<std::string>(), ring, nvars);
            out.canonical.push_back(f.to_string());
            out.generators.push_back(std::move(f));
        }
        if (req.contains("x0")) {
            for (const auto& text : req.at("x0")) {
                const MPoly c = parse_poly(text.get<std::string>(), ring, 0);
                out.x0.push_back(c.coeff(ExpVec{}));
            }
        } else {
            out.x0.assign(nvars, ring.zero());
        }
        for (const auto& x : out.x0) out.x0_canonical.push_back(ring.to_string(x));
        return out;
    };

    auto parse_single = [&](const json& req) {
        if (!req.contains("f")) fail(Errc::usage, "request needs the polynomial field 'f'");
        return parse_poly(req.at("f").get<std::string>(), ring, nvars);
    };

    json report;
    report["command"] = std::string(command);
    report["tool_version"] = kToolVersion;
    report["seed"] = config_.seed;
    report["timestamp"] = utc_timestamp();
    report["q"] = field_.q();
    report["e"] = field_.e();
    report["n"] = nvars;
    report["M"] = config_.precision;

    if (command == "count") {
        const ParsedIdeal ideal = parse_ideal(request);
        IdealSpec spec(ideal.generators, ideal.x0, config_.radius_j);
        CountOptions opts = count_options();
        if (request.contains("strategy"))
            opts.strategy = parse_strategy(request.at("strategy").get<std::string>());
        const std::uint32_t k_max = request.contains("k") ? required_u32(request, "k")
                                                          : required_u32(request, "kmax");
        CountTable table;
        if (request.contains("k")) {
            table.q = field_.q();
            table.nvars = nvars;
            table.fingerprint = spec.fingerprint();
            table.strategy = opts.strategy;
            table.rows.push_back(CountRow{k_max, count_nk(spec, k_max, opts)});
        } else {
            table = count_table(spec, k_max, opts);
        }
        report["fingerprint"] = spec.fingerprint();
        report["generators"] = ideal.canonical;
        report["x0"] = ideal.x0_canonical;
        report["radius_j"] = config_.radius_j;
        report["strategy"] = strategy_name(opts.strategy);
        report["counts"] = counts_json(table);
        return report;
    }

    if (command == "lct-estimate") {
        const ParsedIdeal ideal = parse_ideal(request);
        IdealSpec spec(ideal.generators, ideal.x0, config_.radius_j);
        const std::uint32_t k_max = required_u32(request, "kmax");
        Window window{std::max<std::uint32_t>(1, (k_max + 1) / 2), k_max};
        if (request.contains("window")) {
            window.lo = request.at("window").at(0).get<std::uint32_t>();
            window.hi = request.at("window").at(1).get<std::uint32_t>();
        }
        const CountTable table = count_table(spec, k_max, count_options());
        const LctEstimate estimate = estimate_lct(table, window);

        // certified bounds per generator, on the translated generators; the
        // ideal-level bound is the max across generators
        json bounds = json::array();
        std::optional<Rational> best;
        bool best_infinite = false;
        const auto& gens = spec.counting_generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            BoundCert mult = multiplicity_lower_bound(gens[i]);
            mult.generator_index = static_cast<int>(i);
            bounds.push_back(bound_json(mult));
            if (mult.infinite) best_infinite = true;
            else if (!best || *best < mult.value) best = mult.value;
            try {
                const ReduceOutcome red =
                    reduce_to_weierstrass(gens[i], ReduceOptions{config_.seed, 64});
                if (red.status == ReduceStatus::unit_input) {
                    best_infinite = true;
                } else {
                    BoundCert weier = weierstrass_lower_bound(*red.prep);
                    weier.generator_index = static_cast<int>(i);
                    bounds.push_back(bound_json(weier));
                    if (!best || *best < weier.value) best = weier.value;
                }
            } catch (const Error&) {
                // preparation is best-effort here; the multiplicity bound stands
            }
        }
        report["fingerprint"] = spec.fingerprint();
        report["generators"] = ideal.canonical;
        report["x0"] = ideal.x0_canonical;
        report["radius_j"] = config_.radius_j;
        report["counts"] = counts_json(table);
        report["estimate"] = estimate_json(estimate);
        report["bounds"] = std::move(bounds);
        if (best_infinite)
            report["bound"] = json{{"infinite", true}};
        else if (best)
            report["bound"] = json{{"value_num", best->num}, {"value_den", best->den}};
        return report;
    }

    if (command == "prepare") {
        const MPoly f = parse_single(request);
        const std::uint64_t seed = field_or<std::uint64_t>(request, "seed", config_.seed);
        const ReduceOutcome outcome = reduce_to_weierstrass(f, ReduceOptions{seed, 64});
        report["f"] = f.to_string();
        report["seed"] = seed;
        json transforms = json::array();
        for (const auto& t : outcome.transforms) transforms.push_back(transform_json_with_ring(t, ring));
        report["transforms"] = std::move(transforms);
        report["value_at_origin"] = ring.to_string(outcome.value_at_origin);
        if (outcome.status == ReduceStatus::unit_input) {
            report["outcome"] = "unit_input";
            report["lct"] = "infinite";
            return report;
        }
        const PreparationResult& prep = *outcome.prep;
        report["outcome"] = "prepared";
        report["s0"] = prep.s0;
        report["omega"] = prep.omega.to_string();
        report["unit_u"] = prep.unit_u.to_string();
        report["certified_precision"] = prep.certified_precision;
        report["gauss_val_omega"] = valuation_json(prep.omega.gauss_val());
        const BoundCert bound = weierstrass_lower_bound(prep);
        report["bound"] = bound_json(bound);
        return report;
    }

    if (command == "verify-remez" || command == "verify-smallball") {
        const MPoly f = parse_single(request);
        const std::uint32_t k_max = required_u32(request, "kmax");
        const SmallBallReport check = command == "verify-remez"
                                          ? verify_remez_monic(f, k_max, count_options())
                                          : verify_weierstrass_smallball(f, k_max, count_options());
        report["f"] = f.to_string();
        report["degree"] = check.degree;
        report["all_pass"] = check.all_pass;
        json rows = json::array();
        for (const auto& r : check.rows) {
            rows.push_back(json{{"k", r.k},
                                {"N_k", r.count},
                                {"lhs", r.lhs},
                                {"rhs", r.rhs},
                                {"pass", r.pass}});
        }
        report["rows"] = std::move(rows);
        return report;
    }

    if (command == "zeta") {
        const MPoly f = parse_single(request);
        const std::uint32_t k_max = required_u32(request, "kmax");
        Rational s;
        const json& sj = request.contains("s") ? request.at("s") : json(nullptr);
        if (sj.is_array() && sj.size() == 2) {
            s = Rational(sj.at(0).get<std::int64_t>(), sj.at(1).get<std::int64_t>());
        } else if (sj.is_number_integer()) {
            s = Rational(sj.get<std::int64_t>(), 1);
        } else {
            fail(Errc::usage, "zeta needs 's' as [num, den] or an integer");
        }
        std::optional<std::uint32_t> degree;
        if (request.contains("d")) degree = request.at("d").get<std::uint32_t>();

        IdealSpec spec({f}, {}, config_.radius_j);
        const CountTable table = count_table(spec, k_max + 1, count_options());
        const ZetaResult zeta = zeta_partial_sum(table, s, k_max, degree, field_.p(), field_.e());
        report["f"] = f.to_string();
        report["fingerprint"] = spec.fingerprint();
        report["s"] = rational_json(s);
        json terms = json::array();
        for (const auto& t : zeta.terms)
            terms.push_back(json{{"k", t.k},
                                 {"coeff", std::to_string(t.coeff)},
                                 {"exp", rational_json(t.exponent)}});
        report["terms"] = std::move(terms);
        report["partial_sums"] = zeta.partial_sums;
        report["diverging"] = zeta.diverging;
        if (zeta.within_bound.has_value()) {
            report["bound"] = json{{"d", *zeta.degree},
                                   {"within_bound", *zeta.within_bound},
                                   {"bound_approx", zeta.bound_approx}};
        }
        return report;
    }

    if (command == "example-curve") {
        const std::uint32_t d = required_u32(request, "d");
        const std::uint32_t D = required_u32(request, "D");
        const std::uint32_t m = required_u32(request, "m");
        const std::uint32_t k_max = field_or<std::uint32_t>(request, "kmax", 0);
        const ExampleCurveReport curve =
            example_curve(field_, d, D, m, k_max, count_options(), config_.curve_degree_cap);
        report["d"] = d;
        report["D"] = D;
        report["m"] = m;
        report["pullback_degree"] = curve.pullback_degree;
        report["fingerprint"] = curve.table.fingerprint;
        report["counts"] = counts_json(curve.table);
        report["estimate"] = estimate_json(curve.estimate);
        report["bound"] = bound_json(curve.bound);
        report["match"] = curve.match;
        return report;
    }

    fail(Errc::usage, "unknown command '" + std::string(command) +
                          "' (expected count, lct-estimate, prepare, verify-remez, "
                          "verify-smallball, zeta, example-curve)");
}

json error_to_json(const Error& e) {
    json obj;
    obj["code"] = static_cast<int>(e.code());
    obj["name"] = errc_name(e.code());
    obj["message"] = e.what();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) obj["position"] = pe->position();
    return json{{"error", std::move(obj)}};
}

} // namespace lctf
