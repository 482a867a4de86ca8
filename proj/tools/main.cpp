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

// Command-line front end. All computation happens behind the shared-library
// C API (lctf.h); this binary only translates flags into JSON requests,
// prints the JSON report to stdout (or --out) and a short human summary to
// stderr. Exit codes: 0 success, 1 computation error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lctf.h"

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::uint64_t q = 0; // sugar: prime (or prime power with --modulus)
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::string modulus; // comma-separated, low degree first
    int precision = 8;
    std::uint32_t nvars = 1;
    std::vector<std::string> x0;
    std::uint32_t radius_j = 0;
    std::string strategy = "pruned";
    std::uint32_t workers = 1;
    std::uint64_t budget = 100000000ull;
    std::uint64_t seed = 0;
    std::string cache_path;
    std::string out_path;
};

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

// resolve --q sugar into (p, e): q must be a prime power
bool resolve_q(GlobalOptions& g, std::string& error) {
    if (g.q == 0) return true;
    std::uint64_t n = g.q;
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = static_cast<std::uint32_t>(n);
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (n != 1) {
        error = "--q must be a prime power";
        return false;
    }
    g.p = p;
    g.e = e;
    return true;
}

json build_config(const GlobalOptions& g) {
    json q{{"p", g.p}, {"e", g.e}};
    if (!g.modulus.empty()) q["modulus"] = parse_modulus(g.modulus);
    json config{{"q", q},           {"M", g.precision},   {"n", g.nvars},
                {"radius_j", g.radius_j}, {"strategy", g.strategy}, {"workers", g.workers},
                {"budget", g.budget},     {"seed", g.seed}};
    if (!g.cache_path.empty()) config["cache"] = g.cache_path;
    return config;
}

void print_human_summary(const json& report, std::ostream& err) {
    const std::string command = report.value("command", "");
    if (report.contains("counts")) {
        err << "k\tN_k\n";
        for (const auto& row : report.at("counts"))
            err << row.at(0).get<std::uint64_t>() << "\t" << row.at(1).get<std::uint64_t>() << "\n";
    }
    if (report.contains("estimate")) {
        const auto& est = report.at("estimate");
        if (est.value("infinite", false)) {
            err << "estimate: infinite (no common zero on the ball)\n";
        } else {
            err << "estimate: " << est.value("regression", 0.0);
            if (est.contains("exact"))
                err << " (exact " << est.at("exact").at(0).get<std::int64_t>() << "/"
                    << est.at("exact").at(1).get<std::int64_t>() << ")";
            err << "\n";
        }
    }
    if (report.contains("bound") && report.at("bound").is_object()) {
        const auto& b = report.at("bound");
        if (b.value("infinite", false))
            err << "bound: infinite\n";
        else if (b.contains("value_num"))
            err << "bound: " << b.at("value_num").get<std::int64_t>() << "/"
                << b.at("value_den").get<std::int64_t>() << "\n";
    }
    if (command == "prepare" && report.contains("outcome")) {
        err << "outcome: " << report.at("outcome").get<std::string>();
        if (report.contains("s0")) err << ", s0 = " << report.at("s0").get<std::uint32_t>();
        if (report.contains("omega")) err << ", omega = " << report.at("omega").get<std::string>();
        err << "\n";
    }
    if (report.contains("all_pass"))
        err << "verification: " << (report.at("all_pass").get<bool>() ? "all pass" : "FAILED") << "\n";
    if (report.contains("match"))
        err << "estimate matches bound: " << (report.at("match").get<bool>() ? "yes" : "no") << "\n";
}

int emit_error(const char* error_json) {
    std::cout << (error_json && *error_json ? error_json : R"({"error":{"code":18}})") << std::endl;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Weierstrass preparation and log-canonical threshold bounds over GF(q)((t))"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lctf_version()));

    GlobalOptions g;
    // shared options, on every subcommand; each one can also come from the
    // environment with the LCTF_ prefix
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--q", g.q, "Residue field size (prime power sugar for --p/--e)")->envname("LCTF_Q");
        cmd->add_option("--p", g.p, "Residue characteristic (prime)")->envname("LCTF_P");
        cmd->add_option("--e", g.e, "Extension degree")->envname("LCTF_E");
        cmd->add_option("--modulus", g.modulus,
                        "Modulus coefficients over GF(p), comma separated, low degree first")
            ->envname("LCTF_MODULUS");
        cmd->add_option("--M", g.precision, "Working precision (t-adic truncation)")->envname("LCTF_M");
        cmd->add_option("-n,--n", g.nvars, "Number of variables")->envname("LCTF_N");
        cmd->add_option("--x0", g.x0, "Base point coordinates (element syntax, repeatable)")
            ->envname("LCTF_X0");
        cmd->add_option("--radius-j", g.radius_j, "Ball radius exponent j (count over x0 + t^j O^n)")
            ->envname("LCTF_RADIUS_J");
        cmd->add_option("--strategy", g.strategy, "Counting strategy: flat | pruned")
            ->envname("LCTF_STRATEGY");
        cmd->add_option("--workers", g.workers, "Parallel workers for counting")->envname("LCTF_WORKERS");
        cmd->add_option("--budget", g.budget, "Node budget for enumeration")->envname("LCTF_BUDGET");
        cmd->add_option("--seed", g.seed, "Seed for the randomized shear search")->envname("LCTF_SEED");
        cmd->add_option("--cache", g.cache_path, "Append-only JSON-lines count cache")
            ->envname("LCTF_CACHE");
        cmd->add_option("--out", g.out_path, "Write the JSON report to this file instead of stdout")
            ->envname("LCTF_OUT");
    };

    std::vector<std::string> generators;
    std::string poly;
    std::uint32_t k = 0, kmax = 0, degree = 0;
    std::vector<std::int64_t> s_parts;
    std::vector<std::uint32_t> window;
    std::uint32_t curve_d = 1, curve_D = 1, curve_m = 0;

    CLI::App* count = app.add_subcommand("count", "Exact sublevel counts N_k");
    add_common(count);
    count->add_option("-f", generators, "Generator polynomial (repeatable)")->required();
    count->add_option("--k", k, "Single depth k");
    count->add_option("--kmax", kmax, "Table depth (rows 1..kmax)");

    CLI::App* lct = app.add_subcommand("lct-estimate", "Count, estimate the threshold, certify bounds");
    add_common(lct);
    lct->add_option("-f", generators, "Generator polynomial (repeatable)")->required();
    lct->add_option("--kmax", kmax, "Table depth")->required();
    lct->add_option("--window", window, "Estimator window lo hi")->expected(2);

    CLI::App* prepare = app.add_subcommand("prepare", "Weierstrass preparation with audit trail");
    add_common(prepare);
    prepare->add_option("-f", poly, "Input polynomial")->required();

    CLI::App* remez = app.add_subcommand("verify-remez", "Monic small-ball bound, exact check");
    add_common(remez);
    remez->add_option("-f", poly, "Monic univariate polynomial")->required();
    remez->add_option("--kmax", kmax, "Check depths 1..kmax")->required();

    CLI::App* smallball =
        app.add_subcommand("verify-smallball", "Weierstrass small-ball bound, exact check");
    add_common(smallball);
    smallball->add_option("-f", poly, "Weierstrass polynomial (monic in the last variable)")->required();
    smallball->add_option("--kmax", kmax, "Check depths 1..kmax")->required();

    CLI::App* zeta = app.add_subcommand("zeta", "Exact partial sums of the counting zeta series");
    add_common(zeta);
    zeta->add_option("-f", poly, "Input polynomial")->required();
    zeta->add_option("--s", s_parts, "Exponent s as NUM DEN (e.g. --s 1 4)")->expected(2)->required();
    zeta->add_option("--kmax", kmax, "Partial sums up to k")->required();
    zeta->add_option("--d", degree, "Weierstrass degree for the convergence bound");

    CLI::App* curve = app.add_subcommand("example-curve", "Monomial-curve pullback witness");
    add_common(curve);
    curve->add_option("--d", curve_d, "Polynomial degree d")->required();
    curve->add_option("--D", curve_D, "Defining-equation degree D")->required();
    curve->add_option("--m", curve_m, "Codimension m")->required();
    curve->add_option("--kmax", kmax, "Counting depth (default 2 d D^m)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
        app.exit(e);
        return 2;
    }

    std::string resolve_error;
    if (!resolve_q(g, resolve_error)) {
        std::cerr << "error: " << resolve_error << "\n";
        return 2;
    }

    std::string command;
    json request = json::object();
    if (count->parsed()) {
        command = "count";
        request["generators"] = generators;
        if (count->count("--k")) request["k"] = k;
        if (count->count("--kmax")) request["kmax"] = kmax;
        if (!count->count("--k") && !count->count("--kmax")) {
            std::cerr << "error: count needs --k or --kmax\n";
            return 2;
        }
    } else if (lct->parsed()) {
        command = "lct-estimate";
        request["generators"] = generators;
        request["kmax"] = kmax;
        if (!window.empty()) request["window"] = window;
    } else if (prepare->parsed()) {
        command = "prepare";
        request["f"] = poly;
    } else if (remez->parsed() || smallball->parsed()) {
        command = remez->parsed() ? "verify-remez" : "verify-smallball";
        request["f"] = poly;
        request["kmax"] = kmax;
    } else if (zeta->parsed()) {
        command = "zeta";
        request["f"] = poly;
        request["s"] = s_parts;
        request["kmax"] = kmax;
        if (zeta->count("--d")) request["d"] = degree;
    } else if (curve->parsed()) {
        command = "example-curve";
        request["d"] = curve_d;
        request["D"] = curve_D;
        request["m"] = curve_m;
        if (curve->count("--kmax")) request["kmax"] = kmax;
    }
    if (!g.x0.empty()) request["x0"] = g.x0;

    lctf_session* session = nullptr;
    lctf_status status = lctf_session_create(build_config(g).dump().c_str(), &session);
    if (status != LCTF_OK) {
        const int code = emit_error(lctf_last_error(nullptr));
        return status == LCTF_E_USAGE ? 2 : code;
    }

    char* report_text = nullptr;
    status = lctf_run(session, command.c_str(), request.dump().c_str(), &report_text);
    if (status != LCTF_OK) {
        const int code = emit_error(lctf_last_error(session));
        lctf_session_destroy(session);
        return status == LCTF_E_USAGE ? 2 : code;
    }

    const std::string report_str = report_text;
    lctf_free(report_text);
    lctf_session_destroy(session);

    if (!g.out_path.empty()) {
        std::ofstream out(g.out_path);
        if (!out.is_open()) {
            std::cerr << "error: cannot open " << g.out_path << "\n";
            return 1;
        }
        out << report_str << "\n";
    } else {
        std::cout << report_str << std::endl;
    }

    const json report = json::parse(report_str);
    print_human_summary(report, std::cerr);
    return 0;
}
