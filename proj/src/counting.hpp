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
#include <string>
#include <vector>

#include "cache.hpp"
#include "mpoly.hpp"

namespace lctf {

enum class Strategy { flat, pruned };
const char* strategy_name(Strategy s);

/// The counting query: generators f_1, ..., f_r of a non-zero ideal, a base
/// point x0 and a ball radius exponent j. Counting always happens on the
/// translated-and-rescaled generators g_i(y) = f_i(x0 + t^j y) over y in O^n,
/// whose integral coefficients make residue counts well defined: g(y) mod t^k
/// depends only on y mod t^k.
class IdealSpec {
  public:
    IdealSpec(std::vector<MPoly> generators, std::vector<OElem> base_point, std::uint32_t radius_j);

    const RingCtx& ring() const { return ring_; }
    std::uint32_t nvars() const { return nvars_; }
    std::uint32_t radius_j() const { return radius_j_; }
    const std::vector<OElem>& base_point() const { return base_point_; }
    /// Nonzero input generators (zero generators are absorbed by the min).
    const std::vector<MPoly>& generators() const { return generators_; }
    /// The translated generators actually counted.
    const std::vector<MPoly>& counting_generators() const { return counting_; }
    int certified() const { return certified_; }
    const std::string& fingerprint() const { return fingerprint_; }
    /// Every counting generator vanishes at the (translated) origin; in that
    /// case N_k >= 1 for all k.
    bool vanishes_at_origin() const;

  private:
    RingCtx ring_;
    std::uint32_t nvars_;
    std::uint32_t radius_j_;
    std::vector<OElem> base_point_;
    std::vector<MPoly> generators_;
    std::vector<MPoly> counting_;
    int certified_;
    std::string fingerprint_;
};

struct CountRow {
    std::uint32_t k = 0;
    std::uint64_t count = 0; // N_k; the exact volume is N_k * q^{-n k}
};

struct CountTable {
    std::vector<CountRow> rows; // k ascending from 1
    std::uint64_t q = 0;
    std::uint32_t nvars = 0;
    std::string fingerprint;
    Strategy strategy = Strategy::pruned;

    std::optional<std::uint64_t> lookup(std::uint32_t k) const;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct CountOptions {
    Strategy strategy = Strategy::pruned;
    std::uint32_t workers = 1;
    std::uint64_t node_budget = kDefaultNodeBudget;
    CountCache* cache = nullptr;
    std::string tool_version;
};

/// Raised when the node budget trips; carries every fully-computed row.
class BudgetExceededError : public Error {
  public:
    BudgetExceededError(std::string message, CountTable partial_table)
        : Error(Errc::budget_exceeded, std::move(message)), partial(std::move(partial_table)) {}
    CountTable partial;
};

/// Exact N_k = #{x in (O/t^k)^n : val(f_i(x)) >= k for all i}.
std::uint64_t count_nk(const IdealSpec& spec, std::uint32_t k, const CountOptions& opts = {});

/// Rows k = 1..k_max. The flat strategy enumerates all q^{nk} residues per
/// row; the pruned strategy lifts level by level, cutting any residue whose
/// value is already certified nonzero (no descendant can recover). Both
/// produce identical tables.
CountTable count_table(const IdealSpec& spec, std::uint32_t k_max, const CountOptions& opts = {});

/// Exact volume of {x : val >= k} as (N_k, denominator exponent n*k).
std::pair<std::uint64_t, std::uint32_t> sublevel_volume(const IdealSpec& spec, std::uint32_t k,
                                                        const CountOptions& opts = {});

/// Residue prefixes mod t^{delta_split} assigned to workers; the cells
/// partition (O/t^{delta_split})^n exactly. Digit layout per prefix:
/// coordinate-major, level-minor (coordinate c, level l at index
/// c*delta_split + l).
struct PartitionPlan {
    std::uint32_t delta_split = 0;
    std::vector<std::vector<felem>> prefixes;
};

PartitionPlan partition(const IdealSpec& spec, std::uint32_t k, std::uint32_t delta_split);

/// Count of completions of one prefix cell at depth k.
std::uint64_t count_cell(const IdealSpec& spec, std::uint32_t k, const std::vector<felem>& prefix,
                         std::uint32_t delta_split, const CountOptions& opts = {});

/// Order-independent exact merge of per-cell counts.
std::uint64_t merge_counts(const std::vector<std::uint64_t>& partials);

struct SmallBallRow {
    std::uint32_t k = 0;
    std::uint64_t count = 0;
    std::string lhs; // N_k^d * q^k
    std::string rhs; // d^d * q^{n k d}
    bool pass = false;
};

struct SmallBallReport {
    std::uint32_t degree = 0;
    std::uint32_t nvars = 1;
    std::vector<SmallBallRow> rows;
    bool all_pass = true;
};

/// Exact check of the monic small-ball bound mu_k <= d q^{-k/d} for a monic
/// univariate f of degree d, via the cross-multiplied integer inequality
/// N_k^d q^k <= d^d q^{k d}.
SmallBallReport verify_remez_monic(const MPoly& f, std::uint32_t k_max,
                                   const CountOptions& opts = {});

/// Same bound for a Weierstrass polynomial in n variables:
/// N_k^d q^k <= d^d q^{n k d}.
SmallBallReport verify_weierstrass_smallball(const MPoly& f, std::uint32_t k_max,
                                             const CountOptions& opts = {});

} // namespace lctf
