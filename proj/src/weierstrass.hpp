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
#include <utility>
#include <variant>
#include <vector>

#include "mpoly.hpp"

namespace lctf {

/// One step of the reduction pipeline. Every transform preserves the
/// log-canonical threshold at the origin.
using Transform = std::variant<ScaleMap, ShearMap, LinearShear>;
const char* transform_kind(const Transform& t);

/// Certificate that f = sum a_s(x') x_n^s is distinguished in x_n of order
/// s0: a_{s0} is a unit attaining the Gauss norm of f, and every higher
/// coefficient is certified strictly smaller in norm.
struct DistinguishedInfo {
    std::uint32_t s0 = 0;
    Valuation leading_unit_val = Valuation::fin(0);
    std::vector<std::pair<std::uint32_t, Valuation>> higher_coeff_vals;
};

enum class DistinguishStatus { distinguished, unit_input, not_distinguished };

struct DistinguishOutcome {
    DistinguishStatus status = DistinguishStatus::not_distinguished;
    std::optional<DistinguishedInfo> info;
};

/// Detect the distinguished order of f (Gauss valuation must be normalized
/// to 0 first). Scans from the top x_n-degree downward and reports the first
/// certified order; a unit value at the origin short-circuits as unit_input.
/// Never returns an uncertified answer.
DistinguishOutcome find_distinguished_order(const MPoly& f);

/// Unit criterion for a in T_{n-1} at Gauss norm 1: the constant coefficient
/// has valuation 0 and every non-constant coefficient valuation >= 1.
bool is_tate_unit(const MPoly& a);

/// Inverse of a Tate unit mod t^{certified}, by the finite geometric series
/// on its constant-dominant form.
MPoly invert_tate_unit(const MPoly& a);

struct MakeDistinguishedOptions {
    std::uint64_t seed = 0;
    int max_attempts = 64;
    /// Power shears always succeed on polynomial input, so the randomized
    /// stage is a fallback; tests disable them to drive it directly.
    bool enable_power_shears = true;
};

struct MakeDistinguishedResult {
    std::vector<Transform> transforms;
    MPoly poly;
    DistinguishedInfo info;
};

/// Search for a coordinate change after which f is distinguished in x_n:
/// identity first, then small uniform power shears, then the
/// degree-separating shear d_i = (delta+1)^{n-i} (injective on exponent
/// vectors of total degree <= delta), then seeded random linear shears
/// followed by the rescale normalization. Deterministic given (f, seed).
MakeDistinguishedResult make_distinguished(const MPoly& f, const MakeDistinguishedOptions& opts = {});

/// Result of Weierstrass preparation: unit_u * f_transformed = omega
/// mod t^{certified_precision}, omega monic of degree s0 in x_n with Gauss
/// norm 1. Constructed only after the identity has been certified by an
/// explicit multiplication.
struct PreparationResult {
    MPoly omega;
    MPoly unit_u;
    std::uint32_t s0 = 0;
    int certified_precision = 1;
    std::vector<Transform> transforms;
    MPoly transformed_input; // the polynomial unit_u multiplies
};

/// Division with remainder by a distinguished f: g = quot * f + rem
/// mod t^{min certified}, with deg_{x_n} rem < s0. Engine: split
/// f = f_head + f_tail at s0; each round divides the residual by f_head
/// (only a_{s0} is inverted) and the new residual -quot_i * f_tail gains at
/// least one factor of t, so the loop ends within the certified precision.
std::pair<MPoly, MPoly> weierstrass_divide(const MPoly& g, const MPoly& f,
                                           const DistinguishedInfo& info);

/// Preparation via division of x_n^{s0} by f.
PreparationResult weierstrass_prepare(const MPoly& f, const DistinguishedInfo& info,
                                      std::vector<Transform> trail = {});

struct ReduceOptions {
    std::uint64_t seed = 0;
    int max_attempts = 64;
};

enum class ReduceStatus { prepared, unit_input };

struct ReduceOutcome {
    ReduceStatus status = ReduceStatus::prepared;
    std::optional<PreparationResult> prep;
    std::vector<Transform> transforms;
    OElem value_at_origin;
};

/// Full reduction pipeline: normalize the Gauss valuation by an exact
/// t-power rescale, transform to distinguished form, then prepare. A unit
/// value at the origin short-circuits (the threshold is infinite).
ReduceOutcome reduce_to_weierstrass(const MPoly& f, const ReduceOptions& opts = {});

} // namespace lctf
