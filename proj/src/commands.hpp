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

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "cache.hpp"
#include "counting.hpp"
#include "field.hpp"

namespace lctf {

/// Session-wide configuration, validated before any computation. Parsed from
/// JSON of the shape
///   {"q": {"p": 2, "e": 1, "modulus": [..]}, "M": 6, "n": 2, "radius_j": 0,
///    "strategy": "pruned", "workers": 1, "budget": ..., "seed": 0,
///    "cache": "path", "curve_cap": 16}
struct SessionConfig {
    Field::Params field;
    int precision = 8;
    std::uint32_t nvars = 1;
    std::uint32_t radius_j = 0;
    Strategy strategy = Strategy::pruned;
    std::uint32_t workers = 1;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::uint64_t seed = 0;
    std::string cache_path;
    std::uint32_t curve_degree_cap = 16;

    static SessionConfig from_json(const nlohmann::json& config);
};

/// One configured pipeline instance: the field, the working precision, the
/// optional count cache. Commands are pure given (session config, request,
/// seed); reports are deterministic JSON apart from the timestamp field.
class Session {
  public:
    explicit Session(SessionConfig config);

    const SessionConfig& config() const { return config_; }
    const Field& field() const { return field_; }
    RingCtx ring() const { return RingCtx(&field_, config_.precision); }
    CountCache* cache() { return cache_ ? cache_.get() : nullptr; }
    CountOptions count_options();

    /// Dispatch one subcommand: count, lct-estimate, prepare, verify-remez,
    /// verify-smallball, zeta, example-curve.
    nlohmann::json run(std::string_view command, const nlohmann::json& request);

  private:
    SessionConfig config_;
    Field field_;
    std::unique_ptr<CountCache> cache_;
};

/// Machine-readable error object: {"error": {"code", "name", "message"}}.
nlohmann::json error_to_json(const Error& e);

} // namespace lctf
