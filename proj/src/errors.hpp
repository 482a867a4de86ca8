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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lctf {

/// Library-wide error classification. The numeric values are part of the
/// shared-library ABI (see include/lctf.h) and must not be reordered.
enum class Errc : int {
    ok = 0,
    usage = 1,
    syntax = 2,
    unknown_variable = 3,
    non_integral_coefficient = 4,
    division_by_zero = 5,
    not_a_unit = 6,
    precision_exceeded = 7,
    precision_exhausted = 8,
    not_integral = 9,
    indeterminate_input = 10,
    search_exhausted = 11,
    certification_failed = 12,
    budget_exceeded = 13,
    insufficient_data = 14,
    cap_exceeded = 15,
    io_error = 16,
    integrity = 17,
    internal = 18,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::ok: return "ok";
        case Errc::usage: return "usage";
        case Errc::syntax: return "syntax";
        case Errc::unknown_variable: return "unknown_variable";
        case Errc::non_integral_coefficient: return "non_integral_coefficient";
        case Errc::division_by_zero: return "division_by_zero";
        case Errc::not_a_unit: return "not_a_unit";
        case Errc::precision_exceeded: return "precision_exceeded";
        case Errc::precision_exhausted: return "precision_exhausted";
        case Errc::not_integral: return "not_integral";
        case Errc::indeterminate_input: return "indeterminate_input";
        case Errc::search_exhausted: return "search_exhausted";
        case Errc::certification_failed: return "certification_failed";
        case Errc::budget_exceeded: return "budget_exceeded";
        case Errc::insufficient_data: return "insufficient_data";
        case Errc::cap_exceeded: return "cap_exceeded";
        case Errc::io_error: return "io_error";
        case Errc::integrity: return "integrity";
        case Errc::internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message) : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

/// Parse failure with a 0-based byte offset into the input text.
class ParseError : public Error {
  public:
    ParseError(Errc code, const std::string& message, std::size_t position)
        : Error(code, message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace lctf
