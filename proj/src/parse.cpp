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

#include "parse.hpp"

#include <cctype>

namespace lctf {

namespace {

constexpr std::uint64_t kMaxExponent = 1 << 20;

class Parser {
  public:
    Parser(std::string_view text, RingCtx ring, std::uint32_t nvars)
        : text_(text), ring_(ring), nvars_(nvars) {}

    MPoly parse() {
        MPoly value = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(Errc::syntax, "unexpected trailing input", pos_);
        return value;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::uint64_t read_uint(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(Errc::syntax, std::string("expected ") + what, pos_);
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (UINT64_MAX - digit) / 10)
                throw ParseError(Errc::cap_exceeded, "integer literal too large", pos_);
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    MPoly expr() {
        MPoly value = term();
        while (true) {
            if (consume('+')) {
                value = value + term();
            } else if (consume('-')) {
                value = value - term();
            } else {
                return value;
            }
        }
    }

    MPoly term() {
        MPoly value = factor();
        while (consume('*')) value = value * factor();
        return value;
    }

    MPoly factor() {
        MPoly base = atom();
        skip_ws();
        if (!consume('^')) return base;
        skip_ws();
        if (peek() == '-')
            throw ParseError(Errc::non_integral_coefficient, "negative exponents are rejected", pos_);
        const std::uint64_t exponent = read_uint("exponent");
        if (exponent > kMaxExponent)
            throw ParseError(Errc::cap_exceeded, "exponent exceeds the cap", pos_);
        return base.pow(exponent);
    }

    MPoly atom() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) throw ParseError(Errc::syntax, "unexpected end of input", at);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t value = read_uint("integer");
            return MPoly::constant(ring_, nvars_,
                                   ring_.from_int(static_cast<std::int64_t>(value % ring_.field().p())));
        }
        if (c == 't') {
            ++pos_;
            return MPoly::constant(ring_, nvars_, ring_.tpow(1));
        }
        if (c == 'g') {
            ++pos_;
            if (ring_.field().e() < 2)
                throw ParseError(Errc::unknown_variable,
                                 "'" + std::string(1, c) + "' needs an extension field (e > 1)", at);
            return MPoly::constant(ring_, nvars_, ring_.from_const(ring_.field().generator()));
        }
        if (c == 'x') {
            ++pos_;
            const std::uint64_t index = read_uint("variable index");
            if (index < 1 || index > nvars_)
                throw ParseError(Errc::unknown_variable,
                                 "variable x" + std::to_string(index) + " outside x1..x" +
                                     std::to_string(nvars_),
                                 at);
            return MPoly::variable(ring_, nvars_, static_cast<std::uint32_t>(index - 1));
        }
        if (c == '(') {
            ++pos_;
            MPoly value = expr();
            if (!consume(')')) throw ParseError(Errc::syntax, "expected ')'", pos_);
            return value;
        }
        throw ParseError(Errc::syntax, std::string("unexpected character '") + c + "'", at);
    }

    std::string_view text_;
    RingCtx ring_;
    std::uint32_t nvars_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly parse_poly(std::string_view text, RingCtx ring, std::uint32_t nvars) {
    return Parser(text, ring, nvars).parse();
}

} // namespace lctf
