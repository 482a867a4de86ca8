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

#include <string_view>

#include "mpoly.hpp"

namespace lctf {

/// Recursive-descent parser for polynomial input. Grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' UINT)?
///   atom   := UINT | 't' | 'g' | VAR | '(' expr ')'
///   VAR    := 'x' UINT
///
/// Whitespace is insignificant. '-' is the additive inverse in GF(p);
/// integer literals reduce into GF(p); 't' is the uniformizer; 'x1'..'xN'
/// are coordinates; 'g' is the field generator (extension fields only).
/// Negative exponents are rejected as non-integral input.
MPoly parse_poly(std::string_view text, RingCtx ring, std::uint32_t nvars);

} // namespace lctf
