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
#include <vector>

#include "bigint.hpp"
#include "rational.hpp"

namespace lctf {

/// One exact term c * q^r with integer coefficient and rational exponent.
struct QPowTerm {
    std::int64_t coeff = 0;
    Rational exp;
};

/// Exact sign of sum c_i * q^{r_i}, q = p^e. Everything is rewritten over
/// the prime base p with one common exponent denominator L; the roots p^{r/L}
/// are then bracketed by certified integer L-th roots at growing precision,
/// so the verdict is proof-grade (no floating point anywhere).
int qpow_sum_sign(std::uint32_t p, std::uint32_t e, const std::vector<QPowTerm>& terms);

/// Exact check  sum(lhs) <= sum(rhs).
bool qpow_sum_le(std::uint32_t p, std::uint32_t e, std::vector<QPowTerm> lhs,
                 const std::vector<QPowTerm>& rhs);

} // namespace lctf
