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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ring.hpp"

namespace lctf {

using ExpVec = std::vector<std::uint32_t>;

/// Graded-lexicographic term order: total degree first, then componentwise.
/// All term maps iterate in this order, which makes serialization and every
/// downstream fingerprint deterministic across runs and platforms.
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// x_i -> x_i + x_n^{d_i} for i < n, x_n fixed.
struct ShearMap {
    std::vector<std::uint32_t> d;
};

/// x_i -> x_i + c_i x_n for i < n with unit constants c_i, x_n fixed.
struct LinearShear {
    std::vector<OElem> c;
};

/// f -> t^{-b} f(t^{a_1} x_1, ..., t^{a_n} x_n).
struct ScaleMap {
    std::vector<std::uint32_t> a;
    std::uint32_t b = 0;
};

/// Polynomial over O/t^M in n variables: the exact finite-precision image of
/// a strictly convergent power series. `certified()` is the t-adic exponent
/// up to which the object faithfully represents its mathematical source; it
/// propagates as the minimum across operands and drops under exact t-power
/// division.
class MPoly {
  public:
    MPoly(RingCtx ring, std::uint32_t nvars); // zero polynomial
    MPoly(RingCtx ring, std::uint32_t nvars, int certified);

    static MPoly constant(RingCtx ring, std::uint32_t nvars, const OElem& value);
    /// x_{index+1} (0-based index).
    static MPoly variable(RingCtx ring, std::uint32_t nvars, std::uint32_t index);
    static MPoly monomial(RingCtx ring, std::uint32_t nvars, ExpVec exps, const OElem& coeff);

    const RingCtx& ring() const { return ring_; }
    std::uint32_t nvars() const { return nvars_; }
    int certified() const { return certified_; }
    const std::map<ExpVec, OElem, GradedLexLess>& terms() const { return terms_; }
    OElem coeff(const ExpVec& exps) const;

    MPoly with_certified(int certified) const;

    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly operator-() const;
    MPoly scaled(const OElem& c) const;
    MPoly times_tpow(int s) const;
    MPoly pow(std::uint64_t n) const;
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// No stored coefficient is certified nonzero below the precision.
    bool is_zero_at_precision() const;
    bool has_terms() const { return !terms_.empty(); }

    /// Minimum coefficient valuation, clamped at the certified precision;
    /// the Gauss norm of f is q^{-gauss_val}.
    Valuation gauss_val() const;

    /// Exact value mod t^{certified}, by iterated Horner in the last variable.
    OElem evaluate(std::span<const OElem> point) const;

    MPoly substitute_power_shear(const ShearMap& shear, bool invert = false) const;
    MPoly substitute_linear_shear(const LinearShear& shear) const;
    MPoly rescale(const ScaleMap& scale) const;
    /// x_i -> x0_i + t^j x_i (recentre at x0, shrink to the ball of radius q^{-j}).
    MPoly substitute_affine(std::span<const OElem> x0, std::uint32_t j) const;

    /// Drop stored terms that vanish mod t^{certified}. The result is the
    /// same polynomial at the working precision.
    MPoly pruned_to_certified() const;
    /// Zero every coefficient digit at or above the certified precision and
    /// drop emptied terms: the canonical representative mod t^{certified}.
    MPoly reduced_mod_certified() const;

    /// The coefficients a_0(x'), ..., a_S(x') of f = sum a_s(x') x_n^s, each
    /// in n-1 variables. Reassembling reproduces f exactly.
    std::vector<MPoly> coeffs_in_last_var() const;
    /// Single slice a_s(x') of the decomposition above.
    MPoly coeff_in_last(std::uint32_t s) const;
    static MPoly assemble_in_last_var(RingCtx ring, std::uint32_t nvars,
                                      const std::vector<MPoly>& coeffs);
    /// Reinterpret an (n-1)-variable polynomial in n variables times x_n^power.
    MPoly lift_last_var(std::uint32_t power) const;

    /// Order of vanishing at the origin: minimum |I| over terms certified
    /// nonzero at the working precision.
    std::uint32_t order_at_zero() const;

    std::uint32_t total_degree() const;
    std::uint32_t degree_in_last() const;

    /// Canonical graded-lex serialization; round-trips through the parser and
    /// feeds fingerprinting.
    std::string to_string() const;

  private:
    MPoly substitute(const std::vector<MPoly>& images) const;
    void insert_add(const ExpVec& exps, const OElem& value);

    RingCtx ring_;
    std::uint32_t nvars_;
    int certified_;
    std::map<ExpVec, OElem, GradedLexLess> terms_;
};

/// Evaluation scheme compiled once from a polynomial: nested Horner in the
/// last variable. Used by the counting engine, where one polynomial is
/// evaluated at millions of points.
class HornerForm {
  public:
    explicit HornerForm(const MPoly& f);
    /// Digits of the result below `trunc` are exact.
    OElem eval(const RingCtx& ring, std::span<const OElem> point, int trunc) const;

  private:
    struct Node {
        std::vector<Node> children; // by ascending power of the split variable
        OElem leaf;
        bool is_leaf = false;
    };
    static Node build(const MPoly& f);
    static OElem eval_node(const Node& node, const RingCtx& ring, std::span<const OElem> point,
                           std::uint32_t k, int trunc);
    Node root_;
    std::uint32_t nvars_;
};

} // namespace lctf
