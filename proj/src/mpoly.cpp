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

#include "mpoly.hpp"

#include <algorithm>
#include <numeric>

namespace lctf {

namespace {
constexpr std::size_t kMaxTerms = 2'000'000;

std::uint64_t total_of(const ExpVec& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}
} // namespace

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    const std::uint64_t da = total_of(a);
    const std::uint64_t db = total_of(b);
    if (da != db) return da < db;
    return b < a; // within a degree, higher powers of the early variables first
}

MPoly::MPoly(RingCtx ring, std::uint32_t nvars) : MPoly(ring, nvars, ring.precision()) {}

MPoly::MPoly(RingCtx ring, std::uint32_t nvars, int certified)
    : ring_(ring), nvars_(nvars), certified_(certified) {
    if (certified_ < 1 || certified_ > ring_.precision())
        fail(Errc::precision_exhausted, "certified precision outside [1, M]");
}

MPoly MPoly::constant(RingCtx ring, std::uint32_t nvars, const OElem& value) {
    MPoly f(ring, nvars);
    f.insert_add(ExpVec(nvars, 0), value);
    return f;
}

MPoly MPoly::variable(RingCtx ring, std::uint32_t nvars, std::uint32_t index) {
    if (index >= nvars) fail(Errc::usage, "variable index out of range");
    ExpVec e(nvars, 0);
    e[index] = 1;
    return monomial(ring, nvars, std::move(e), ring.one());
}

MPoly MPoly::monomial(RingCtx ring, std::uint32_t nvars, ExpVec exps, const OElem& coeff) {
    if (exps.size() != nvars) fail(Errc::internal, "exponent vector length mismatch");
    MPoly f(ring, nvars);
    f.insert_add(exps, coeff);
    return f;
}

OElem MPoly::coeff(const ExpVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? ring_.zero() : it->second;
}

MPoly MPoly::with_certified(int certified) const {
    MPoly f = *this;
    if (certified < 1) fail(Errc::precision_exhausted, "certified precision dropped below 1");
    f.certified_ = std::min(certified, ring_.precision());
    return f;
}

void MPoly::insert_add(const ExpVec& exps, const OElem& value) {
    if (exps.size() != nvars_) fail(Errc::internal, "exponent vector length mismatch");
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        if (!ring_.is_zero(value)) {
            if (terms_.size() >= kMaxTerms) fail(Errc::cap_exceeded, "term budget exceeded");
            terms_.emplace(exps, value);
        }
        return;
    }
    it->second = ring_.add(it->second, value);
    if (ring_.is_zero(it->second)) terms_.erase(it);
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_ || !a.ring_.same(b.ring_)) fail(Errc::internal, "mixed polynomial contexts");
    MPoly r = a;
    r.certified_ = std::min(a.certified_, b.certified_);
    for (const auto& [e, c] : b.terms_) r.insert_add(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = ring_.neg(c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.nvars_ != b.nvars_ || !a.ring_.same(b.ring_)) fail(Errc::internal, "mixed polynomial contexts");
    MPoly r(a.ring_, a.nvars_, std::min(a.certified_, b.certified_));
    ExpVec e(a.nvars_, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::uint32_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.insert_add(e, a.ring_.mul(ca, cb));
        }
    }
    return r;
}

MPoly MPoly::scaled(const OElem& c) const {
    MPoly r(ring_, nvars_, certified_);
    for (const auto& [e, v] : terms_) r.insert_add(e, ring_.mul(v, c));
    return r;
}

MPoly MPoly::times_tpow(int s) const {
    MPoly r(ring_, nvars_, certified_);
    for (const auto& [e, v] : terms_) {
        if (s >= ring_.precision()) break;
        r.insert_add(e, ring_.shift_up(v, s));
    }
    return r;
}

MPoly MPoly::pow(std::uint64_t n) const {
    MPoly result = MPoly::constant(ring_, nvars_, ring_.one()).with_certified(certified_);
    MPoly acc = *this;
    while (n != 0) {
        if (n & 1) result = result * acc;
        n >>= 1;
        if (n != 0) acc = acc * acc;
    }
    return result;
}

bool MPoly::is_zero_at_precision() const {
    for (const auto& [e, c] : terms_) {
        const Valuation v = ring_.val(c);
        if (v.finite && v.value < certified_) return false;
    }
    return true;
}

Valuation MPoly::gauss_val() const {
    std::int32_t best = certified_;
    for (const auto& [e, c] : terms_) {
        const Valuation v = ring_.val(c);
        if (v.finite && v.value < best) best = v.value;
    }
    return best < certified_ ? Valuation::fin(best) : Valuation::at_least(certified_);
}

OElem MPoly::evaluate(std::span<const OElem> point) const {
    if (point.size() != nvars_) fail(Errc::usage, "evaluation point arity mismatch");
    return HornerForm(*this).eval(ring_, point, ring_.precision());
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    // Powers of each image are memoized; exponents at desk scale are small.
    std::vector<std::map<std::uint32_t, MPoly>> powers(nvars_);
    MPoly r(ring_, nvars_, certified_);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(ring_, nvars_, c).with_certified(certified_);
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            auto it = powers[i].find(e[i]);
            if (it == powers[i].end()) it = powers[i].emplace(e[i], images[i].pow(e[i])).first;
            term = term * it->second;
        }
        r = r + term;
    }
    return r.with_certified(certified_);
}

MPoly MPoly::substitute_power_shear(const ShearMap& shear, bool invert) const {
    if (nvars_ < 2) fail(Errc::usage, "power shear needs at least two variables");
    if (shear.d.size() != nvars_ - 1) fail(Errc::usage, "shear exponent count mismatch");
    std::vector<MPoly> images;
    images.reserve(nvars_);
    const OElem sign = invert ? ring_.neg(ring_.one()) : ring_.one();
    for (std::uint32_t i = 0; i + 1 < nvars_; ++i) {
        if (shear.d[i] < 1) fail(Errc::usage, "shear exponents must be >= 1");
        ExpVec e(nvars_, 0);
        e[nvars_ - 1] = shear.d[i];
        images.push_back(MPoly::variable(ring_, nvars_, i) + MPoly::monomial(ring_, nvars_, e, sign));
    }
    images.push_back(MPoly::variable(ring_, nvars_, nvars_ - 1));
    return substitute(images);
}

MPoly MPoly::substitute_linear_shear(const LinearShear& shear) const {
    if (shear.c.size() != nvars_ - 1) fail(Errc::usage, "linear shear constant count mismatch");
    std::vector<MPoly> images;
    images.reserve(nvars_);
    for (std::uint32_t i = 0; i + 1 < nvars_; ++i) {
        if (!val_is_zero(ring_.val(shear.c[i]))) fail(Errc::not_a_unit, "linear shear constants must be units");
        ExpVec e(nvars_, 0);
        e[nvars_ - 1] = 1;
        images.push_back(MPoly::variable(ring_, nvars_, i) +
                         MPoly::monomial(ring_, nvars_, e, shear.c[i]));
    }
    images.push_back(MPoly::variable(ring_, nvars_, nvars_ - 1));
    return substitute(images);
}

MPoly MPoly::rescale(const ScaleMap& scale) const {
    if (scale.a.size() != nvars_) fail(Errc::usage, "scale exponent count mismatch");
    const int new_certified = certified_ - static_cast<int>(scale.b);
    if (new_certified < 1)
        fail(Errc::precision_exhausted, "rescale by t^-" + std::to_string(scale.b) +
                                            " exhausts certified precision " + std::to_string(certified_));
    MPoly r(ring_, nvars_, new_certified);
    for (const auto& [e, c] : terms_) {
        std::uint64_t gain = 0;
        for (std::uint32_t i = 0; i < nvars_; ++i)
            gain += static_cast<std::uint64_t>(scale.a[i]) * e[i];
        const std::int64_t net = static_cast<std::int64_t>(gain) - scale.b;
        if (net >= ring_.precision()) continue; // the whole term is 0 mod t^M
        OElem moved;
        if (net >= 0) {
            moved = ring_.shift_up(c, static_cast<int>(net));
        } else {
            // Exact division: t-valuation must cover the deficit.
            moved = ring_.shift_down_exact(c, static_cast<int>(-net));
        }
        r.insert_add(e, moved);
    }
    return r;
}

MPoly MPoly::substitute_affine(std::span<const OElem> x0, std::uint32_t j) const {
    if (x0.size() != nvars_) fail(Errc::usage, "base point arity mismatch");
    std::vector<MPoly> images;
    images.reserve(nvars_);
    for (std::uint32_t i = 0; i < nvars_; ++i) {
        MPoly xi = MPoly::variable(ring_, nvars_, i).times_tpow(static_cast<int>(j));
        images.push_back(MPoly::constant(ring_, nvars_, x0[i]) + xi);
    }
    return substitute(images);
}

MPoly MPoly::pruned_to_certified() const {
    MPoly r(ring_, nvars_, certified_);
    for (const auto& [e, c] : terms_) {
        const Valuation v = ring_.val(c);
        if (v.finite && v.value < certified_) r.terms_.emplace(e, c);
    }
    return r;
}

MPoly MPoly::reduced_mod_certified() const {
    MPoly r(ring_, nvars_, certified_);
    for (const auto& [e, c] : terms_) {
        OElem cut = c;
        for (int i = certified_; i < kMaxPrecision; ++i) cut.c[i] = 0;
        if (!ring_.is_zero(cut)) r.terms_.emplace(e, cut);
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in_last_var() const {
    if (nvars_ < 1) fail(Errc::usage, "no variable to split on");
    std::vector<MPoly> out;
    for (const auto& [e, c] : terms_) {
        const std::uint32_t s = e[nvars_ - 1];
        while (out.size() <= s) out.emplace_back(ring_, nvars_ - 1, certified_);
        ExpVec rest(e.begin(), e.end() - 1);
        out[s].insert_add(rest, c);
    }
    if (out.empty()) out.emplace_back(ring_, nvars_ - 1, certified_);
    return out;
}

MPoly MPoly::coeff_in_last(std::uint32_t s) const {
    if (nvars_ < 1) fail(Errc::usage, "no variable to split on");
    MPoly out(ring_, nvars_ - 1, certified_);
    for (const auto& [e, c] : terms_) {
        if (e[nvars_ - 1] != s) continue;
        ExpVec rest(e.begin(), e.end() - 1);
        out.insert_add(rest, c);
    }
    return out;
}

MPoly MPoly::assemble_in_last_var(RingCtx ring, std::uint32_t nvars,
                                  const std::vector<MPoly>& coeffs) {
    MPoly r(ring, nvars);
    int certified = ring.precision();
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
        certified = std::min(certified, coeffs[s].certified());
        for (const auto& [e, c] : coeffs[s].terms()) {
            ExpVec full = e;
            full.push_back(static_cast<std::uint32_t>(s));
            r.insert_add(full, c);
        }
    }
    return r.with_certified(certified);
}

MPoly MPoly::lift_last_var(std::uint32_t power) const {
    MPoly r(ring_, nvars_ + 1, certified_);
    for (const auto& [e, c] : terms_) {
        ExpVec full = e;
        full.push_back(power);
        r.insert_add(full, c);
    }
    return r;
}

std::uint32_t MPoly::order_at_zero() const {
    // Graded-lex iteration visits the lowest total degree first.
    for (const auto& [e, c] : terms_) {
        const Valuation v = ring_.val(c);
        if (v.finite && v.value < certified_) return static_cast<std::uint32_t>(total_of(e));
    }
    fail(Errc::indeterminate_input, "order at zero of a polynomial that vanishes at the working precision");
}

std::uint32_t MPoly::total_degree() const {
    std::uint64_t best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, total_of(e));
    return static_cast<std::uint32_t>(best);
}

std::uint32_t MPoly::degree_in_last() const {
    std::uint32_t best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[nvars_ - 1]);
    return best;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string coef = ring_.to_string(c);
        if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
        std::string vars;
        for (std::uint32_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "x" + std::to_string(i + 1);
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += coef;
        } else if (coef == "1") {
            out += vars;
        } else {
            out += coef + "*" + vars;
        }
    }
    return out;
}

HornerForm::HornerForm(const MPoly& f) : root_(build(f)), nvars_(f.nvars()) {}

HornerForm::Node HornerForm::build(const MPoly& f) {
    Node node;
    if (f.nvars() == 0) {
        node.is_leaf = true;
        node.leaf = f.coeff(ExpVec{});
        return node;
    }
    for (const MPoly& coeff : f.coeffs_in_last_var()) node.children.push_back(build(coeff));
    return node;
}

OElem HornerForm::eval(const RingCtx& ring, std::span<const OElem> point, int trunc) const {
    if (point.size() != nvars_) fail(Errc::usage, "evaluation point arity mismatch");
    return eval_node(root_, ring, point, nvars_, trunc);
}

OElem HornerForm::eval_node(const Node& node, const RingCtx& ring, std::span<const OElem> point,
                            std::uint32_t k, int trunc) {
    if (node.is_leaf) return node.leaf;
    const OElem& x = point[k - 1];
    OElem acc = eval_node(node.children.back(), ring, point, k - 1, trunc);
    for (std::size_t s = node.children.size() - 1; s-- > 0;) {
        acc = ring.mul_trunc(acc, x, trunc);
        acc = ring.add(acc, eval_node(node.children[s], ring, point, k - 1, trunc));
    }
    return acc;
}

} // namespace lctf
