/*
   Copyright 2026 The psplit Authors

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

#include "psplit/laurent.hpp"

#include <algorithm>

namespace psplit {

LaurentSeries::LaurentSeries(FieldPtr field, std::int64_t anchor, std::vector<RatFn> coeffs)
    : field_(std::move(field)), anchor_(anchor), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(ErrorCode::PrecisionExceeded, "Laurent series with an empty window");
    for (const auto& c : coeffs_) require_same_field(field_, c.field());
}

LaurentSeries LaurentSeries::zero(FieldPtr field, std::int64_t anchor, std::int64_t end) {
    if (end <= anchor) fail(ErrorCode::PrecisionExceeded, "empty window for zero series");
    RatFn z(field);
    return LaurentSeries(field, anchor, std::vector<RatFn>(static_cast<std::size_t>(end - anchor), z));
}

LaurentSeries LaurentSeries::monomial(const RatFn& c, std::int64_t exponent, std::int64_t end) {
    std::map<std::int64_t, RatFn> terms;
    terms.emplace(exponent, c);
    return from_terms(c.field(), terms, end);
}

LaurentSeries LaurentSeries::from_terms(FieldPtr field, const std::map<std::int64_t, RatFn>& terms,
                                        std::int64_t end) {
    std::int64_t anchor = 0;
    for (const auto& [e, c] : terms)
        if (!c.is_zero()) {
            anchor = std::min(anchor, e);
            break;
        }
    if (end <= anchor) fail(ErrorCode::PrecisionExceeded, "requested precision does not reach the leading term");
    std::vector<RatFn> v(static_cast<std::size_t>(end - anchor), RatFn(field));
    for (const auto& [e, c] : terms)
        if (e >= anchor && e < end) v[static_cast<std::size_t>(e - anchor)] = c;
    return LaurentSeries(std::move(field), anchor, std::move(v));
}

std::optional<std::int64_t> LaurentSeries::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return anchor_ + static_cast<std::int64_t>(i);
    return std::nullopt;
}

std::int64_t LaurentSeries::valuation_lower_bound() const noexcept { return valuation().value_or(end()); }

const RatFn& LaurentSeries::coeff_at(std::int64_t j) const {
    if (j < anchor_ || j >= end())
        fail(ErrorCode::PrecisionExceeded, "coefficient of t^" + std::to_string(j) + " lies outside the window [" +
                                               std::to_string(anchor_) + ", " + std::to_string(end()) + ")");
    return coeffs_[static_cast<std::size_t>(j - anchor_)];
}

LaurentSeries LaurentSeries::operator-() const {
    std::vector<RatFn> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return LaurentSeries(field_, anchor_, std::move(v));
}

LaurentSeries LaurentSeries::scaled(const RatFn& c) const {
    std::vector<RatFn> v;
    v.reserve(coeffs_.size());
    for (const auto& a : coeffs_) v.push_back(a * c);
    return LaurentSeries(field_, anchor_, std::move(v));
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a.field_, b.field_);
    const std::int64_t lo = std::min(a.anchor_, b.anchor_);
    const std::int64_t hi = std::min(a.end(), b.end());
    std::vector<RatFn> v(static_cast<std::size_t>(hi - lo), RatFn(a.field_));
    for (std::int64_t j = lo; j < hi; ++j) {
        RatFn& out = v[static_cast<std::size_t>(j - lo)];
        if (j >= a.anchor_) out = a.coeffs_[static_cast<std::size_t>(j - a.anchor_)];
        if (j >= b.anchor_) out += b.coeffs_[static_cast<std::size_t>(j - b.anchor_)];
    }
    return LaurentSeries(a.field_, lo, std::move(v));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_field(a.field_, b.field_);
    const std::int64_t va = a.valuation_lower_bound(), vb = b.valuation_lower_bound();
    // f = F + O(t^Ef), g = G + O(t^Eg): the error of fg has valuation >= min(v(f)+Eg, v(g)+Ef).
    const std::int64_t hi = std::min(va + b.end(), vb + a.end());
    const std::int64_t lo = std::min(va + vb, hi - 1);
    std::vector<RatFn> v(static_cast<std::size_t>(hi - lo), RatFn(a.field_));
    if (a.valuation() && b.valuation()) {
        for (std::int64_t i = va; i < a.end(); ++i) {
            const RatFn& ai = a.coeffs_[static_cast<std::size_t>(i - a.anchor_)];
            if (ai.is_zero()) continue;
            for (std::int64_t j = vb; j < b.end() && i + j < hi; ++j) {
                const RatFn& bj = b.coeffs_[static_cast<std::size_t>(j - b.anchor_)];
                if (bj.is_zero()) continue;
                v[static_cast<std::size_t>(i + j - lo)] += ai * bj;
            }
        }
    }
    return LaurentSeries(a.field_, lo, std::move(v));
}

LaurentSeries LaurentSeries::inverse() const {
    const auto v = valuation();
    if (!v) fail(ErrorCode::DivisionByZero, "inverse of a series whose tracked window is zero");
    const std::size_t n = static_cast<std::size_t>(end() - *v);
    const std::size_t off = static_cast<std::size_t>(*v - anchor_);
    const RatFn u0_inv = coeffs_[off].inverse();
    std::vector<RatFn> b(n, RatFn(field_));
    b[0] = u0_inv;
    for (std::size_t i = 1; i < n; ++i) {
        RatFn acc(field_);
        for (std::size_t j = 1; j <= i; ++j) {
            const RatFn& uj = coeffs_[off + j];
            if (!uj.is_zero() && !b[i - j].is_zero()) acc += uj * b[i - j];
        }
        b[i] = -(acc * u0_inv);
    }
    return LaurentSeries(field_, -*v, std::move(b));
}

LaurentSeries LaurentSeries::frobenius(unsigned m) const {
    const std::int64_t k = static_cast<std::int64_t>(checked_ppow(field_->p(), m));
    std::vector<RatFn> v(coeffs_.size() * static_cast<std::size_t>(k), RatFn(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) v[i * static_cast<std::size_t>(k)] = coeffs_[i].frobenius(m);
    return LaurentSeries(field_, anchor_ * k, std::move(v));
}

LaurentSeries LaurentSeries::pow(std::uint64_t n) const {
    if (n == 0) return monomial(RatFn(field_, 1), 0, std::max<std::int64_t>(1, end() - valuation_lower_bound()));
    LaurentSeries result = *this;
    LaurentSeries base = *this;
    --n;
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

LaurentSeries LaurentSeries::truncated(std::int64_t new_end) const {
    if (new_end > end()) fail(ErrorCode::PrecisionExceeded, "cannot widen a truncated window");
    if (new_end <= anchor_) fail(ErrorCode::PrecisionExceeded, "truncation leaves an empty window");
    return LaurentSeries(field_, anchor_,
                         std::vector<RatFn>(coeffs_.begin(), coeffs_.begin() + (new_end - anchor_)));
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
    const std::int64_t lo = std::min(anchor_, other.anchor_);
    const std::int64_t hi = std::min(end(), other.end());
    const RatFn z(field_);
    for (std::int64_t j = lo; j < hi; ++j) {
        const RatFn& x = j >= anchor_ ? coeffs_[static_cast<std::size_t>(j - anchor_)] : z;
        const RatFn& y = j >= other.anchor_ ? other.coeffs_[static_cast<std::size_t>(j - other.anchor_)] : z;
        if (!(x == y)) return false;
    }
    return true;
}

std::string LaurentSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const RatFn& c = coeffs_[i];
        if (c.is_zero()) continue;
        const std::int64_t e = anchor_ + static_cast<std::int64_t>(i);
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        const bool bare = c.is_polynomial() && cs.find('+') == std::string::npos;
        if (e == 0) {
            out += cs;
            continue;
        }
        if (!c.is_one()) out += (bare ? cs : "(" + cs + ")") + "*";
        out += "t";
        if (e != 1) out += "^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(end()) + ")";
}

}  // namespace psplit
