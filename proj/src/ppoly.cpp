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

#include "psplit/ppoly.hpp"

#include <algorithm>
#include <map>

namespace psplit {

namespace {

using Key = std::pair<std::size_t, unsigned>;

void collect(std::map<Key, RatFn>& acc, Key key, const RatFn& c) {
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, c);
    else
        it->second += c;
}

std::vector<ExprTerm> normalized(const FieldPtr& field, const std::vector<ExprTerm>& in) {
    std::map<Key, RatFn> acc;
    for (const auto& t : in) {
        require_same_field(field, t.coeff.field());
        checked_ppow(field->p(), t.height);
        collect(acc, {t.source, t.height}, t.coeff);
    }
    std::vector<ExprTerm> out;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) out.push_back({k.first, k.second, std::move(c)});
    return out;
}

std::string var_name(const std::vector<std::string>& names, std::size_t i) {
    return i < names.size() ? names[i] : "x" + std::to_string(i);
}

}  // namespace

PPolynomial::PPolynomial(FieldPtr field, std::size_t arity, std::vector<Term> terms)
    : field_(std::move(field)), arity_(arity) {
    std::map<Key, RatFn> acc;
    for (const auto& t : terms) {
        if (t.var >= arity_)
            fail(ErrorCode::ArityMismatch, "term variable index " + std::to_string(t.var) + " exceeds the arity");
        require_same_field(field_, t.coeff.field());
        checked_ppow(field_->p(), t.height);
        collect(acc, {t.var, t.height}, t.coeff);
    }
    for (auto& [k, c] : acc)
        if (!c.is_zero()) terms_.push_back({k.first, k.second, std::move(c)});
}

bool PPolynomial::is_separable() const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.height == 0; });
}

std::optional<unsigned> PPolynomial::max_height(std::size_t var) const noexcept {
    std::optional<unsigned> h;
    for (const auto& t : terms_)
        if (t.var == var) h = t.height;
    return h;
}

RatFn PPolynomial::coeff(std::size_t var, unsigned height) const {
    for (const auto& t : terms_)
        if (t.var == var && t.height == height) return t.coeff;
    return RatFn(field_);
}

bool PPolynomial::occurs_only_linearly(std::size_t var) const noexcept {
    const auto h = max_height(var);
    return h && *h == 0;
}

RatFn PPolynomial::evaluate(std::span<const RatFn> point) const {
    if (point.size() != arity_) fail(ErrorCode::ArityMismatch, "evaluation point has the wrong length");
    RatFn acc(field_);
    for (const auto& t : terms_) acc += t.coeff * point[t.var].frobenius(t.height);
    return acc;
}

LaurentSeries PPolynomial::evaluate(std::span<const LaurentSeries> point) const {
    if (point.size() != arity_) fail(ErrorCode::ArityMismatch, "evaluation point has the wrong length");
    std::optional<LaurentSeries> acc;
    for (const auto& t : terms_) {
        LaurentSeries term = point[t.var].frobenius(t.height).scaled(t.coeff);
        acc = acc ? *acc + term : term;
    }
    if (acc) return *acc;
    std::int64_t end = default_precision;
    for (const auto& a : point) end = std::min(end, a.end());
    return LaurentSeries::zero(field_, std::min<std::int64_t>(0, end - 1), end);
}

std::string PPolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest degree first within each variable.
    std::vector<Term> sorted = terms_;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Term& a, const Term& b) {
        return a.var != b.var ? a.var < b.var : a.height > b.height;
    });
    for (const auto& t : sorted) {
        if (!out.empty()) out += " + ";
        if (!t.coeff.is_one()) {
            const std::string cs = t.coeff.to_string();
            const bool bare = t.coeff.is_polynomial() && cs.find('+') == std::string::npos;
            out += (bare ? cs : "(" + cs + ")") + "*";
        }
        out += var_name(names, t.var);
        if (t.height > 0) out += "^" + std::to_string(checked_ppow(field_->p(), t.height));
    }
    return out;
}

bool DiagonalForm::equal_heights() const noexcept {
    return std::all_of(entries.begin(), entries.end(),
                       [&](const DiagonalEntry& e) { return e.height == entries.front().height; });
}

unsigned DiagonalForm::min_height() const noexcept {
    unsigned h = entries.empty() ? 0 : entries.front().height;
    for (const auto& e : entries) h = std::min(h, e.height);
    return h;
}

RatFn DiagonalForm::evaluate(std::span<const RatFn> values) const {
    if (values.size() != entries.size()) fail(ErrorCode::ArityMismatch, "form evaluated at a point of wrong length");
    RatFn acc(field);
    for (std::size_t i = 0; i < entries.size(); ++i) acc += entries[i].coeff * values[i].frobenius(entries[i].height);
    return acc;
}

DiagonalForm principal_part(const PPolynomial& P) {
    if (P.is_zero()) fail(ErrorCode::EmptyPolynomial, "the zero polynomial has no principal part");
    DiagonalForm form{P.field(), {}};
    // Terms are sorted by (var, height): the last term of each variable leads.
    const auto& terms = P.terms();
    for (std::size_t i = 0; i < terms.size(); ++i)
        if (i + 1 == terms.size() || terms[i + 1].var != terms[i].var)
            form.entries.push_back({terms[i].var, terms[i].coeff, terms[i].height});
    return form;
}

// ---------------------------------------------------------------- Substitution

ElementaryStep ElementaryStep::inverse() const {
    ElementaryStep inv = *this;
    inv.coeff = kind == Kind::Shear ? -coeff : coeff.inverse();
    return inv;
}

Substitution::Substitution(FieldPtr field, std::vector<std::vector<ExprTerm>> exprs) : field_(std::move(field)) {
    exprs_.reserve(exprs.size());
    for (const auto& e : exprs) {
        for (const auto& t : e)
            if (t.source >= exprs.size()) fail(ErrorCode::ArityMismatch, "substitution refers to a missing variable");
        exprs_.push_back(normalized(field_, e));
    }
}

Substitution Substitution::identity(FieldPtr field, std::size_t arity) {
    std::vector<std::vector<ExprTerm>> exprs(arity);
    for (std::size_t i = 0; i < arity; ++i) exprs[i].push_back({i, 0, RatFn(field, 1)});
    Substitution s(field, std::move(exprs));
    s.chain_ = std::vector<ElementaryStep>{};
    return s;
}

Substitution Substitution::elementary(FieldPtr field, std::size_t arity, const ElementaryStep& step) {
    if (step.target >= arity || step.source >= arity)
        fail(ErrorCode::ArityMismatch, "elementary step refers to a missing variable");
    std::vector<std::vector<ExprTerm>> exprs(arity);
    for (std::size_t i = 0; i < arity; ++i) exprs[i].push_back({i, 0, RatFn(field, 1)});
    if (step.kind == ElementaryStep::Kind::Shear) {
        if (step.target == step.source) fail(ErrorCode::InvalidInput, "a shear must mix two distinct variables");
        exprs[step.target].push_back({step.source, step.height, step.coeff});
    } else {
        if (step.coeff.is_zero()) fail(ErrorCode::InvalidInput, "a scaling step needs a nonzero factor");
        exprs[step.target] = {{step.target, 0, step.coeff}};
    }
    Substitution s(field, std::move(exprs));
    s.chain_ = std::vector<ElementaryStep>{step};
    return s;
}

Substitution Substitution::from_chain(FieldPtr field, std::size_t arity, std::vector<ElementaryStep> steps) {
    Substitution acc = identity(field, arity);
    for (const auto& step : steps) acc = compose(acc, elementary(field, arity, step));
    return acc;
}

Substitution Substitution::inverse() const {
    if (!chain_) fail(ErrorCode::InvalidInput, "substitution carries no invertible chain");
    std::vector<ElementaryStep> inv;
    for (auto it = chain_->rbegin(); it != chain_->rend(); ++it) inv.push_back(it->inverse());
    return from_chain(field_, arity(), std::move(inv));
}

std::vector<RatFn> Substitution::apply(std::span<const RatFn> point) const {
    if (point.size() != arity()) fail(ErrorCode::ArityMismatch, "substitution applied to a point of wrong length");
    std::vector<RatFn> out;
    out.reserve(arity());
    for (const auto& e : exprs_) {
        RatFn acc(field_);
        for (const auto& t : e) acc += t.coeff * point[t.source].frobenius(t.height);
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<LaurentSeries> Substitution::apply(std::span<const LaurentSeries> point) const {
    if (point.size() != arity()) fail(ErrorCode::ArityMismatch, "substitution applied to a point of wrong length");
    std::int64_t end = default_precision;
    for (const auto& a : point) end = std::min(end, a.end());
    std::vector<LaurentSeries> out;
    out.reserve(arity());
    for (const auto& e : exprs_) {
        std::optional<LaurentSeries> acc;
        for (const auto& t : e) {
            LaurentSeries term = point[t.source].frobenius(t.height).scaled(t.coeff);
            acc = acc ? *acc + term : term;
        }
        out.push_back(acc ? *acc : LaurentSeries::zero(field_, std::min<std::int64_t>(0, end - 1), end));
    }
    return out;
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
    if (outer.arity() != inner.arity()) fail(ErrorCode::ArityMismatch, "composing substitutions of different arity");
    require_same_field(outer.field_, inner.field_);
    std::vector<std::vector<ExprTerm>> exprs(outer.arity());
    for (std::size_t i = 0; i < outer.arity(); ++i)
        for (const auto& a : outer.exprs_[i])
            for (const auto& b : inner.exprs_[a.source])
                exprs[i].push_back({b.source, a.height + b.height, a.coeff * b.coeff.frobenius(a.height)});
    Substitution s(outer.field_, std::move(exprs));
    if (outer.chain_ && inner.chain_) {
        std::vector<ElementaryStep> chain = *outer.chain_;
        chain.insert(chain.end(), inner.chain_->begin(), inner.chain_->end());
        s.chain_ = std::move(chain);
    }
    return s;
}

PPolynomial substitute(const PPolynomial& P, const Substitution& sigma) {
    if (sigma.arity() != P.arity())
        fail(ErrorCode::ArityMismatch, "substitution arity " + std::to_string(sigma.arity()) +
                                           " does not match polynomial arity " + std::to_string(P.arity()));
    require_same_field(P.field(), sigma.field());
    std::vector<Term> out;
    for (const auto& t : P.terms())
        for (const auto& e : sigma.exprs()[t.var])
            out.push_back({e.source, t.height + e.height, t.coeff * e.coeff.frobenius(t.height)});
    return PPolynomial(P.field(), P.arity(), std::move(out));
}

}  // namespace psplit
