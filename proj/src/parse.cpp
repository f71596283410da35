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

#include "psplit/parse.hpp"

#include <cctype>
#include <map>

namespace psplit {

namespace {

// Exact Laurent polynomial in t with coefficients in k.
struct Exact {
    std::map<std::int64_t, RatFn> terms;

    void add_term(std::int64_t e, const RatFn& c) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!c.is_zero()) terms.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
};

constexpr std::int64_t max_exponent = std::int64_t{1} << 16;

class Parser {
   public:
    Parser(std::string_view text, FieldPtr field, bool series)
        : text_(text), field_(std::move(field)), series_(series) {}

    Exact parse() {
        Exact v = expr();
        skip();
        if (pos_ != text_.size()) error("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

   private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Exact constant(const RatFn& c) const {
        Exact e;
        e.add_term(0, c);
        return e;
    }

    Exact add(const Exact& a, const Exact& b, bool negate) const {
        Exact r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, negate ? -c : c);
        return r;
    }

    Exact mul(const Exact& a, const Exact& b) const {
        Exact r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) r.add_term(ea + eb, ca * cb);
        return r;
    }

    Exact monomial_inverse(const Exact& a) {
        if (a.terms.empty()) fail(ErrorCode::DivisionByZero, "division by zero in literal \"" + std::string(text_) + "\"");
        if (a.terms.size() != 1) error("only single-term divisors c*t^e are supported");
        const auto& [e, c] = *a.terms.begin();
        Exact r;
        r.add_term(-e, c.inverse());
        return r;
    }

    Exact expr() {
        Exact v = term();
        for (;;) {
            if (accept('+'))
                v = add(v, term(), false);
            else if (accept('-'))
                v = add(v, term(), true);
            else
                return v;
        }
    }

    Exact term() {
        Exact v = unary();
        for (;;) {
            if (accept('*'))
                v = mul(v, unary());
            else if (accept('/'))
                v = mul(v, monomial_inverse(unary()));
            else
                return v;
        }
    }

    Exact unary() {
        if (accept('-')) {
            Exact v = unary();
            for (auto& [e, c] : v.terms) c = -c;
            return v;
        }
        return power();
    }

    Exact power() {
        Exact base = primary();
        if (!accept('^')) return base;
        skip();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            if (!series_) error("negative exponents are not part of the rational-function grammar");
            negative = true;
            ++pos_;
        }
        const std::int64_t n = integer();
        if (n > max_exponent) error("exponent too large");
        if (negative) base = monomial_inverse(base);
        Exact r = constant(RatFn(field_, 1));
        Exact b = base;
        for (std::int64_t k = n; k; k >>= 1) {
            if (k & 1) r = mul(r, b);
            if (k > 1) b = mul(b, b);
        }
        return r;
    }

    std::int64_t integer() {
        skip();
        const std::size_t start = pos_;
        std::int64_t n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            n = n * 10 + (text_[pos_] - '0');
            if (n > (std::int64_t{1} << 40)) error("integer literal too large");
            ++pos_;
        }
        if (pos_ == start) error("expected an integer");
        return n;
    }

    Exact primary() {
        skip();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(RatFn(field_, integer()));
        if (c == '(') {
            ++pos_;
            Exact v = expr();
            if (!accept(')')) error("expected ')'");
            return v;
        }
        ++pos_;
        if (c == 's') return constant(RatFn::s(field_));
        if (c == 'w') {
            if (field_->degree() == 1) error("'w' is only defined when q > p");
            return constant(RatFn::constant(field_, field_->generator()));
        }
        if (c == 't') {
            if (!series_) error("'t' is not part of the rational-function grammar");
            Exact v;
            v.add_term(1, RatFn(field_, 1));
            return v;
        }
        --pos_;
        error("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    FieldPtr field_;
    bool series_;
    std::size_t pos_ = 0;
};

}  // namespace

RatFn parse_ratfn(std::string_view text, const FieldPtr& field) {
    Exact v = Parser(text, field, false).parse();
    if (v.terms.empty()) return RatFn(field);
    return v.terms.begin()->second;
}

LaurentSeries parse_series(std::string_view text, const FieldPtr& field, std::int64_t end) {
    Exact v = Parser(text, field, true).parse();
    return LaurentSeries::from_terms(field, v.terms, end);
}

}  // namespace psplit
