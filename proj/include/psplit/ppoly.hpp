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

#ifndef PSPLIT_PPOLY_HPP
#define PSPLIT_PPOLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psplit/field.hpp"
#include "psplit/laurent.hpp"

namespace psplit {

/// coeff * T_var^(p^height)
struct Term {
    std::size_t var;
    unsigned height;
    RatFn coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// A p-polynomial P = sum_i P_i(T_i) over k = F_q(s) in `arity` variables.
///
/// Terms are kept sorted by (var, height), at most one per pair, with zero
/// coefficients dropped. A variable that loses all of its terms still counts
/// towards the arity.
class PPolynomial {
   public:
    PPolynomial(FieldPtr field, std::size_t arity, std::vector<Term> terms);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t arity() const noexcept { return arity_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Contains a nonzero monomial of degree 1.
    bool is_separable() const noexcept;
    bool appears(std::size_t var) const noexcept { return max_height(var).has_value(); }
    std::optional<unsigned> max_height(std::size_t var) const noexcept;
    /// Coefficient of T_var^(p^height), zero when absent.
    RatFn coeff(std::size_t var, unsigned height) const;
    /// The variable occurs, and only through its degree-1 monomial.
    bool occurs_only_linearly(std::size_t var) const noexcept;

    RatFn evaluate(std::span<const RatFn> point) const;
    LaurentSeries evaluate(std::span<const LaurentSeries> point) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

    friend bool operator==(const PPolynomial& a, const PPolynomial& b) noexcept {
        return a.arity_ == b.arity_ && a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
    }

   private:
    FieldPtr field_;
    std::size_t arity_;
    std::vector<Term> terms_;
};

struct DiagonalEntry {
    std::size_t var;
    RatFn coeff;
    unsigned height;
    friend bool operator==(const DiagonalEntry&, const DiagonalEntry&) = default;
};

/// sum_i c_i T_i^(p^m_i), one entry per variable of the parent polynomial.
struct DiagonalForm {
    FieldPtr field;
    std::vector<DiagonalEntry> entries;

    bool equal_heights() const noexcept;
    unsigned min_height() const noexcept;
    /// `values[i]` is substituted for entry i (not for variable entries[i].var).
    RatFn evaluate(std::span<const RatFn> values) const;
    friend bool operator==(const DiagonalForm& a, const DiagonalForm& b) noexcept { return a.entries == b.entries; }
};

/// Sum of the leading terms of each P_i. Throws EmptyPolynomial for P = 0.
DiagonalForm principal_part(const PPolynomial& P);

/// coeff * T_source^(p^height), one summand of an additive expression.
struct ExprTerm {
    std::size_t source;
    unsigned height;
    RatFn coeff;
    friend bool operator==(const ExprTerm&, const ExprTerm&) = default;
};

/// An invertible elementary change of variables.
///   Shear: T_target <- T_target + coeff * T_source^(p^height), target != source
///   Scale: T_target <- coeff * T_target, coeff != 0
struct ElementaryStep {
    enum class Kind { Shear, Scale };
    Kind kind;
    std::size_t target;
    std::size_t source;
    unsigned height;
    RatFn coeff;

    ElementaryStep inverse() const;
    friend bool operator==(const ElementaryStep&, const ElementaryStep&) = default;
};

/// Additive change of variables T_i <- sigma_i(T). Invertible substitutions
/// are exactly those assembled from a recorded chain of elementary steps.
class Substitution {
   public:
    Substitution(FieldPtr field, std::vector<std::vector<ExprTerm>> exprs);

    static Substitution identity(FieldPtr field, std::size_t arity);
    static Substitution elementary(FieldPtr field, std::size_t arity, const ElementaryStep& step);
    /// The substitution obtained by applying `steps` in order to a polynomial.
    static Substitution from_chain(FieldPtr field, std::size_t arity, std::vector<ElementaryStep> steps);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t arity() const noexcept { return exprs_.size(); }
    const std::vector<std::vector<ExprTerm>>& exprs() const noexcept { return exprs_; }
    bool is_invertible() const noexcept { return chain_.has_value(); }
    const std::optional<std::vector<ElementaryStep>>& chain() const noexcept { return chain_; }
    /// Throws InvalidInput for substitutions without a recorded chain.
    Substitution inverse() const;

    std::vector<RatFn> apply(std::span<const RatFn> point) const;
    std::vector<LaurentSeries> apply(std::span<const LaurentSeries> point) const;

    /// x -> outer(inner(x)), so that substitute(substitute(P, outer), inner)
    /// equals substitute(P, compose(outer, inner)).
    friend Substitution compose(const Substitution& outer, const Substitution& inner);
    friend bool operator==(const Substitution& a, const Substitution& b) noexcept { return a.exprs_ == b.exprs_; }

   private:
    FieldPtr field_;
    std::vector<std::vector<ExprTerm>> exprs_;
    std::optional<std::vector<ElementaryStep>> chain_;
};

/// Q with Q(x) = P(sigma(x)). Throws ArityMismatch.
PPolynomial substitute(const PPolynomial& P, const Substitution& sigma);

}  // namespace psplit

#endif
