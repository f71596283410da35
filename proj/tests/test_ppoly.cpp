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

#include <gtest/gtest.h>

#include "psplit/ppoly.hpp"
#include "support.hpp"

using namespace psplit;
using namespace psplit::testing;

namespace {

PPolynomial aniso_poly(const FieldPtr& F) {
    return PPolynomial(F, 2, {{0, 1, RatFn(F, 1)}, {0, 0, RatFn(F, 1)}, {1, 1, RatFn::s(F)}});
}

PPolynomial random_ppoly(const FieldPtr& F, std::mt19937_64& rng, std::size_t arity, unsigned max_height) {
    std::vector<Term> terms;
    for (std::size_t v = 0; v < arity; ++v)
        for (unsigned h = 0; h <= max_height; ++h)
            if (rng() % 2) terms.push_back({v, h, random_ratfn(F, rng, 1)});
    return PPolynomial(F, arity, std::move(terms));
}

}  // namespace

TEST(PPolynomial, NormalizesTerms) {
    auto F = f2();
    PPolynomial P(F, 2, {{1, 1, RatFn::s(F)}, {0, 0, RatFn(F, 1)}, {0, 0, RatFn(F, 1)}, {0, 1, RatFn(F, 1)}});
    // the two x terms cancel in characteristic 2
    ASSERT_EQ(P.terms().size(), 2u);
    EXPECT_EQ(P.terms()[0].var, 0u);
    EXPECT_EQ(P.terms()[0].height, 1u);
    EXPECT_FALSE(P.is_separable());
    EXPECT_THROW(PPolynomial(F, 1, {{1, 0, RatFn(F, 1)}}), Error);
}

TEST(PPolynomial, SeparableAndPrincipalPart) {
    auto F = f2();
    const PPolynomial P = aniso_poly(F);
    EXPECT_TRUE(P.is_separable());
    const DiagonalForm form = principal_part(P);
    ASSERT_EQ(form.entries.size(), 2u);
    EXPECT_EQ(form.entries[0].var, 0u);
    EXPECT_EQ(form.entries[0].height, 1u);
    EXPECT_TRUE(form.entries[0].coeff.is_one());
    EXPECT_EQ(form.entries[1].coeff, RatFn::s(F));
    EXPECT_TRUE(form.equal_heights());
    EXPECT_EQ(P.to_string({"x", "y"}), "x^2 + x + s*y^2");
    EXPECT_THROW(principal_part(PPolynomial(F, 1, {})), Error);
}

TEST(PPolynomial, OccursOnlyLinearly) {
    auto F = f2();
    const PPolynomial P(F, 2, {{1, 0, RatFn(F, 1)}, {0, 1, RatFn(F, 1)}});
    EXPECT_TRUE(P.occurs_only_linearly(1));
    EXPECT_FALSE(P.occurs_only_linearly(0));
}

TEST(PPolynomial, Additive) {
    for (FieldPtr F : {f2(), f3()}) {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 100; ++i) {
            const PPolynomial P = random_ppoly(F, rng, 2, 2);
            std::vector<RatFn> a{random_ratfn(F, rng), random_ratfn(F, rng)};
            std::vector<RatFn> b{random_ratfn(F, rng), random_ratfn(F, rng)};
            std::vector<RatFn> ab{a[0] + b[0], a[1] + b[1]};
            EXPECT_EQ(P.evaluate(ab), P.evaluate(a) + P.evaluate(b));
            // F_p-linear as well
            std::vector<RatFn> two_a{a[0] * RatFn(F, 2), a[1] * RatFn(F, 2)};
            EXPECT_EQ(P.evaluate(two_a), P.evaluate(a) * RatFn(F, 2));
        }
    }
}

TEST(PPolynomial, SeriesEvaluationMatchesRatFn) {
    auto F = f2();
    const PPolynomial P = aniso_poly(F);
    const LaurentSeries x = series(F, "s"), y = series(F, "s+1");
    const std::vector<LaurentSeries> pt{x, y};
    const LaurentSeries v = P.evaluate(pt);
    const std::vector<RatFn> rp{lit(F, "s"), lit(F, "s+1")};
    EXPECT_EQ(v.coeff_at(0), P.evaluate(rp));
}

TEST(Substitution, ShearExpansion) {
    auto F = f2();
    // x^2 + s^2 y^2 + y with x <- x + s y becomes x^2 + y
    const PPolynomial P(F, 2, {{0, 1, RatFn(F, 1)}, {1, 1, lit(F, "s^2")}, {1, 0, RatFn(F, 1)}});
    const Substitution sigma =
        Substitution::elementary(F, 2, {ElementaryStep::Kind::Shear, 0, 1, 0, RatFn::s(F)});
    const PPolynomial Q = substitute(P, sigma);
    EXPECT_EQ(Q, PPolynomial(F, 2, {{0, 1, RatFn(F, 1)}, {1, 0, RatFn(F, 1)}}));
}

TEST(Substitution, CoherentWithEvaluation) {
    for (FieldPtr F : {f2(), f3()}) {
        std::mt19937_64 rng(21);
        for (int i = 0; i < 60; ++i) {
            const PPolynomial P = random_ppoly(F, rng, 3, 1);
            std::vector<ElementaryStep> steps;
            for (int k = 0; k < 3; ++k) {
                const std::size_t t = rng() % 3, s = (t + 1 + rng() % 2) % 3;
                if (rng() % 3 == 0)
                    steps.push_back({ElementaryStep::Kind::Scale, t, t, 0, random_nonzero(F, rng, 1)});
                else
                    steps.push_back({ElementaryStep::Kind::Shear, t, s, static_cast<unsigned>(rng() % 2),
                                     random_ratfn(F, rng, 1)});
            }
            const Substitution sigma = Substitution::from_chain(F, 3, steps);
            std::vector<RatFn> x{random_ratfn(F, rng), random_ratfn(F, rng), random_ratfn(F, rng)};
            EXPECT_EQ(substitute(P, sigma).evaluate(x), P.evaluate(sigma.apply(x)));
            // sequential substitution equals substitution by the composite
            PPolynomial Q = P;
            for (const auto& st : steps) Q = substitute(Q, Substitution::elementary(F, 3, st));
            EXPECT_EQ(Q, substitute(P, sigma));
            // the recorded inverse undoes the chain
            EXPECT_EQ(compose(sigma, sigma.inverse()), Substitution::identity(F, 3));
            EXPECT_EQ(substitute(substitute(P, sigma), sigma.inverse()), P);
        }
    }
}

TEST(Substitution, NonInvertibleHasNoInverse) {
    auto F = f2();
    const Substitution s(F, {{{0, 1, RatFn(F, 1)}}});
    EXPECT_FALSE(s.is_invertible());
    EXPECT_THROW(s.inverse(), Error);
    EXPECT_THROW(substitute(PPolynomial(F, 2, {{0, 0, RatFn(F, 1)}}), s), Error);
}

TEST(Substitution, ElementaryStepValidation) {
    auto F = f2();
    EXPECT_THROW(Substitution::elementary(F, 2, {ElementaryStep::Kind::Shear, 0, 0, 0, RatFn(F, 1)}), Error);
    EXPECT_THROW(Substitution::elementary(F, 2, {ElementaryStep::Kind::Scale, 0, 0, 0, RatFn(F)}), Error);
    EXPECT_THROW(Substitution::elementary(F, 2, {ElementaryStep::Kind::Shear, 0, 2, 0, RatFn(F, 1)}), Error);
}
