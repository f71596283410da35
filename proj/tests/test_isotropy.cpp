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

#include "psplit/isotropy.hpp"
#include "support.hpp"

using namespace psplit;
using namespace psplit::testing;

namespace {

DiagonalForm form2(const FieldPtr& F, const RatFn& a, unsigned ha, const RatFn& b, unsigned hb) {
    return DiagonalForm{F, {{0, a, ha}, {1, b, hb}}};
}

}  // namespace

TEST(EqualHeight, AnisoFormAnisotropic) {
    auto F = f2();
    const auto v = decide_equal_height(form2(F, RatFn(F, 1), 1, RatFn::s(F), 1));
    EXPECT_TRUE(v.is_anisotropic());
    EXPECT_EQ(v.method(), AnisotropyMethod::EqualHeightLinearAlgebra);
}

TEST(EqualHeight, SquareRatioIsotropic) {
    auto F = f2();
    const DiagonalForm form = form2(F, RatFn(F, 1), 1, lit(F, "s^2"), 1);
    const auto v = decide_equal_height(form);
    ASSERT_TRUE(v.is_isotropic());
    EXPECT_EQ(v.witness(), (std::vector<RatFn>{RatFn::s(F), RatFn(F, 1)}));
    EXPECT_TRUE(is_isotropy_witness(form, v.witness()));
}

TEST(EqualHeight, HeightTwoOverF3) {
    auto F = f3();
    // 1, s, ..., s^8 are independent over k^9, s^9 is not new.
    EXPECT_TRUE(decide_equal_height(DiagonalForm{F, {{0, RatFn(F, 1), 2}, {1, RatFn::s(F), 2}}}).is_anisotropic());
    const DiagonalForm iso{F, {{0, RatFn(F, 1), 2}, {1, lit(F, "s^9"), 2}, {2, RatFn::s(F), 2}}};
    const auto v = decide_equal_height(iso);
    ASSERT_TRUE(v.is_isotropic());
    EXPECT_TRUE(is_isotropy_witness(iso, v.witness()));
}

TEST(EqualHeight, RankDimensions) {
    auto F = f2();
    const auto r = equal_height_rank(form2(F, RatFn(F, 1), 2, RatFn::s(F), 2));
    EXPECT_EQ(r.rows, 4u);
    EXPECT_EQ(r.cols, 2u);
    EXPECT_EQ(r.rank, 2u);
}

TEST(EqualHeight, HeightZeroAlwaysIsotropicForTwoEntries) {
    auto F = f2();
    const DiagonalForm form = form2(F, RatFn::s(F), 0, lit(F, "s+1"), 0);
    const auto v = decide_equal_height(form);
    ASSERT_TRUE(v.is_isotropic());
    EXPECT_TRUE(is_isotropy_witness(form, v.witness()));
}

TEST(EqualHeight, Errors) {
    auto F = f2();
    EXPECT_THROW(decide_equal_height(DiagonalForm{F, {}}), Error);
    EXPECT_THROW(decide_equal_height(form2(F, RatFn(F, 1), 1, RatFn(F, 1), 2)), Error);
    try {
        decide_equal_height(DiagonalForm{F, {}});
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptyForm);
    }
}

TEST(ValuationSeparation, Examples) {
    auto F = f2();
    EXPECT_TRUE(valuation_separation(form2(F, RatFn(F, 1), 2, RatFn::s(F), 1)).is_anisotropic());
    EXPECT_EQ(valuation_separation(form2(F, RatFn(F, 1), 2, lit(F, "s^2"), 1)).kind(),
              AnisotropyVerdict::Kind::Unknown);
    // mod p^min(m) = 4: orders 0 and 2 are separate
    EXPECT_TRUE(valuation_separation(form2(F, RatFn(F, 1), 2, lit(F, "s^2"), 3)).is_anisotropic());
}

TEST(Search, FindsMixedHeightWitness) {
    auto F = f2();
    const DiagonalForm form = form2(F, RatFn(F, 1), 2, lit(F, "s^2"), 1);
    const IsotropySearch r = search_isotropy(form, 2);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(is_isotropy_witness(form, *r.witness));
    EXPECT_EQ(*r.witness, (std::vector<RatFn>{RatFn::s(F), RatFn::s(F)}));
    const auto v = anisotropy_pipeline(form, 2);
    EXPECT_TRUE(v.is_isotropic());
}

TEST(Search, ExhaustsAnisotropicForm) {
    auto F = f2();
    const IsotropySearch r = search_isotropy(form2(F, RatFn(F, 1), 1, RatFn::s(F), 1), 2);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_TRUE(r.exhausted);
    EXPECT_EQ(r.scanned, 8u * 8u - 1u);
}

TEST(Search, CapStopsEarly) {
    auto F = f2();
    const IsotropySearch r = search_isotropy(form2(F, RatFn(F, 1), 1, RatFn::s(F), 1), 3, 10);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_FALSE(r.exhausted);
    EXPECT_EQ(r.scanned, 10u);
}

TEST(Search, Deterministic) {
    auto F = f3();
    const DiagonalForm form = form2(F, RatFn(F, 1), 1, lit(F, "2*s^3"), 1);
    const auto a = search_isotropy(form, 2), b = search_isotropy(form, 2);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.scanned, b.scanned);
}

TEST(Pipeline, UnknownWhenNothingApplies) {
    auto F = f2();
    // the witness (s, s) needs degree 1
    const DiagonalForm form{F, {{0, RatFn(F, 1), 2}, {1, lit(F, "s^2"), 1}}};
    const auto v = anisotropy_pipeline(form, 0);
    EXPECT_EQ(v.kind(), AnisotropyVerdict::Kind::Unknown);
    EXPECT_EQ(v.search_bound(), 0u);
}

TEST(Census, EqualHeightDecisionAgreesWithSearch) {
    auto F = f2();
    const auto polys = all_polys(F, 2);
    ASSERT_EQ(polys.size(), 7u);
    for (const auto& a : polys)
        for (const auto& b : polys) {
            const DiagonalForm form = form2(F, a, 1, b, 1);
            const auto decided = decide_equal_height(form);
            const auto found = search_isotropy(form, 3);
            EXPECT_EQ(decided.is_isotropic(), found.witness.has_value()) << a << ", " << b;
            if (decided.is_isotropic()) EXPECT_TRUE(is_isotropy_witness(form, decided.witness()));
        }
}

TEST(Split, LinearVariable) {
    auto F = f2();
    const PPolynomial P(F, 2, {{1, 0, RatFn(F, 1)}, {0, 1, RatFn(F, 1)}});
    const SplitAttempt a = certify_split(P, 8);
    ASSERT_TRUE(a.certificate.has_value());
    EXPECT_TRUE(a.certificate->chain.empty());
    ASSERT_EQ(a.certificate->eliminations.size(), 2u);
    EXPECT_EQ(a.certificate->eliminations[0], (Elimination{Elimination::Kind::Linear, 1}));
    EXPECT_EQ(a.certificate->eliminations[1], (Elimination{Elimination::Kind::Free, 0}));
    EXPECT_TRUE(replay_split(P, *a.certificate).ok);
}

TEST(Split, ShearThenEliminate) {
    auto F = f2();
    const PPolynomial P(F, 2, {{0, 1, RatFn(F, 1)}, {1, 1, lit(F, "s^2")}, {1, 0, RatFn(F, 1)}});
    const SplitAttempt a = certify_split(P, 8);
    ASSERT_TRUE(a.certificate.has_value());
    ASSERT_EQ(a.certificate->chain.size(), 1u);
    const auto& steps = *a.certificate->chain[0].chain();
    ASSERT_EQ(steps.size(), 1u);
    EXPECT_EQ(steps[0].target, 0u);
    EXPECT_EQ(steps[0].source, 1u);
    EXPECT_EQ(steps[0].coeff, RatFn::s(F));
    EXPECT_EQ(a.certificate->eliminations[0], (Elimination{Elimination::Kind::Linear, 1}));
    const ReplayResult r = replay_split(P, *a.certificate);
    ASSERT_TRUE(r.ok) << r.reason;
    EXPECT_EQ(*r.reduced, PPolynomial(F, 2, {{0, 1, RatFn(F, 1)}, {1, 0, RatFn(F, 1)}}));
}

TEST(Split, AnisoPolynomialHasNoCertificate) {
    auto F = f2();
    const PPolynomial P(F, 2, {{0, 1, RatFn(F, 1)}, {0, 0, RatFn(F, 1)}, {1, 1, RatFn::s(F)}});
    const SplitAttempt a = certify_split(P, 8);
    EXPECT_FALSE(a.certificate.has_value());
    EXPECT_FALSE(a.trace.empty());
}

TEST(Split, BudgetZeroForbidsSubstitutions) {
    auto F = f2();
    const PPolynomial P(F, 2, {{0, 1, RatFn(F, 1)}, {1, 1, lit(F, "s^2")}, {1, 0, RatFn(F, 1)}});
    EXPECT_FALSE(certify_split(P, 0).certificate.has_value());
}

TEST(Split, NotSeparableRejected) {
    auto F = f2();
    EXPECT_THROW(certify_split(PPolynomial(F, 1, {{0, 1, RatFn(F, 1)}}), 8), Error);
}

TEST(Replay, RejectsTamperedCertificates) {
    auto F = f2();
    const PPolynomial P(F, 2, {{0, 1, RatFn(F, 1)}, {1, 1, lit(F, "s^2")}, {1, 0, RatFn(F, 1)}});
    SplitCertificate cert = *certify_split(P, 8).certificate;

    SplitCertificate wrong_coeff = cert;
    auto steps = *wrong_coeff.chain[0].chain();
    steps[0].coeff = lit(F, "s+1");
    wrong_coeff.chain[0] = Substitution::from_chain(F, 2, steps);
    EXPECT_FALSE(replay_split(P, wrong_coeff).ok);

    SplitCertificate no_chain = cert;
    no_chain.chain.clear();
    EXPECT_FALSE(replay_split(P, no_chain).ok);

    SplitCertificate missing_free = cert;
    missing_free.eliminations.pop_back();
    EXPECT_FALSE(replay_split(P, missing_free).ok);

    SplitCertificate wrong_var = cert;
    wrong_var.eliminations = {{Elimination::Kind::Linear, 0}, {Elimination::Kind::Free, 1}};
    EXPECT_FALSE(replay_split(P, wrong_var).ok);

    const PPolynomial other(F, 2, {{0, 1, RatFn(F, 1)}, {1, 1, lit(F, "s^2+1")}, {1, 0, RatFn(F, 1)}});
    EXPECT_FALSE(replay_split(other, cert).ok);
}
