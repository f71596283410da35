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

#include "psplit/field.hpp"
#include "support.hpp"

using namespace psplit;
using namespace psplit::testing;

TEST(GroundField, PrimeArithmetic) {
    auto F = f3();
    EXPECT_EQ(F->add({2}, {2}).value, 1u);
    EXPECT_EQ(F->mul({2}, {2}).value, 1u);
    EXPECT_EQ(F->inv({2}).value, 2u);
    EXPECT_EQ(F->neg({1}).value, 2u);
    EXPECT_EQ(F->from_integer(-1).value, 2u);
    EXPECT_THROW(F->inv({0}), Error);
}

TEST(GroundField, RejectsBadParameters) {
    EXPECT_THROW(GroundField::prime(4), Error);
    EXPECT_THROW(GroundField::prime(1), Error);
    EXPECT_THROW(GroundField::extension(2, {1, 0, 1}), Error);  // (w+1)^2
    EXPECT_THROW(GroundField::extension(2, {1, 1, 0}), Error);
}

TEST(GroundField, F4Structure) {
    auto F = f4();
    EXPECT_EQ(F->q(), 4u);
    const FqElem w = F->generator();
    // w^2 = w + 1
    EXPECT_EQ(F->mul(w, w), F->add(w, F->one()));
    EXPECT_EQ(F->pow(w, 3), F->one());
    EXPECT_EQ(F->frobenius(w, 1), F->mul(w, w));
    EXPECT_EQ(F->frobenius(w, 2), w);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (unsigned m = 0; m <= 3; ++m) EXPECT_EQ(F->frobenius(F->frobenius_inverse({a}, m), m).value, a);
}

TEST(GroundField, ExtensionFieldAxiomsExhaustive) {
    auto F = GroundField::extension(3, {2, 2, 1});  // w^2 + 2w + 2, irreducible over F_3
    for (std::uint32_t a = 0; a < F->q(); ++a) {
        if (a) EXPECT_EQ(F->mul({a}, F->inv({a})), F->one());
        for (std::uint32_t b = 0; b < F->q(); ++b) {
            EXPECT_EQ(F->mul({a}, {b}), F->mul({b}, {a}));
            EXPECT_EQ(F->sub(F->add({a}, {b}), {b}).value, a);
        }
    }
}

class RatFnAxioms : public ::testing::TestWithParam<int> {};

TEST_P(RatFnAxioms, RandomTriples) {
    FieldPtr F = GetParam() == 2 ? f2() : GetParam() == 3 ? f3() : f4();
    std::mt19937_64 rng(1234 + GetParam());
    for (int i = 0; i < 1000; ++i) {
        const RatFn a = random_ratfn(F, rng), b = random_ratfn(F, rng), c = random_ratfn(F, rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a - a, RatFn(F));
        if (!a.is_zero()) ASSERT_TRUE((a * a.inverse()).is_one());
        if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, RatFnAxioms, ::testing::Values(2, 3, 4));

TEST(RatFn, FrobeniusRoundTrip) {
    for (FieldPtr F : {f2(), f3(), f4()}) {
        std::mt19937_64 rng(99);
        for (int i = 0; i < 100; ++i) {
            const RatFn a = random_ratfn(F, rng, 2);
            for (unsigned m = 0; m <= 3; ++m) {
                const RatFn fa = a.frobenius(m);
                auto root = fa.p_root(m);
                ASSERT_TRUE(root.has_value());
                EXPECT_EQ(*root, a);
                // Frobenius is additive and multiplicative.
                const RatFn b = random_ratfn(F, rng, 2);
                EXPECT_EQ((a + b).frobenius(m), fa + b.frobenius(m));
                EXPECT_EQ((a * b).frobenius(m), fa * b.frobenius(m));
            }
        }
    }
}

TEST(RatFn, PRootAbsentForS) {
    auto F = f2();
    EXPECT_FALSE(RatFn::s(F).p_root(1).has_value());
    EXPECT_TRUE(lit(F, "s^2+1").p_root(1).has_value());
    EXPECT_EQ(*lit(F, "s^2+1").p_root(1), lit(F, "s+1"));
}

TEST(RatFn, CanonicalForm) {
    auto F = f3();
    const RatFn r = lit(F, "(2*s^2+2*s)/(2*s)");
    EXPECT_EQ(r, lit(F, "s+1"));
    EXPECT_TRUE(r.is_polynomial());
    EXPECT_EQ(RatFn(F, 3), RatFn(F));
    EXPECT_EQ(lit(F, "1/(s+1)").denominator(), PolyS(F, {{1}, {1}}));
}

TEST(RatFn, OrdS) {
    auto F = f2();
    EXPECT_EQ(lit(F, "s^3").ord_s(), 3);
    EXPECT_EQ(lit(F, "1/s^2").ord_s(), -2);
    EXPECT_EQ(lit(F, "(s+1)/s").ord_s(), -1);
    EXPECT_FALSE(RatFn(F).ord_s().has_value());
}

TEST(RatFn, ToStringParsesBack) {
    for (FieldPtr F : {f2(), f3(), f4()}) {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 300; ++i) {
            const RatFn a = random_ratfn(F, rng);
            EXPECT_EQ(parse_ratfn(a.to_string(), F), a) << a.to_string();
        }
    }
}

TEST(RatFn, PmDecomposeReconstructs) {
    for (FieldPtr F : {f2(), f3()}) {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            const RatFn c = random_ratfn(F, rng);
            for (unsigned m = 0; m <= 2; ++m) {
                const auto parts = pm_decompose(c, m);
                ASSERT_EQ(parts.size(), checked_ppow(F->p(), m));
                RatFn sum(F);
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    EXPECT_TRUE(parts[j].p_root(m).has_value());
                    sum += parts[j] * RatFn::s(F).pow(static_cast<std::int64_t>(j));
                }
                EXPECT_EQ(sum, c);
            }
        }
    }
}

TEST(RatFn, FieldMismatchRejected) {
    EXPECT_THROW(RatFn(f2(), 1) + RatFn(f3(), 1), Error);
}

TEST(PolyS, GcdAndDivision) {
    auto F = f2();
    const PolyS a = lit(F, "s^3+s").numerator();  // s (s+1)^2
    const PolyS b = lit(F, "s^2+1").numerator();  // (s+1)^2
    EXPECT_EQ(PolyS::gcd(a, b), b);
    auto [q, r] = PolyS::divmod(a, b);
    EXPECT_EQ(q, lit(F, "s").numerator());
    EXPECT_TRUE(r.is_zero());
    EXPECT_THROW(PolyS::divmod(a, PolyS(F)), Error);
}
