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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "psplit/frattini.hpp"
#include "psplit/serialize.hpp"
#include "support.hpp"

using namespace psplit;
using namespace psplit::testing;

namespace {

json load(const std::filesystem::path& p) {
    std::ifstream in(p);
    return json::parse(in);
}

std::filesystem::path groups_dir() { return std::filesystem::path(PSPLIT_DATA_DIR) / "groups"; }

FiniteGroupTable group(const std::string& name) { return group_from_json(load(groups_dir() / (name + ".json"))); }

FiniteGroupTable cyclic(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return FiniteGroupTable(std::move(t));
}

}  // namespace

TEST(GroupTable, Validation) {
    EXPECT_THROW(FiniteGroupTable({}), Error);
    EXPECT_THROW(FiniteGroupTable({{0, 1}, {1}}), Error);
    EXPECT_THROW(FiniteGroupTable({{0, 2}, {1, 0}}), Error);
    EXPECT_THROW(FiniteGroupTable({{0, 0}, {0, 0}}), Error);  // no inverse of 1 / no identity
    // x*y = -x-y mod 3 has no identity
    EXPECT_THROW(FiniteGroupTable({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), Error);
    // a loop of order 5: identity and inverses but no associativity
    EXPECT_THROW(FiniteGroupTable({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
                 Error);
    std::vector<std::vector<std::uint32_t>> big(65, std::vector<std::uint32_t>(65, 0));
    try {
        FiniteGroupTable g(big);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidGroupTable);
    }
}

TEST(GroupTable, JsonIdentityCheck) {
    EXPECT_NO_THROW(group_from_json(json::parse(R"({"order":2,"table":[[0,1],[1,0]],"identity":0})")));
    EXPECT_THROW(group_from_json(json::parse(R"({"order":2,"table":[[0,1],[1,0]],"identity":1})")), Error);
    EXPECT_THROW(group_from_json(json::parse(R"({"order":3,"table":[[0,1],[1,0]]})")), Error);
}

TEST(Frattini, Examples) {
    EXPECT_EQ(frattini_subgroup(group("z4")).elements(), (std::vector<std::uint32_t>{0, 2}));
    EXPECT_EQ(frattini_subgroup(group("z2x2")).elements(), (std::vector<std::uint32_t>{0}));
    const FiniteGroupTable d4 = group("d4");
    const Subgroup phi = frattini_subgroup(d4);
    EXPECT_EQ(phi.size(), 2u);
    // Phi(D4) is the center
    for (auto z : phi.elements())
        for (std::uint32_t g = 0; g < d4.order(); ++g) EXPECT_EQ(d4.mul(z, g), d4.mul(g, z));
    EXPECT_EQ(elementary_quotient(d4).rank, 2u);
    EXPECT_EQ(elementary_quotient(group("z8")).frattini.elements(), (std::vector<std::uint32_t>{0, 2, 4, 6}));
    EXPECT_EQ(elementary_quotient(group("z8")).rank, 1u);
    EXPECT_EQ(elementary_quotient(group("q8")).rank, 2u);
    EXPECT_EQ(elementary_quotient(group("q8")).frattini.size(), 2u);
    EXPECT_EQ(elementary_quotient(group("z3x3x3")).rank, 3u);
    EXPECT_EQ(elementary_quotient(group("z3x3x3")).p, 3u);
}

TEST(Frattini, CorpusMethodsAgreeAndRanksMatch) {
    std::size_t n = 0;
    for (const auto& entry : std::filesystem::directory_iterator(groups_dir())) {
        const json doc = load(entry.path());
        if (!doc.contains("expected_rank")) continue;
        const FiniteGroupTable G = group_from_json(doc);
        EXPECT_EQ(frattini_by_maximals(G), frattini_by_generators(G)) << entry.path();
        EXPECT_EQ(elementary_quotient(G).rank, doc["expected_rank"].get<unsigned>()) << entry.path();
        ++n;
    }
    EXPECT_GE(n, 20u);
}

TEST(Frattini, MaximalSubgroupsHaveIndexP) {
    for (const char* name : {"d4", "q8", "z2x4", "z3x3", "z2xd4"}) {
        const FiniteGroupTable G = group(name);
        const std::uint32_t p = group_prime(G);
        for (const auto& M : maximal_subgroups(G)) {
            EXPECT_TRUE(is_subgroup(G, M));
            EXPECT_EQ(M.size() * p, G.order()) << name;
        }
    }
}

TEST(Frattini, RelabelingInvariance) {
    std::mt19937_64 rng(2026);
    for (const char* name : {"z8", "d4", "q8", "z2x4", "z4x4", "z2xq8", "d8", "q16", "z3x3"}) {
        const FiniteGroupTable G = group(name);
        const auto base = elementary_quotient(G);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::uint32_t> perm(G.order());
            std::iota(perm.begin(), perm.end(), 0u);
            std::shuffle(perm.begin(), perm.end(), rng);
            const FiniteGroupTable H = G.relabeled(perm);
            const auto q = elementary_quotient(H);
            EXPECT_EQ(q.rank, base.rank) << name;
            EXPECT_EQ(q.frattini.size(), base.frattini.size()) << name;
            for (auto x : base.frattini.elements()) EXPECT_TRUE(q.frattini.contains(perm[x])) << name;
        }
    }
}

TEST(Frattini, OrderSixtyFour) {
    const FiniteGroupTable G = group("z2_6");
    EXPECT_EQ(G.order(), 64u);
    EXPECT_EQ(frattini_by_maximals(G), frattini_by_generators(G));
    EXPECT_EQ(maximal_subgroups(G).size(), 63u);
    EXPECT_EQ(elementary_quotient(cyclic(64)).rank, 1u);
    EXPECT_EQ(elementary_quotient(group("z2x2xd4")).rank, 4u);
}

TEST(Frattini, Errors) {
    try {
        frattini_subgroup(group("z6_not_p_group"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPGroup);
    }
    const FiniteGroupTable trivial(std::vector<std::vector<std::uint32_t>>{{0}});
    EXPECT_EQ(frattini_subgroup(trivial).size(), 1u);
    try {
        elementary_quotient(trivial);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TrivialGroup);
    }
}

TEST(Etale, CertificatesReplay) {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (unsigned s : {1u, 2u, 3u}) {
            const EtaleCertificate c = etale_not_special(s, GroundField::prime(p));
            EXPECT_EQ(c.rank, s);
            EXPECT_EQ(c.coordinate, 0u);
            EXPECT_TRUE(verify_etale(c).ok) << p << " " << s;
            EXPECT_FALSE(brute_force_image(c.block, c.exclusion.target, -2, 2, 1).in_image);
        }
    EXPECT_THROW(etale_not_special(0, f2()), Error);
}

TEST(Etale, TamperedBlockRejected) {
    EtaleCertificate c = etale_not_special(2, f2());
    auto F = f2();
    c.block = PPolynomial(F, 1, {{0, 1, RatFn::s(F)}, {0, 0, RatFn(F, 1)}});
    EXPECT_FALSE(verify_etale(c).ok);
    EtaleCertificate d = etale_not_special(2, f2());
    d.coordinate = 2;
    EXPECT_FALSE(verify_etale(d).ok);
}
