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

#include "psplit/frattini.hpp"

#include <bit>
#include <unordered_set>

namespace psplit {

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::uint32_t>> table) : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) fail(ErrorCode::InvalidGroupTable, "a group table needs at least one element");
    if (n > max_group_order)
        fail(ErrorCode::InvalidGroupTable, "group order " + std::to_string(n) + " exceeds the supported 64");
    for (const auto& row : table_) {
        if (row.size() != n) fail(ErrorCode::InvalidGroupTable, "table is not square");
        for (auto x : row)
            if (x >= n) fail(ErrorCode::InvalidGroupTable, "table entry " + std::to_string(x) + " out of range");
    }
    bool found = false;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::uint32_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) fail(ErrorCode::InvalidGroupTable, "no two-sided identity");
    inverse_.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
        bool ok = false;
        for (std::uint32_t b = 0; b < n && !ok; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) {
                inverse_[a] = b;
                ok = true;
            }
        if (!ok) fail(ErrorCode::InvalidGroupTable, "element " + std::to_string(a) + " has no inverse");
    }
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    fail(ErrorCode::InvalidGroupTable, "associativity fails at (" + std::to_string(a) + ", " +
                                                           std::to_string(b) + ", " + std::to_string(c) + ")");
}

std::uint32_t FiniteGroupTable::power(std::uint32_t a, std::uint64_t n) const noexcept {
    std::uint32_t r = identity_;
    while (n) {
        if (n & 1) r = table_[r][a];
        a = table_[a][a];
        n >>= 1;
    }
    return r;
}

FiniteGroupTable FiniteGroupTable::relabeled(const std::vector<std::uint32_t>& perm) const {
    const std::size_t n = order();
    if (perm.size() != n) fail(ErrorCode::InvalidInput, "relabeling has the wrong length");
    std::vector<bool> seen(n, false);
    for (auto x : perm) {
        if (x >= n || seen[x]) fail(ErrorCode::InvalidInput, "relabeling is not a permutation");
        seen[x] = true;
    }
    std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[table_[a][b]];
    return FiniteGroupTable(std::move(t));
}

std::size_t Subgroup::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask)); }

std::vector<std::uint32_t> Subgroup::elements() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < 64; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

Subgroup generated_subgroup(const FiniteGroupTable& G, const std::vector<std::uint32_t>& generators) {
    std::uint64_t mask = std::uint64_t{1} << G.identity();
    std::vector<std::uint32_t> queue{G.identity()};
    // In a finite group the monoid generated is already a subgroup.
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto g : generators) {
            const std::uint32_t x = G.mul(queue[i], g);
            if (!((mask >> x) & 1u)) {
                mask |= std::uint64_t{1} << x;
                queue.push_back(x);
            }
        }
    return {mask};
}

bool is_subgroup(const FiniteGroupTable& G, const Subgroup& H) {
    if (G.order() < 64 && (H.mask >> G.order()) != 0) return false;
    if (!H.contains(G.identity())) return false;
    const auto els = H.elements();
    for (auto a : els) {
        if (!H.contains(G.inverse(a))) return false;
        for (auto b : els)
            if (!H.contains(G.mul(a, b))) return false;
    }
    return true;
}

std::uint32_t group_prime(const FiniteGroupTable& G) {
    std::size_t n = G.order();
    if (n == 1) return 0;
    std::uint32_t p = 2;
    while (n % p) ++p;
    while (n % p == 0) n /= p;
    if (n != 1) fail(ErrorCode::NotPGroup, "order " + std::to_string(G.order()) + " is not a prime power");
    return p;
}

namespace {

std::uint64_t full_mask(const FiniteGroupTable& G) {
    return G.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << G.order()) - 1;
}

}  // namespace

std::vector<Subgroup> maximal_subgroups(const FiniteGroupTable& G) {
    const std::uint64_t all = full_mask(G);
    // Every subgroup, found by adjoining one element at a time to known ones.
    struct Node {
        Subgroup H;
        std::vector<std::uint32_t> gens;
    };
    std::vector<Node> nodes{{Subgroup{std::uint64_t{1} << G.identity()}, {}}};
    std::unordered_set<std::uint64_t> seen{nodes.front().H.mask};
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::uint32_t g = 0; g < G.order(); ++g) {
            if (nodes[i].H.contains(g)) continue;
            auto gens = nodes[i].gens;
            gens.push_back(g);
            const Subgroup K = generated_subgroup(G, gens);
            if (seen.insert(K.mask).second) nodes.push_back({K, std::move(gens)});
        }
    std::vector<Subgroup> proper;
    for (const auto& nd : nodes)
        if (nd.H.mask != all) proper.push_back(nd.H);
    std::vector<Subgroup> out;
    for (const auto& H : proper) {
        bool maximal = true;
        for (const auto& K : proper)
            if (K.mask != H.mask && (K.mask & H.mask) == H.mask) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(H);
    }
    return out;
}

Subgroup frattini_by_maximals(const FiniteGroupTable& G) {
    std::uint64_t mask = full_mask(G);
    for (const auto& M : maximal_subgroups(G)) mask &= M.mask;
    return {mask};
}

Subgroup frattini_by_generators(const FiniteGroupTable& G) {
    const std::uint32_t p = group_prime(G);
    if (p == 0) return {std::uint64_t{1} << G.identity()};
    std::vector<std::uint32_t> gens;
    for (std::uint32_t a = 0; a < G.order(); ++a) {
        gens.push_back(G.power(a, p));
        for (std::uint32_t b = 0; b < G.order(); ++b)
            gens.push_back(G.mul(G.mul(G.inverse(a), G.inverse(b)), G.mul(a, b)));
    }
    return generated_subgroup(G, gens);
}

Subgroup frattini_subgroup(const FiniteGroupTable& G) {
    group_prime(G);
    const Subgroup a = frattini_by_maximals(G);
    const Subgroup b = frattini_by_generators(G);
    if (!(a == b))
        fail(ErrorCode::ContradictoryEvidence, "intersection of maximal subgroups differs from the subgroup "
                                               "generated by commutators and p-th powers");
    if (!is_subgroup(G, a)) fail(ErrorCode::ContradictoryEvidence, "Frattini subset is not a subgroup");
    return a;
}

ElementaryQuotient elementary_quotient(const FiniteGroupTable& G) {
    if (G.order() == 1) fail(ErrorCode::TrivialGroup, "the trivial group has no elementary quotient");
    const std::uint32_t p = group_prime(G);
    const Subgroup phi = frattini_subgroup(G);
    for (std::uint32_t g = 0; g < G.order(); ++g)
        for (auto h : phi.elements())
            if (!phi.contains(G.mul(G.mul(g, h), G.inverse(g))))
                fail(ErrorCode::ContradictoryEvidence, "Frattini subgroup is not normal");
    for (std::uint32_t a = 0; a < G.order(); ++a) {
        if (!phi.contains(G.power(a, p))) fail(ErrorCode::ContradictoryEvidence, "quotient has exponent above p");
        for (std::uint32_t b = 0; b < G.order(); ++b)
            if (!phi.contains(G.mul(G.mul(G.inverse(a), G.inverse(b)), G.mul(a, b))))
                fail(ErrorCode::ContradictoryEvidence, "quotient is not abelian");
    }
    std::size_t index = G.order() / phi.size();
    unsigned rank = 0;
    while (index > 1) {
        index /= p;
        ++rank;
    }
    return {p, rank, phi};
}

EtaleCertificate etale_not_special(unsigned rank, const FieldPtr& field, std::int64_t precision) {
    if (rank == 0) fail(ErrorCode::InvalidInput, "etale_not_special needs rank >= 1");
    PPolynomial block(field, 1, {{0, 1, RatFn(field, 1)}, {0, 0, RatFn(field, -1)}});
    const LaurentSeries target = LaurentSeries::monomial(RatFn(field, 1), -1, precision);
    return {rank, block, 0, exclude_target(block, target)};
}

Check verify_etale(const EtaleCertificate& cert) {
    if (cert.rank == 0) return {false, "rank must be >= 1"};
    if (cert.coordinate >= cert.rank) return {false, "coordinate outside the product"};
    const FieldPtr& F = cert.block.field();
    const PPolynomial expected(F, 1, {{0, 1, RatFn(F, 1)}, {0, 0, RatFn(F, -1)}});
    if (!(cert.block == expected)) return {false, "block is not x^p - x"};
    const auto v = cert.exclusion.target.valuation();
    if (!v || *v != -1 || !cert.exclusion.target.coeff_at(-1).is_one())
        return {false, "target is not t^-1"};
    for (std::int64_t j = 0; j < cert.exclusion.target.end(); ++j)
        if (!cert.exclusion.target.coeff_at(j).is_zero()) return {false, "target is not t^-1"};
    return verify_exclusion(cert.block, cert.exclusion);
}

}  // namespace psplit
