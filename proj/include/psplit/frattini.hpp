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

#ifndef PSPLIT_FRATTINI_HPP
#define PSPLIT_FRATTINI_HPP

#include <cstdint>
#include <vector>

#include "psplit/cohomology.hpp"

namespace psplit {

inline constexpr std::size_t max_group_order = 64;

/// A finite group given by its multiplication table; table[a][b] = a*b.
class FiniteGroupTable {
   public:
    /// Validates closure, identity, inverses and (exhaustively) associativity.
    /// Throws InvalidGroupTable.
    explicit FiniteGroupTable(std::vector<std::vector<std::uint32_t>> table);

    std::size_t order() const noexcept { return table_.size(); }
    std::uint32_t identity() const noexcept { return identity_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return table_[a][b]; }
    std::uint32_t inverse(std::uint32_t a) const noexcept { return inverse_[a]; }
    std::uint32_t power(std::uint32_t a, std::uint64_t n) const noexcept;
    const std::vector<std::vector<std::uint32_t>>& table() const noexcept { return table_; }

    /// The same group with element i renamed perm[i].
    FiniteGroupTable relabeled(const std::vector<std::uint32_t>& perm) const;

   private:
    std::vector<std::vector<std::uint32_t>> table_;
    std::vector<std::uint32_t> inverse_;
    std::uint32_t identity_ = 0;
};

/// Element subset as a bitmask over the table indices.
struct Subgroup {
    std::uint64_t mask = 0;

    std::size_t size() const noexcept;
    bool contains(std::uint32_t a) const noexcept { return (mask >> a) & 1u; }
    std::vector<std::uint32_t> elements() const;
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Smallest subgroup containing `generators`.
Subgroup generated_subgroup(const FiniteGroupTable& G, const std::vector<std::uint32_t>& generators);

/// Checks identity membership, closure and inverse closure.
bool is_subgroup(const FiniteGroupTable& G, const Subgroup& H);

/// The prime p with |G| = p^k; 0 for the trivial group. Throws NotPGroup.
std::uint32_t group_prime(const FiniteGroupTable& G);

std::vector<Subgroup> maximal_subgroups(const FiniteGroupTable& G);

/// Intersection of the maximal subgroups.
Subgroup frattini_by_maximals(const FiniteGroupTable& G);

/// Subgroup generated by all commutators and p-th powers.
Subgroup frattini_by_generators(const FiniteGroupTable& G);

/// Both constructions; throws NotPGroup, and ContradictoryEvidence if they differ.
Subgroup frattini_subgroup(const FiniteGroupTable& G);

struct ElementaryQuotient {
    std::uint32_t p;
    unsigned rank;
    Subgroup frattini;
};

/// Verifies G / Phi(G) is abelian of exponent p and returns its rank.
/// Throws TrivialGroup or NotPGroup.
ElementaryQuotient elementary_quotient(const FiniteGroupTable& G);

/// (Z/p)^rank as the kernel of the blocks x_i^p - x_i, one per coordinate.
/// H^1 of a product is the product of the H^1, so the class of t^-1 in the
/// first coordinate is nontrivial once it is for a single block.
struct EtaleCertificate {
    unsigned rank;
    PPolynomial block;
    std::size_t coordinate;
    ExclusionCertificate exclusion;
};

/// Throws InvalidInput for rank 0.
EtaleCertificate etale_not_special(unsigned rank, const FieldPtr& field, std::int64_t precision = default_precision);

Check verify_etale(const EtaleCertificate& cert);

}  // namespace psplit

#endif
