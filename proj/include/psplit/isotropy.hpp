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

#ifndef PSPLIT_ISOTROPY_HPP
#define PSPLIT_ISOTROPY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psplit/ppoly.hpp"

namespace psplit {

enum class AnisotropyMethod { EqualHeightLinearAlgebra, ValuationSeparation };

const char* to_string(AnisotropyMethod m) noexcept;

/// Outcome of asking whether a diagonal form has a nontrivial zero over k.
class AnisotropyVerdict {
   public:
    enum class Kind { Anisotropic, Isotropic, Unknown };

    static AnisotropyVerdict anisotropic(AnisotropyMethod method);
    /// Re-verifies that `witness` is a nonzero zero of `form`; throws
    /// InvalidInput otherwise.
    static AnisotropyVerdict isotropic(const DiagonalForm& form, std::vector<RatFn> witness);
    static AnisotropyVerdict unknown(unsigned search_bound);
    /// Rebuilds a recorded verdict without checking it.
    static AnisotropyVerdict from_parts(Kind kind, AnisotropyMethod method, std::vector<RatFn> witness,
                                        unsigned search_bound);

    Kind kind() const noexcept { return kind_; }
    bool is_anisotropic() const noexcept { return kind_ == Kind::Anisotropic; }
    bool is_isotropic() const noexcept { return kind_ == Kind::Isotropic; }
    AnisotropyMethod method() const noexcept { return method_; }
    const std::vector<RatFn>& witness() const noexcept { return witness_; }
    unsigned search_bound() const noexcept { return bound_; }

   private:
    Kind kind_ = Kind::Unknown;
    AnisotropyMethod method_ = AnisotropyMethod::EqualHeightLinearAlgebra;
    std::vector<RatFn> witness_;
    unsigned bound_ = 0;
};

/// True iff `witness` is not all zero and sum c_i w_i^(p^m_i) vanishes.
bool is_isotropy_witness(const DiagonalForm& form, const std::vector<RatFn>& witness);

/// Rank over k^(p^m) of the coefficients of an equal-height form, computed
/// through their coordinates in the basis 1, s, ..., s^(p^m - 1).
struct EqualHeightRank {
    std::size_t rank;
    std::size_t rows;
    std::size_t cols;
    /// A nonzero witness when rank < cols.
    std::optional<std::vector<RatFn>> witness;
};

/// Throws EmptyForm or HeightMismatch.
EqualHeightRank equal_height_rank(const DiagonalForm& form);

/// Exact decision for forms whose entries all share one height.
AnisotropyVerdict decide_equal_height(const DiagonalForm& form);

/// Sufficient test: Anisotropic when the s-adic orders of every pair of
/// coefficients are incongruent modulo p^min(m_i, m_j).
AnisotropyVerdict valuation_separation(const DiagonalForm& form);

struct IsotropySearch {
    std::optional<std::vector<RatFn>> witness;
    std::uint64_t scanned = 0;
    /// False when the candidate cap stopped the scan early.
    bool exhausted = true;
};

inline constexpr std::uint64_t default_search_cap = std::uint64_t{1} << 22;

/// Scans tuples of polynomials of s-degree <= degree_bound for a nonzero
/// zero of the form. Order: by total weight (sum over entries of deg + 1,
/// zero entries weigh 0), then by the weight profile, then by each entry's
/// coefficients read from the leading one down, first entry slowest.
IsotropySearch search_isotropy(const DiagonalForm& form, unsigned degree_bound,
                               std::uint64_t cap = default_search_cap);

/// equal heights -> exact decision; otherwise valuation separation, then a
/// bounded witness search, then Unknown.
AnisotropyVerdict anisotropy_pipeline(const DiagonalForm& form, unsigned search_degree);

struct Elimination {
    enum class Kind { Linear, Free };
    Kind kind;
    std::size_t var;
    friend bool operator==(const Elimination&, const Elimination&) = default;
};

/// After replaying `chain` the first elimination names a variable that occurs
/// only through its degree-1 monomial, so the kernel is the graph of a
/// function of the remaining coordinates, each listed as Free.
struct SplitCertificate {
    std::vector<Substitution> chain;
    std::vector<Elimination> eliminations;
};

struct SplitAttempt {
    std::optional<SplitCertificate> certificate;
    std::vector<std::string> trace;
    unsigned steps_used = 0;
};

/// Greedy search for a split certificate using at most `budget`
/// degree-reducing substitutions. Throws NotSeparable.
SplitAttempt certify_split(const PPolynomial& P, unsigned budget);

struct ReplayResult {
    bool ok = false;
    std::string reason;
    /// The polynomial after the whole chain when ok.
    std::optional<PPolynomial> reduced;
};

/// Replays the chain from its recorded elementary steps, ignoring cached
/// expressions, and checks the elimination conditions.
ReplayResult replay_split(const PPolynomial& P, const SplitCertificate& cert);

}  // namespace psplit

#endif
