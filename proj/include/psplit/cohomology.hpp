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

#ifndef PSPLIT_COHOMOLOGY_HPP
#define PSPLIT_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psplit/isotropy.hpp"
#include "psplit/laurent.hpp"
#include "psplit/ppoly.hpp"

namespace psplit {

// For G = ker(P : G_a^r -> G_a) and L = k((t)), H^1(L, G) is L / P(L^r).

/// Evidence that `target` is not of the form P(alpha) for alpha in L^r.
///
/// Replay: a preimage needs some v(alpha_i) <= -1. Put
///   m = min_i v(alpha_i^(p^m_i))   and   I = { i : v(alpha_i^(p^m_i)) = m }.
/// Every principal height is >= 1, so m <= valuation_bound = -p^min_height.
/// The t^m coefficient of P(alpha) is sum_{i in I} c_i a_i^(p^m_i) with
/// a_i the leading coefficient of alpha_i; anisotropy of the principal part
/// makes it nonzero, so v(P(alpha)) = m < v(target).
struct ExclusionCertificate {
    LaurentSeries target;
    DiagonalForm form;
    AnisotropyVerdict evidence;
    std::int64_t target_valuation = 0;
    unsigned min_height = 0;
    std::int64_t valuation_bound = 0;
    /// p^m_i for each form entry: v(alpha_i^(p^m_i)) = p^m_i v(alpha_i).
    std::vector<std::uint64_t> leading_multipliers;
};

/// Principal part anisotropy certified by a sound method only (exact
/// equal-height decision or valuation separation); no searching.
AnisotropyVerdict certify_anisotropic(const DiagonalForm& form);

/// Throws NotSeparable, PrincipalPartNotCertified, TargetValuationOutOfRange.
ExclusionCertificate exclude_target(const PPolynomial& P, const LaurentSeries& target);

struct Check {
    bool ok = false;
    std::string reason;
    explicit operator bool() const noexcept { return ok; }
};

/// Recomputes every ingredient of the certificate from P.
Check verify_exclusion(const PPolynomial& P, const ExclusionCertificate& cert);

/// Residual P(alpha) - target vanishes on the whole window of the target.
bool solves(const PPolynomial& P, const std::vector<LaurentSeries>& alpha, const LaurentSeries& target);

/// Fixed-point iteration x <- c0^-1 (target - higher terms of P_k(x)) on the
/// first variable with a linear term; all other coordinates are zero.
/// Requires v(target) >= 1 (a tracked-zero target is fine).
std::optional<std::vector<LaurentSeries>> solve_positive_valuation(const PPolynomial& P, const LaurentSeries& target);

/// Solves P(alpha) = target for any target using a split certificate: the
/// free coordinates take `free_values` (zero when empty), the linear one is
/// solved exactly, and the chain maps the solution back.
std::vector<LaurentSeries> solve_split_torsor(const PPolynomial& P, const SplitCertificate& cert,
                                              const LaurentSeries& target,
                                              const std::vector<LaurentSeries>& free_values = {});

enum class OracleMode {
    /// Gaussian elimination over F_p on the images of a basis of the box;
    /// exact for the whole box because P is additive.
    Span,
    /// Literal scan of every tuple in the box.
    Enumerate,
};

struct OracleOptions {
    OracleMode mode = OracleMode::Span;
    /// Span: maximum number of basis images; Enumerate: maximum box size.
    std::uint64_t cap = 0;
};

inline constexpr std::uint64_t default_span_cap = 4096;
inline constexpr std::uint64_t default_enumerate_cap = std::uint64_t{1} << 20;

struct OracleResult {
    bool in_image = false;
    std::optional<std::vector<LaurentSeries>> preimage;
    /// log_p of the number of tuples in the box.
    std::uint64_t box_log_p = 0;
    std::uint64_t generators = 0;
    std::uint64_t scanned = 0;
};

/// Is target = P(alpha) modulo t^target.end() for some alpha whose entries
/// are Laurent polynomials with exponents in [vmin, vmax] and polynomial
/// coefficients of s-degree <= deg? Throws SearchSpaceTooLarge past the cap.
OracleResult brute_force_image(const PPolynomial& P, const LaurentSeries& target, std::int64_t vmin,
                               std::int64_t vmax, unsigned deg, OracleOptions options = {});

/// A class in L / P(L^r). Equality is only semi-decidable: a found
/// difference preimage proves equality, nothing proves inequality here.
struct H1Class {
    LaurentSeries representative;
    PPolynomial presentation;

    std::optional<std::vector<LaurentSeries>> equal_witness(const H1Class& other, std::int64_t vmin,
                                                            std::int64_t vmax, unsigned deg) const;
};

}  // namespace psplit

#endif
