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

#ifndef PSPLIT_CERTIFICATE_HPP
#define PSPLIT_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psplit/cohomology.hpp"
#include "psplit/isotropy.hpp"

namespace psplit {

inline constexpr const char* tool_version = "0.1.0";

enum class Verdict { SplitSpecial, NotSplitNotSpecial, Undecided };

const char* to_string(Verdict v) noexcept;
/// Throws ParseError for unknown names.
Verdict verdict_from_string(const std::string& s);

struct Budgets {
    std::int64_t precision = default_precision;
    /// Maximum number of substitutions tried by certify_split.
    unsigned split_steps = 8;
    /// s-degree bound of the isotropy witness search.
    unsigned search_degree = 2;
    std::uint64_t seed = 0;
    unsigned torsor_samples = 20;
    /// Box of the oracle spot check attached to exclusion certificates.
    std::int64_t oracle_vmin = -2;
    std::int64_t oracle_vmax = 2;
    unsigned oracle_degree = 2;

    friend bool operator==(const Budgets&, const Budgets&) = default;
};

/// A torsor target together with an exact preimage.
struct TorsorSample {
    enum class Method { Contraction, SplitChain };
    Method method;
    LaurentSeries target;
    std::vector<LaurentSeries> solution;
};

/// The bounded search found no preimage of the excluded target.
struct OracleSpotCheck {
    std::int64_t vmin;
    std::int64_t vmax;
    unsigned degree;
    std::uint64_t generators;
};

struct Diagnostics {
    std::optional<AnisotropyVerdict> principal;
    std::vector<std::string> split_trace;
    unsigned split_steps_used = 0;
};

struct Certificate {
    Verdict verdict = Verdict::Undecided;
    PPolynomial input;
    std::vector<std::string> variables;
    std::string version = tool_version;
    Budgets budgets;

    std::optional<SplitCertificate> split;
    std::vector<TorsorSample> samples;
    std::optional<ExclusionCertificate> exclusion;
    std::optional<OracleSpotCheck> spot_check;
    Diagnostics diagnostics;
};

/// Throws NotSeparable, ContradictoryEvidence, and anything from the modules.
Certificate classify(const PPolynomial& P, const Budgets& budgets = {}, std::vector<std::string> variables = {});

struct Verification {
    bool ok = false;
    std::vector<std::string> trace;
    explicit operator bool() const noexcept { return ok; }
};

/// Replays every piece of evidence against `original`; never throws.
Verification verify(const Certificate& cert, const PPolynomial& original);

/// What can be said about the class of a target in H^1(L, G).
struct ClassReport {
    enum class Kind { Trivial, Nontrivial, Unknown };
    Kind kind = Kind::Unknown;
    /// "zero", "contraction", "split_chain", "oracle", "exclusion" or "none".
    std::string method = "none";
    std::optional<std::vector<LaurentSeries>> preimage;
    std::optional<ExclusionCertificate> exclusion;
};

const char* to_string(ClassReport::Kind k) noexcept;

/// Tries, in order: contraction (v >= 1), a split chain, the exclusion
/// argument (-p < v < 0), then the span oracle on the budget box.
ClassReport h1_class(const PPolynomial& P, const LaurentSeries& target, const Budgets& budgets = {});

}  // namespace psplit

#endif
