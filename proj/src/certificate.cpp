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

#include "psplit/certificate.hpp"

#include <map>
#include <random>

namespace psplit {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::SplitSpecial: return "SPLIT_SPECIAL";
        case Verdict::NotSplitNotSpecial: return "NOT_SPLIT_NOT_SPECIAL";
        case Verdict::Undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "SPLIT_SPECIAL") return Verdict::SplitSpecial;
    if (s == "NOT_SPLIT_NOT_SPECIAL") return Verdict::NotSplitNotSpecial;
    if (s == "UNDECIDED") return Verdict::Undecided;
    fail(ErrorCode::ParseError, "unknown verdict '" + s + "'");
}

namespace {

constexpr std::int64_t sample_vmin = -3;
constexpr std::int64_t sample_vmax = 3;

/// Raw engine outputs only, so samples are identical across standard libraries.
class Sampler {
   public:
    Sampler(const FieldPtr& field, std::uint64_t seed) : field_(field), rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return rng_() % n; }

    /// Polynomial of s-degree <= 1, nonzero when asked.
    RatFn coeff(bool nonzero) {
        const std::uint64_t q = field_->q();
        for (;;) {
            std::vector<FqElem> c{{static_cast<std::uint32_t>(below(q))}, {static_cast<std::uint32_t>(below(q))}};
            RatFn r(PolyS(field_, std::move(c)));
            if (!nonzero || !r.is_zero()) return r;
        }
    }

    /// Laurent polynomial with valuation exactly v and a few further terms.
    LaurentSeries series(std::int64_t v, std::int64_t end) {
        std::map<std::int64_t, RatFn> terms;
        terms.emplace(v, coeff(true));
        for (std::int64_t e = v + 1; e < std::min(end, v + 4); ++e) {
            RatFn c = coeff(false);
            if (!c.is_zero()) terms.emplace(e, std::move(c));
        }
        return LaurentSeries::from_terms(field_, terms, end);
    }

   private:
    FieldPtr field_;
    std::mt19937_64 rng_;
};

std::vector<TorsorSample> torsor_samples(const PPolynomial& P, const SplitCertificate& split, const Budgets& b) {
    const FieldPtr& F = P.field();
    Sampler rng(F, b.seed);
    std::vector<TorsorSample> out;
    const std::int64_t end = b.precision;
    for (unsigned i = 0; i < b.torsor_samples; ++i) {
        const std::int64_t v = sample_vmin + static_cast<std::int64_t>(rng.below(sample_vmax - sample_vmin + 1));
        if (v >= end) continue;
        LaurentSeries target = rng.series(v, end);
        if (v >= 1) {
            auto sol = solve_positive_valuation(P, target);
            if (!sol) fail(ErrorCode::ContradictoryEvidence, "contraction solver failed on a positive-valuation target");
            out.push_back({TorsorSample::Method::Contraction, std::move(target), std::move(*sol)});
            continue;
        }
        std::vector<LaurentSeries> free_values;
        for (std::size_t j = 0; j < P.arity(); ++j) free_values.push_back(rng.series(-1, end));
        auto sol = solve_split_torsor(P, split, target, free_values);
        if (!solves(P, sol, target)) fail(ErrorCode::ContradictoryEvidence, "split chain failed to solve a torsor");
        out.push_back({TorsorSample::Method::SplitChain, std::move(target), std::move(sol)});
    }
    return out;
}

LaurentSeries t_inverse(const FieldPtr& F, std::int64_t precision) {
    return LaurentSeries::monomial(RatFn(F, 1), -1, precision);
}

bool same_verdict(const AnisotropyVerdict& a, const AnisotropyVerdict& b) {
    return a.kind() == b.kind() && a.method() == b.method() && a.witness() == b.witness() &&
           a.search_bound() == b.search_bound();
}

}  // namespace

Certificate classify(const PPolynomial& P, const Budgets& budgets, std::vector<std::string> variables) {
    if (!P.is_separable()) fail(ErrorCode::NotSeparable, "classify needs a separable p-polynomial");
    if (budgets.precision < 1) fail(ErrorCode::InvalidInput, "precision must be >= 1");
    if (variables.empty())
        for (std::size_t i = 0; i < P.arity(); ++i) variables.push_back("x" + std::to_string(i));
    if (variables.size() != P.arity()) fail(ErrorCode::ArityMismatch, "variable names do not match the arity");

    Certificate cert{Verdict::Undecided, P, std::move(variables), tool_version, budgets, {}, {}, {}, {}, {}};

    SplitAttempt attempt = certify_split(P, budgets.split_steps);
    cert.diagnostics.split_trace = attempt.trace;
    cert.diagnostics.split_steps_used = attempt.steps_used;

    const DiagonalForm form = principal_part(P);
    const AnisotropyVerdict principal = anisotropy_pipeline(form, budgets.search_degree);
    cert.diagnostics.principal = principal;

    std::optional<ExclusionCertificate> exclusion;
    if (principal.is_anisotropic() && form.min_height() >= 1)
        exclusion = exclude_target(P, t_inverse(P.field(), budgets.precision));

    if (attempt.certificate && exclusion)
        fail(ErrorCode::ContradictoryEvidence, "both a split chain and an exclusion certificate were found");

    if (attempt.certificate) {
        cert.verdict = Verdict::SplitSpecial;
        cert.samples = torsor_samples(P, *attempt.certificate, budgets);
        cert.split = std::move(attempt.certificate);
    } else if (exclusion) {
        const OracleResult r = brute_force_image(P, exclusion->target, budgets.oracle_vmin, budgets.oracle_vmax,
                                                 budgets.oracle_degree);
        if (r.in_image) fail(ErrorCode::ContradictoryEvidence, "oracle found a preimage of an excluded target");
        cert.verdict = Verdict::NotSplitNotSpecial;
        cert.spot_check = OracleSpotCheck{budgets.oracle_vmin, budgets.oracle_vmax, budgets.oracle_degree, r.generators};
        cert.exclusion = std::move(exclusion);
    }
    return cert;
}

Verification verify(const Certificate& cert, const PPolynomial& original) {
    Verification out;
    auto note = [&](std::string s) { out.trace.push_back(std::move(s)); };
    auto reject = [&](std::string s) {
        note("FAIL: " + std::move(s));
        out.ok = false;
        return out;
    };
    try {
        if (!(cert.input == original)) return reject("certificate input differs from the given polynomial");
        if (!cert.input.field()->same_as(*original.field())) return reject("ground field differs");
        note("input echo matches");
        if (!original.is_separable()) return reject("input is not separable");
        if (cert.variables.size() != original.arity()) return reject("variable names do not match the arity");

        const DiagonalForm form = principal_part(original);
        const AnisotropyVerdict principal = anisotropy_pipeline(form, cert.budgets.search_degree);
        if (cert.diagnostics.principal) {
            if (!same_verdict(*cert.diagnostics.principal, principal))
                return reject("recorded principal-part verdict does not match a fresh computation");
            if (principal.is_isotropic() && !is_isotropy_witness(form, cert.diagnostics.principal->witness()))
                return reject("recorded isotropy witness does not vanish");
            note(std::string("principal part verdict recomputed"));
        }

        switch (cert.verdict) {
            case Verdict::SplitSpecial: {
                if (!cert.split) return reject("SPLIT_SPECIAL without a split certificate");
                if (cert.exclusion || cert.spot_check) return reject("SPLIT_SPECIAL carrying exclusion evidence");
                const ReplayResult replay = replay_split(original, *cert.split);
                if (!replay.ok) return reject("split chain does not replay: " + replay.reason);
                note("split chain replays in " + std::to_string(cert.split->chain.size()) + " substitution(s)");
                if (principal.is_anisotropic() && form.min_height() >= 1)
                    return reject("principal part is anisotropic with positive heights, contradicting a split");
                for (std::size_t i = 0; i < cert.samples.size(); ++i) {
                    const auto& s = cert.samples[i];
                    const auto v = s.target.valuation();
                    if (!v || *v < sample_vmin) return reject("sample " + std::to_string(i) + " target out of range");
                    if (s.target.end() < cert.budgets.precision)
                        return reject("sample " + std::to_string(i) + " is known below the precision");
                    if (!solves(original, s.solution, s.target))
                        return reject("sample " + std::to_string(i) + " is not solved");
                }
                note(std::to_string(cert.samples.size()) + " torsor sample(s) solved exactly");
                break;
            }
            case Verdict::NotSplitNotSpecial: {
                if (!cert.exclusion) return reject("NOT_SPLIT_NOT_SPECIAL without an exclusion certificate");
                if (cert.split || !cert.samples.empty()) return reject("NOT_SPLIT_NOT_SPECIAL carrying split evidence");
                const auto& ex = *cert.exclusion;
                if (!(ex.target == t_inverse(original.field(), ex.target.end())))
                    return reject("excluded target is not t^-1");
                const Check c = verify_exclusion(original, ex);
                if (!c) return reject("exclusion certificate: " + c.reason);
                note("exclusion of t^-1 replays (method " + std::string(to_string(ex.evidence.method())) + ")");
                if (!cert.spot_check) return reject("missing oracle spot check");
                const auto& sc = *cert.spot_check;
                const OracleResult r = brute_force_image(original, ex.target, sc.vmin, sc.vmax, sc.degree);
                if (r.in_image) return reject("oracle finds a preimage of the excluded target");
                if (r.generators != sc.generators) return reject("oracle box size differs from the record");
                note("oracle spot check: no preimage in the recorded box");
                break;
            }
            case Verdict::Undecided: {
                if (cert.split || cert.exclusion) return reject("UNDECIDED carrying decisive evidence");
                if (!cert.diagnostics.principal) return reject("UNDECIDED without diagnostics");
                const SplitAttempt again = certify_split(original, cert.budgets.split_steps);
                if (again.certificate) return reject("a split certificate exists within the recorded budget");
                note("no split certificate within the budget, principal part " +
                     std::string(principal.is_isotropic() ? "isotropic" : "not certified"));
                break;
            }
        }
    } catch (const std::exception& e) {
        return reject(std::string("exception during replay: ") + e.what());
    }
    out.ok = true;
    return out;
}

const char* to_string(ClassReport::Kind k) noexcept {
    switch (k) {
        case ClassReport::Kind::Trivial: return "trivial";
        case ClassReport::Kind::Nontrivial: return "nontrivial";
        case ClassReport::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

ClassReport h1_class(const PPolynomial& P, const LaurentSeries& target, const Budgets& budgets) {
    if (!P.is_separable()) fail(ErrorCode::NotSeparable, "H^1 computations need a separable p-polynomial");
    ClassReport out;
    const auto v = target.valuation();
    if (!v) {
        const LaurentSeries zero = LaurentSeries::zero(P.field(), std::min<std::int64_t>(0, target.end() - 1),
                                                       target.end());
        out.kind = ClassReport::Kind::Trivial;
        out.method = "zero";
        out.preimage = std::vector<LaurentSeries>(P.arity(), zero);
        return out;
    }
    if (*v >= 1) {
        if (auto sol = solve_positive_valuation(P, target)) {
            out.kind = ClassReport::Kind::Trivial;
            out.method = "contraction";
            out.preimage = std::move(sol);
            return out;
        }
    }
    const SplitAttempt attempt = certify_split(P, budgets.split_steps);
    if (attempt.certificate) {
        auto sol = solve_split_torsor(P, *attempt.certificate, target);
        if (!solves(P, sol, target)) fail(ErrorCode::ContradictoryEvidence, "split chain failed to solve the target");
        out.kind = ClassReport::Kind::Trivial;
        out.method = "split_chain";
        out.preimage = std::move(sol);
        return out;
    }
    const std::int64_t p = P.field()->p();
    const DiagonalForm form = principal_part(P);
    if (*v < 0 && *v > -p && form.min_height() >= 1 && certify_anisotropic(form).is_anisotropic()) {
        out.kind = ClassReport::Kind::Nontrivial;
        out.method = "exclusion";
        out.exclusion = exclude_target(P, target);
        return out;
    }
    const OracleResult r =
        brute_force_image(P, target, budgets.oracle_vmin, budgets.oracle_vmax, budgets.oracle_degree);
    if (r.in_image) {
        out.kind = ClassReport::Kind::Trivial;
        out.method = "oracle";
        out.preimage = r.preimage;
    }
    return out;
}

}  // namespace psplit
