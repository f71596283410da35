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

#include "psplit/isotropy.hpp"

#include <algorithm>
#include <functional>

namespace psplit {

const char* to_string(AnisotropyMethod m) noexcept {
    switch (m) {
        case AnisotropyMethod::EqualHeightLinearAlgebra: return "equal_height_linear_algebra";
        case AnisotropyMethod::ValuationSeparation: return "valuation_separation";
    }
    return "unknown";
}

AnisotropyVerdict AnisotropyVerdict::anisotropic(AnisotropyMethod method) {
    AnisotropyVerdict v;
    v.kind_ = Kind::Anisotropic;
    v.method_ = method;
    return v;
}

AnisotropyVerdict AnisotropyVerdict::isotropic(const DiagonalForm& form, std::vector<RatFn> witness) {
    if (!is_isotropy_witness(form, witness))
        fail(ErrorCode::InvalidInput, "claimed isotropy witness does not vanish on the form");
    AnisotropyVerdict v;
    v.kind_ = Kind::Isotropic;
    v.witness_ = std::move(witness);
    return v;
}

AnisotropyVerdict AnisotropyVerdict::unknown(unsigned search_bound) {
    AnisotropyVerdict v;
    v.kind_ = Kind::Unknown;
    v.bound_ = search_bound;
    return v;
}

AnisotropyVerdict AnisotropyVerdict::from_parts(Kind kind, AnisotropyMethod method, std::vector<RatFn> witness,
                                                unsigned search_bound) {
    AnisotropyVerdict v;
    v.kind_ = kind;
    v.method_ = method;
    v.witness_ = std::move(witness);
    v.bound_ = search_bound;
    return v;
}

bool is_isotropy_witness(const DiagonalForm& form, const std::vector<RatFn>& witness) {
    if (witness.size() != form.entries.size()) return false;
    if (std::all_of(witness.begin(), witness.end(), [](const RatFn& w) { return w.is_zero(); })) return false;
    return form.evaluate(witness).is_zero();
}

namespace {

void require_entries(const DiagonalForm& form) {
    if (form.entries.empty()) fail(ErrorCode::EmptyForm, "the form has no variables");
}

/// Row-reduces `m` over k in place, returning the pivot column of each
/// nonzero row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<RatFn>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        const RatFn inv = m[row][col].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const RatFn f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

EqualHeightRank equal_height_rank(const DiagonalForm& form) {
    require_entries(form);
    if (!form.equal_heights()) fail(ErrorCode::HeightMismatch, "equal-height decision applied to a mixed-height form");
    const unsigned m = form.entries.front().height;
    const std::size_t cols = form.entries.size();
    const std::size_t rows = static_cast<std::size_t>(checked_ppow(form.field->p(), m));

    // Column i holds the p^m-th roots of the coordinates of c_i over k^(p^m).
    // Taking roots is a field isomorphism k^(p^m) -> k, so the rank and the
    // kernel transfer, and a kernel vector mu gives sum c_i mu_i^(p^m) = 0.
    std::vector<std::vector<RatFn>> mat(rows, std::vector<RatFn>(cols, RatFn(form.field)));
    for (std::size_t i = 0; i < cols; ++i) {
        const auto parts = pm_decompose(form.entries[i].coeff, m);
        for (std::size_t j = 0; j < rows; ++j) {
            auto root = parts[j].p_root(m);
            if (!root) fail(ErrorCode::ContradictoryEvidence, "decomposition component outside k^(p^m)");
            mat[j][i] = std::move(*root);
        }
    }
    const auto pivots = row_reduce(mat, cols);
    EqualHeightRank out{pivots.size(), rows, cols, std::nullopt};
    if (pivots.size() == cols) return out;

    std::size_t free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
    std::vector<RatFn> mu(cols, RatFn(form.field));
    mu[free_col] = RatFn(form.field, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) mu[pivots[r]] = -mat[r][free_col];
    out.witness = std::move(mu);
    return out;
}

AnisotropyVerdict decide_equal_height(const DiagonalForm& form) {
    auto rank = equal_height_rank(form);
    if (!rank.witness) return AnisotropyVerdict::anisotropic(AnisotropyMethod::EqualHeightLinearAlgebra);
    return AnisotropyVerdict::isotropic(form, std::move(*rank.witness));
}

AnisotropyVerdict valuation_separation(const DiagonalForm& form) {
    require_entries(form);
    const auto& es = form.entries;
    // In a nontrivial zero, two nonzero terms share the minimal s-adic order:
    // ord(c_i) + p^m_i a = ord(c_j) + p^m_j b, so ord(c_i) = ord(c_j) mod p^min.
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto mod = static_cast<std::int64_t>(checked_ppow(form.field->p(), std::min(es[i].height, es[j].height)));
            const std::int64_t diff = *es[i].coeff.ord_s() - *es[j].coeff.ord_s();
            if (diff % mod == 0) return AnisotropyVerdict::unknown(0);
        }
    return AnisotropyVerdict::anisotropic(AnisotropyMethod::ValuationSeparation);
}

IsotropySearch search_isotropy(const DiagonalForm& form, unsigned degree_bound, std::uint64_t cap) {
    require_entries(form);
    const std::size_t r = form.entries.size();
    const std::uint64_t q = form.field->q();
    const unsigned wmax = degree_bound + 1;
    const FieldPtr& F = form.field;

    auto poly_of = [&](std::uint64_t code) {
        std::vector<FqElem> c;
        while (code) {
            c.push_back({static_cast<std::uint32_t>(code % q)});
            code /= q;
        }
        return RatFn(PolyS(F, std::move(c)));
    };
    auto qpow = [&](unsigned w) {
        std::uint64_t x = 1;
        for (unsigned i = 0; i < w; ++i) {
            if (x > (std::uint64_t{1} << 40)) return x;
            x *= q;
        }
        return x;
    };

    IsotropySearch out;
    std::vector<unsigned> weights(r, 0);
    std::vector<RatFn> point(r, RatFn(F));
    std::vector<RatFn> terms(r, RatFn(F));

    // Odometer over entry codes for a fixed weight profile; entry 0 slowest.
    auto scan_profile = [&]() -> bool {
        std::vector<std::uint64_t> lo(r), hi(r), cur(r);
        for (std::size_t i = 0; i < r; ++i) {
            lo[i] = weights[i] == 0 ? 0 : qpow(weights[i] - 1);
            hi[i] = weights[i] == 0 ? 1 : qpow(weights[i]);
            cur[i] = lo[i];
            point[i] = poly_of(cur[i]);
            terms[i] = form.entries[i].coeff * point[i].frobenius(form.entries[i].height);
        }
        for (;;) {
            if (out.scanned >= cap) {
                out.exhausted = false;
                return true;
            }
            ++out.scanned;
            RatFn sum(F);
            for (const auto& t : terms) sum += t;
            if (sum.is_zero()) {
                out.witness = point;
                return true;
            }
            std::size_t i = r;
            while (i-- > 0) {
                if (++cur[i] < hi[i]) break;
                cur[i] = lo[i];
                point[i] = poly_of(cur[i]);
                terms[i] = form.entries[i].coeff * point[i].frobenius(form.entries[i].height);
                if (i == 0) return false;
            }
            point[i] = poly_of(cur[i]);
            terms[i] = form.entries[i].coeff * point[i].frobenius(form.entries[i].height);
        }
    };

    // Weight profiles summing to `total`, lexicographically ascending.
    std::function<bool(std::size_t, unsigned)> profiles = [&](std::size_t idx, unsigned remaining) -> bool {
        if (idx + 1 == r) {
            if (remaining > wmax) return false;
            weights[idx] = remaining;
            return scan_profile();
        }
        for (unsigned w = 0; w <= std::min(wmax, remaining); ++w) {
            weights[idx] = w;
            if (profiles(idx + 1, remaining - w)) return true;
        }
        return false;
    };

    for (unsigned total = 1; total <= r * wmax; ++total)
        if (profiles(0, total)) break;
    if (out.witness && !is_isotropy_witness(form, *out.witness))
        fail(ErrorCode::ContradictoryEvidence, "search produced a non-vanishing witness");
    return out;
}

AnisotropyVerdict anisotropy_pipeline(const DiagonalForm& form, unsigned search_degree) {
    require_entries(form);
    if (form.equal_heights()) return decide_equal_height(form);
    auto sep = valuation_separation(form);
    if (sep.is_anisotropic()) return sep;
    auto found = search_isotropy(form, search_degree);
    if (found.witness) return AnisotropyVerdict::isotropic(form, std::move(*found.witness));
    return AnisotropyVerdict::unknown(search_degree);
}

// ---------------------------------------------------------------- split certification

namespace {

std::optional<std::size_t> linear_only_variable(const PPolynomial& Q) {
    for (std::size_t v = 0; v < Q.arity(); ++v)
        if (Q.occurs_only_linearly(v)) return v;
    return std::nullopt;
}

std::vector<Elimination> eliminations_for(const PPolynomial& Q, std::size_t linear) {
    std::vector<Elimination> out{{Elimination::Kind::Linear, linear}};
    for (std::size_t v = 0; v < Q.arity(); ++v)
        if (v != linear) out.push_back({Elimination::Kind::Free, v});
    return out;
}

}  // namespace

SplitAttempt certify_split(const PPolynomial& P, unsigned budget) {
    if (!P.is_separable()) fail(ErrorCode::NotSeparable, "split certification needs a separable p-polynomial");
    SplitAttempt out;
    PPolynomial Q = P;
    std::vector<Substitution> chain;
    for (;;) {
        if (auto v = linear_only_variable(Q)) {
            out.trace.push_back("variable " + std::to_string(*v) + " occurs only linearly; kernel is a graph over the rest");
            out.certificate = SplitCertificate{std::move(chain), eliminations_for(Q, *v)};
            return out;
        }
        if (out.steps_used >= budget) {
            out.trace.push_back("substitution budget of " + std::to_string(budget) + " exhausted");
            return out;
        }
        unsigned top = 0;
        for (std::size_t v = 0; v < Q.arity(); ++v)
            if (auto h = Q.max_height(v)) top = std::max(top, *h);
        DiagonalForm sub{Q.field(), {}};
        for (std::size_t v = 0; v < Q.arity(); ++v)
            if (Q.max_height(v) == top) sub.entries.push_back({v, Q.coeff(v, top), top});
        if (sub.entries.size() < 2) {
            out.trace.push_back("only one variable reaches height " + std::to_string(top) +
                                "; no equal-height reduction available");
            return out;
        }
        auto verdict = decide_equal_height(sub);
        if (!verdict.is_isotropic()) {
            out.trace.push_back("top-height subform is anisotropic; no reduction available");
            return out;
        }
        const auto& w = verdict.witness();
        // Pivot: prefer a variable that already has a linear term, then the highest index.
        std::optional<std::size_t> pivot;
        bool pivot_linear = false;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i].is_zero()) continue;
            const bool linear = !Q.coeff(sub.entries[i].var, 0).is_zero();
            if (!pivot || linear || !pivot_linear) {
                pivot = i;
                pivot_linear = linear;
            }
        }
        const std::size_t k = sub.entries[*pivot].var;
        std::vector<ElementaryStep> steps;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i == *pivot || w[i].is_zero()) continue;
            steps.push_back({ElementaryStep::Kind::Shear, sub.entries[i].var, k, 0, w[i] / w[*pivot]});
        }
        Substitution sigma = Substitution::from_chain(Q.field(), Q.arity(), std::move(steps));
        Q = substitute(Q, sigma);
        chain.push_back(std::move(sigma));
        ++out.steps_used;
        out.trace.push_back("equal-height reduction at height " + std::to_string(top) + " pivoting on variable " +
                            std::to_string(k));
    }
}

ReplayResult replay_split(const PPolynomial& P, const SplitCertificate& cert) {
    ReplayResult out;
    PPolynomial Q = P;
    for (std::size_t i = 0; i < cert.chain.size(); ++i) {
        const auto& sigma = cert.chain[i];
        if (!sigma.is_invertible()) {
            out.reason = "substitution " + std::to_string(i) + " carries no invertible chain";
            return out;
        }
        if (sigma.arity() != P.arity()) {
            out.reason = "substitution " + std::to_string(i) + " has the wrong arity";
            return out;
        }
        Substitution rebuilt = Substitution::from_chain(P.field(), P.arity(), *sigma.chain());
        Q = substitute(Q, rebuilt);
    }
    if (cert.eliminations.empty() || cert.eliminations.front().kind != Elimination::Kind::Linear) {
        out.reason = "the elimination order must start with a linear elimination";
        return out;
    }
    const std::size_t lin = cert.eliminations.front().var;
    if (lin >= Q.arity() || !Q.occurs_only_linearly(lin)) {
        out.reason = "variable " + std::to_string(lin) + " does not occur only linearly after the chain";
        return out;
    }
    std::vector<bool> seen(Q.arity(), false);
    seen[lin] = true;
    for (std::size_t i = 1; i < cert.eliminations.size(); ++i) {
        const auto& e = cert.eliminations[i];
        if (e.kind != Elimination::Kind::Free || e.var >= Q.arity() || seen[e.var]) {
            out.reason = "elimination entry " + std::to_string(i) + " is not a fresh free coordinate";
            return out;
        }
        seen[e.var] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        out.reason = "some coordinate is missing from the elimination order";
        return out;
    }
    out.ok = true;
    out.reduced = std::move(Q);
    return out;
}

}  // namespace psplit
