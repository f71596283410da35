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

#include "psplit/cohomology.hpp"

#include <algorithm>
#include <map>

namespace psplit {

AnisotropyVerdict certify_anisotropic(const DiagonalForm& form) {
    if (form.entries.empty()) fail(ErrorCode::EmptyForm, "the form has no variables");
    if (form.equal_heights()) return decide_equal_height(form);
    return valuation_separation(form);
}

ExclusionCertificate exclude_target(const PPolynomial& P, const LaurentSeries& target) {
    if (!P.is_separable()) fail(ErrorCode::NotSeparable, "exclusion needs a separable p-polynomial");
    DiagonalForm form = principal_part(P);
    const unsigned hmin = form.min_height();
    if (hmin == 0)
        fail(ErrorCode::PrincipalPartNotCertified, "some variable occurs only linearly; the principal part has height 0");
    AnisotropyVerdict evidence = certify_anisotropic(form);
    if (!evidence.is_anisotropic())
        fail(ErrorCode::PrincipalPartNotCertified, "principal part is not certified anisotropic");
    const std::int64_t p = P.field()->p();
    const auto v = target.valuation();
    if (!v || *v >= 0 || *v <= -p)
        fail(ErrorCode::TargetValuationOutOfRange,
             "target valuation must lie strictly between -" + std::to_string(p) + " and 0");

    ExclusionCertificate cert{target, form, evidence, *v, hmin,
                              -static_cast<std::int64_t>(checked_ppow(P.field()->p(), hmin)), {}};
    for (const auto& e : form.entries) cert.leading_multipliers.push_back(checked_ppow(P.field()->p(), e.height));
    return cert;
}

Check verify_exclusion(const PPolynomial& P, const ExclusionCertificate& cert) {
    auto bad = [](std::string why) { return Check{false, std::move(why)}; };
    if (!P.is_separable()) return bad("polynomial is not separable");
    if (P.is_zero()) return bad("polynomial is zero");
    const DiagonalForm form = principal_part(P);
    if (!(form == cert.form)) return bad("recorded form differs from the principal part of the input");
    if (form.min_height() == 0 || cert.min_height != form.min_height()) return bad("principal heights must all be >= 1");
    const std::uint32_t p = P.field()->p();
    if (cert.valuation_bound != -static_cast<std::int64_t>(checked_ppow(p, form.min_height())))
        return bad("valuation bound does not match -p^min_height");
    if (cert.valuation_bound > -static_cast<std::int64_t>(p)) return bad("valuation bound above -p");
    if (cert.leading_multipliers.size() != form.entries.size()) return bad("leading multipliers have the wrong length");
    for (std::size_t i = 0; i < form.entries.size(); ++i)
        if (cert.leading_multipliers[i] != checked_ppow(p, form.entries[i].height))
            return bad("leading multiplier " + std::to_string(i) + " is not p^height");

    const auto v = cert.target.valuation();
    if (!v || *v != cert.target_valuation) return bad("recorded target valuation is wrong");
    if (*v >= 0 || *v <= -static_cast<std::int64_t>(p)) return bad("target valuation outside (-p, 0)");
    if (cert.valuation_bound >= *v) return bad("valuation bound does not separate the target");

    if (!cert.evidence.is_anisotropic()) return bad("attached evidence is not an anisotropy verdict");
    switch (cert.evidence.method()) {
        case AnisotropyMethod::EqualHeightLinearAlgebra: {
            if (!form.equal_heights()) return bad("equal-height evidence attached to a mixed-height form");
            const auto rank = equal_height_rank(form);
            if (rank.rank != rank.cols) return bad("coefficients are dependent over k^(p^m): the form is isotropic");
            break;
        }
        case AnisotropyMethod::ValuationSeparation:
            if (!valuation_separation(form).is_anisotropic()) return bad("valuation separation does not hold");
            break;
    }
    return {true, ""};
}

bool solves(const PPolynomial& P, const std::vector<LaurentSeries>& alpha, const LaurentSeries& target) {
    if (alpha.size() != P.arity()) return false;
    const LaurentSeries residual = P.evaluate(alpha) - target;
    return residual.is_tracked_zero() && residual.end() >= target.end();
}

std::optional<std::vector<LaurentSeries>> solve_positive_valuation(const PPolynomial& P, const LaurentSeries& target) {
    if (!P.is_separable()) fail(ErrorCode::NotSeparable, "solver needs a separable p-polynomial");
    const auto v = target.valuation();
    if (v && *v < 1) fail(ErrorCode::TargetValuationOutOfRange, "contraction solver needs v(target) >= 1");
    std::optional<std::size_t> var;
    for (const auto& t : P.terms())
        if (t.height == 0) {
            var = t.var;
            break;
        }
    if (!var) fail(ErrorCode::NoLinearTerm, "no variable has a degree-1 monomial");
    const RatFn c0_inv = P.coeff(*var, 0).inverse();

    const FieldPtr& F = P.field();
    const std::int64_t end = target.end();
    const std::int64_t lo = std::min<std::int64_t>(0, end - 1);
    std::vector<LaurentSeries> alpha(P.arity(), LaurentSeries::zero(F, lo, end));
    PPolynomial higher(F, P.arity(), [&] {
        std::vector<Term> ts;
        for (const auto& t : P.terms())
            if (t.var == *var && t.height > 0) ts.push_back(t);
        return ts;
    }());
    // v(x) >= 1 makes x -> higher(x) raise valuations by a factor >= p, so the
    // map contracts and at most end() rounds are needed.
    const std::int64_t rounds = std::max<std::int64_t>(end, 1) + 1;
    for (std::int64_t i = 0; i < rounds; ++i) {
        LaurentSeries next = (target - higher.evaluate(alpha)).scaled(c0_inv);
        if (next.end() > end) next = next.truncated(end);
        if (next.agrees_with(alpha[*var]) && next.end() == alpha[*var].end()) break;
        alpha[*var] = next;
    }
    if (!solves(P, alpha, target)) return std::nullopt;
    return alpha;
}

std::vector<LaurentSeries> solve_split_torsor(const PPolynomial& P, const SplitCertificate& cert,
                                              const LaurentSeries& target,
                                              const std::vector<LaurentSeries>& free_values) {
    const ReplayResult replay = replay_split(P, cert);
    if (!replay.ok) fail(ErrorCode::InvalidInput, "split certificate does not replay: " + replay.reason);
    const PPolynomial& Q = *replay.reduced;
    const FieldPtr& F = P.field();
    const std::size_t lin = cert.eliminations.front().var;
    const std::int64_t end = target.end();
    const LaurentSeries zero = LaurentSeries::zero(F, std::min<std::int64_t>(0, end - 1), end);

    std::vector<LaurentSeries> beta(P.arity(), zero);
    if (!free_values.empty()) {
        if (free_values.size() != P.arity()) fail(ErrorCode::ArityMismatch, "free values have the wrong length");
        for (std::size_t i = 0; i < P.arity(); ++i)
            if (i != lin) beta[i] = free_values[i];
    }
    const LaurentSeries rest = Q.evaluate(beta);
    beta[lin] = (target - rest).scaled(Q.coeff(lin, 0).inverse());

    Substitution total = Substitution::identity(F, P.arity());
    for (const auto& sigma : cert.chain) total = compose(total, Substitution::from_chain(F, P.arity(), *sigma.chain()));
    return total.apply(beta);
}

// ---------------------------------------------------------------- bounded image oracle

namespace {

struct ModP {
    std::uint64_t p;
    std::uint64_t inv(std::uint64_t a) const {
        std::uint64_t r = 1, n = p - 2;
        while (n) {
            if (n & 1) r = r * a % p;
            a = a * a % p;
            n >>= 1;
        }
        return r;
    }
};

/// Solves A x = b over F_p (A given column-wise), returning one solution.
std::optional<std::vector<std::uint64_t>> solve_mod_p(std::vector<std::vector<std::uint64_t>> rows, std::size_t cols,
                                                      std::uint64_t p) {
    // rows[i] has cols + 1 entries, the last being b_i.
    const ModP fp{p};
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t sel = row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[row], rows[sel]);
        const std::uint64_t inv = fp.inv(rows[row][col]);
        for (auto& x : rows[row]) x = x * inv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col] == 0) continue;
            const std::uint64_t f = rows[r][col];
            for (std::size_t c = col; c <= cols; ++c) rows[r][c] = (rows[r][c] + (p - f) * rows[row][c]) % p;
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows.size(); ++r)
        if (rows[r][cols] != 0) return std::nullopt;
    std::vector<std::uint64_t> x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][cols];
    return x;
}

PolyS lcm(const PolyS& a, const PolyS& b) {
    return PolyS::divmod(a * b, PolyS::gcd(a, b)).first.monic();
}

struct BoxSlot {
    std::size_t var;
    std::int64_t exponent;
};

std::vector<LaurentSeries> series_from_coeffs(const FieldPtr& F, std::size_t arity,
                                              const std::vector<BoxSlot>& slots, const std::vector<RatFn>& values,
                                              std::int64_t vmin, std::int64_t end) {
    std::vector<std::map<std::int64_t, RatFn>> terms(arity);
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (!values[i].is_zero()) terms[slots[i].var].emplace(slots[i].exponent, values[i]);
    std::vector<LaurentSeries> out;
    for (const auto& t : terms) {
        auto s = LaurentSeries::from_terms(F, t, end);
        if (s.anchor() > vmin) s = LaurentSeries::zero(F, vmin, end) + s;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

OracleResult brute_force_image(const PPolynomial& P, const LaurentSeries& target, std::int64_t vmin, std::int64_t vmax,
                               unsigned deg, OracleOptions options) {
    if (vmax < vmin) fail(ErrorCode::InvalidInput, "empty exponent window");
    if (deg > 64) fail(ErrorCode::SearchSpaceTooLarge, "coefficient degree bound too large");
    const FieldPtr& F = P.field();
    const std::uint64_t p = F->p();
    const unsigned e = F->degree();
    const std::int64_t end = target.end();
    // alpha is a Laurent polynomial, so any end >= vmax + 1 that keeps the
    // Frobenius windows at or beyond the target's is exact enough.
    const std::int64_t alpha_end = std::max<std::int64_t>({end, vmax + 1, 1});

    std::vector<BoxSlot> slots;
    for (std::size_t i = 0; i < P.arity(); ++i)
        for (std::int64_t x = vmin; x <= vmax; ++x) slots.push_back({i, x});

    OracleResult out;
    out.box_log_p = static_cast<std::uint64_t>(slots.size()) * (deg + 1) * e;

    if (options.mode == OracleMode::Enumerate) {
        const std::uint64_t cap = options.cap ? options.cap : default_enumerate_cap;
        const std::uint64_t per_slot = [&] {
            std::uint64_t n = 1;
            for (unsigned i = 0; i <= deg; ++i) {
                n *= F->q();
                if (n > cap) fail(ErrorCode::SearchSpaceTooLarge, "box exceeds the enumeration cap");
            }
            return n;
        }();
        std::uint64_t box = 1;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            box *= per_slot;
            if (box > cap)
                fail(ErrorCode::SearchSpaceTooLarge,
                     "box of p^" + std::to_string(out.box_log_p) + " tuples exceeds the enumeration cap");
        }
        auto poly_of = [&](std::uint64_t code) {
            std::vector<FqElem> c;
            while (code) {
                c.push_back({static_cast<std::uint32_t>(code % F->q())});
                code /= F->q();
            }
            return RatFn(PolyS(F, std::move(c)));
        };
        std::vector<std::uint64_t> codes(slots.size(), 0);
        std::vector<RatFn> values(slots.size(), RatFn(F));
        for (;;) {
            ++out.scanned;
            auto alpha = series_from_coeffs(F, P.arity(), slots, values, std::min<std::int64_t>(vmin, 0), alpha_end);
            if (solves(P, alpha, target)) {
                out.in_image = true;
                out.preimage = std::move(alpha);
                return out;
            }
            std::size_t i = slots.size();
            while (i-- > 0) {
                if (++codes[i] < per_slot) {
                    values[i] = poly_of(codes[i]);
                    break;
                }
                codes[i] = 0;
                values[i] = RatFn(F);
            }
            if (i == static_cast<std::size_t>(-1)) return out;
        }
    }

    const std::uint64_t cap = options.cap ? options.cap : default_span_cap;
    out.generators = static_cast<std::uint64_t>(slots.size()) * (deg + 1) * e;
    if (out.generators > cap)
        fail(ErrorCode::SearchSpaceTooLarge,
             std::to_string(out.generators) + " basis images exceed the cap of " + std::to_string(cap));

    // Basis of the box over F_p: w^c s^d t^x in coordinate i.
    struct Gen {
        std::size_t slot;
        RatFn value;
    };
    std::vector<Gen> gens;
    for (std::size_t sl = 0; sl < slots.size(); ++sl)
        for (unsigned d = 0; d <= deg; ++d)
            for (unsigned c = 0; c < e; ++c) {
                std::uint32_t code = 1;
                for (unsigned k = 0; k < c; ++k) code *= static_cast<std::uint32_t>(p);
                gens.push_back({sl, RatFn(PolyS::monomial(F, FqElem{code}, d))});
            }

    // Direct images P(b t^x) = sum_j c_ij b^(p^j) t^(x p^j), kept below end.
    std::vector<std::map<std::int64_t, RatFn>> images(gens.size());
    PolyS denom = PolyS::constant(F, F->one());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const BoxSlot& sl = slots[gens[g].slot];
        for (const auto& t : P.terms()) {
            if (t.var != sl.var) continue;
            const std::int64_t k = static_cast<std::int64_t>(checked_ppow(p, t.height));
            const std::int64_t ex = sl.exponent * k;
            if (ex >= end) continue;
            RatFn c = t.coeff * gens[g].value.frobenius(t.height);
            auto it = images[g].find(ex);
            if (it == images[g].end())
                images[g].emplace(ex, std::move(c));
            else
                it->second += c;
        }
        for (const auto& [ex, c] : images[g]) denom = lcm(denom, c.denominator());
    }
    for (std::int64_t ex = target.anchor(); ex < end; ++ex) denom = lcm(denom, target.coeff_at(ex).denominator());
    const RatFn L(denom);

    // Rows indexed by (t-exponent, s-degree, F_p digit).
    std::map<std::tuple<std::int64_t, std::size_t, unsigned>, std::size_t> row_of;
    std::vector<std::vector<std::uint64_t>> rows;
    auto add_entries = [&](const std::map<std::int64_t, RatFn>& vec, std::size_t col) {
        for (const auto& [ex, c] : vec) {
            const RatFn scaled = c * L;
            if (!scaled.is_polynomial()) fail(ErrorCode::ContradictoryEvidence, "common denominator failed to clear");
            const auto& cs = scaled.numerator().coeffs();
            for (std::size_t d = 0; d < cs.size(); ++d) {
                std::uint32_t v = cs[d].value;
                for (unsigned dig = 0; dig < e; ++dig, v /= static_cast<std::uint32_t>(p)) {
                    if (v % p == 0) continue;
                    auto key = std::make_tuple(ex, d, dig);
                    auto it = row_of.find(key);
                    if (it == row_of.end()) {
                        it = row_of.emplace(key, rows.size()).first;
                        rows.emplace_back(gens.size() + 1, 0);
                    }
                    rows[it->second][col] = (rows[it->second][col] + v % p) % p;
                }
            }
        }
    };
    for (std::size_t g = 0; g < gens.size(); ++g) add_entries(images[g], g);
    std::map<std::int64_t, RatFn> tvec;
    for (std::int64_t ex = target.anchor(); ex < end; ++ex)
        if (!target.coeff_at(ex).is_zero()) tvec.emplace(ex, target.coeff_at(ex));
    add_entries(tvec, gens.size());

    auto sol = solve_mod_p(std::move(rows), gens.size(), p);
    out.scanned = gens.size();
    if (!sol) return out;

    std::vector<RatFn> values(slots.size(), RatFn(F));
    for (std::size_t g = 0; g < gens.size(); ++g)
        if ((*sol)[g]) values[gens[g].slot] += gens[g].value * RatFn(F, static_cast<std::int64_t>((*sol)[g]));
    auto alpha = series_from_coeffs(F, P.arity(), slots, values, std::min<std::int64_t>(vmin, 0), alpha_end);
    if (!solves(P, alpha, target)) fail(ErrorCode::ContradictoryEvidence, "span solution does not re-verify");
    out.in_image = true;
    out.preimage = std::move(alpha);
    return out;
}

std::optional<std::vector<LaurentSeries>> H1Class::equal_witness(const H1Class& other, std::int64_t vmin,
                                                                 std::int64_t vmax, unsigned deg) const {
    if (!(presentation == other.presentation)) fail(ErrorCode::InvalidInput, "classes of different groups");
    auto r = brute_force_image(presentation, representative - other.representative, vmin, vmax, deg);
    return r.preimage;
}

}  // namespace psplit
