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

#include "psplit/serialize.hpp"

#include <set>

#include "psplit/parse.hpp"

namespace psplit {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const json& member(const json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

template <class T>
T get(const json& j, const char* key) {
    const json& v = member(j, key);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        bad(std::string("field '") + key + "' has the wrong type");
    }
}

std::int64_t get_int(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
}

std::uint64_t get_uint(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        bad(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

const json& get_array(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_array()) bad(std::string("field '") + key + "' must be an array");
    return v;
}

RatFn ratfn_from(const json& v, const FieldPtr& F) {
    if (!v.is_string()) bad("coefficients must be literal strings");
    return parse_ratfn(v.get<std::string>(), F);
}

std::vector<RatFn> ratfns_from(const json& arr, const FieldPtr& F) {
    if (!arr.is_array()) bad("expected an array of coefficients");
    std::vector<RatFn> out;
    for (const auto& v : arr) out.push_back(ratfn_from(v, F));
    return out;
}

json ratfns_to(const std::vector<RatFn>& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(c.to_string());
    return arr;
}

json field_to_json(const GroundField& F, json j) {
    j["p"] = F.p();
    j["q"] = F.q();
    if (F.degree() > 1) j["modulus"] = F.modulus();
    return j;
}

json form_to_json(const DiagonalForm& form) {
    json arr = json::array();
    for (const auto& e : form.entries)
        arr.push_back({{"var", e.var}, {"height", e.height}, {"coeff", e.coeff.to_string()}});
    return arr;
}

DiagonalForm form_from_json(const json& arr, const FieldPtr& F) {
    if (!arr.is_array()) bad("form must be an array");
    DiagonalForm form{F, {}};
    for (const auto& e : arr)
        form.entries.push_back({static_cast<std::size_t>(get_uint(e, "var")), ratfn_from(member(e, "coeff"), F),
                                static_cast<unsigned>(get_uint(e, "height"))});
    return form;
}

const char* kind_name(ElementaryStep::Kind k) { return k == ElementaryStep::Kind::Shear ? "shear" : "scale"; }

json series_list_to_json(const std::vector<LaurentSeries>& v) {
    json arr = json::array();
    for (const auto& a : v) arr.push_back(series_to_json(a));
    return arr;
}

std::vector<LaurentSeries> series_list_from_json(const json& arr, const FieldPtr& F) {
    if (!arr.is_array()) bad("expected an array of series");
    std::vector<LaurentSeries> out;
    for (const auto& a : arr) out.push_back(series_from_json(a, F));
    return out;
}

template <class Fn>
auto guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        bad(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

FieldPtr field_from_json(const json& j) {
    return guarded([&] {
        const std::uint64_t p = get_uint(j, "p");
        const std::uint64_t q = j.contains("q") ? get_uint(j, "q") : p;
        if (p < 2 || p >= (std::uint64_t{1} << 31)) fail(ErrorCode::InvalidInput, "p must be a prime below 2^31");
        if (!j.contains("modulus")) {
            if (q != p) fail(ErrorCode::InvalidInput, "q > p needs a 'modulus' polynomial for F_q");
            return GroundField::prime(static_cast<std::uint32_t>(p));
        }
        const auto modulus = get<std::vector<std::uint32_t>>(j, "modulus");
        if (modulus.size() < 2) fail(ErrorCode::InvalidInput, "modulus must have degree >= 1");
        if (modulus.size() == 2) {
            if (q != p) fail(ErrorCode::InvalidInput, "q does not match the degree of the modulus");
            return GroundField::prime(static_cast<std::uint32_t>(p));
        }
        FieldPtr F = GroundField::extension(static_cast<std::uint32_t>(p), modulus);
        if (F->q() != q) fail(ErrorCode::InvalidInput, "q does not match p^deg(modulus)");
        return F;
    });
}

PolynomialInput polynomial_from_json(const json& j) {
    return guarded([&] {
        FieldPtr F = field_from_json(j);
        const auto variables = get<std::vector<std::string>>(j, "variables");
        if (variables.empty()) fail(ErrorCode::InvalidInput, "at least one variable is required");
        std::set<std::string> seen;
        for (const auto& v : variables) {
            if (v.empty()) fail(ErrorCode::InvalidInput, "variable names must be non-empty");
            if (!seen.insert(v).second) fail(ErrorCode::InvalidInput, "duplicate variable '" + v + "'");
        }
        std::vector<Term> terms;
        for (const auto& t : get_array(j, "terms")) {
            const auto name = get<std::string>(t, "var");
            auto it = std::find(variables.begin(), variables.end(), name);
            if (it == variables.end()) fail(ErrorCode::InvalidInput, "term uses undeclared variable '" + name + "'");
            const std::int64_t h = get_int(t, "height");
            if (h < 0) fail(ErrorCode::InvalidInput, "heights must be >= 0");
            terms.push_back({static_cast<std::size_t>(it - variables.begin()), static_cast<unsigned>(h),
                             ratfn_from(member(t, "coeff"), F)});
        }
        return PolynomialInput{PPolynomial(F, variables.size(), std::move(terms)), variables};
    });
}

json polynomial_to_json(const PPolynomial& P, const std::vector<std::string>& variables) {
    if (variables.size() != P.arity()) fail(ErrorCode::ArityMismatch, "variable names do not match the arity");
    json j = field_to_json(*P.field(), json::object());
    j["variables"] = variables;
    json terms = json::array();
    for (const auto& t : P.terms())
        terms.push_back({{"var", variables[t.var]}, {"height", t.height}, {"coeff", t.coeff.to_string()}});
    j["terms"] = std::move(terms);
    return j;
}

json series_to_json(const LaurentSeries& a) {
    return {{"anchor", a.anchor()}, {"end", a.end()}, {"coeffs", ratfns_to(a.coeffs())}};
}

LaurentSeries series_from_json(const json& j, const FieldPtr& F) {
    return guarded([&] {
        const std::int64_t anchor = get_int(j, "anchor");
        auto coeffs = ratfns_from(get_array(j, "coeffs"), F);
        LaurentSeries a(F, anchor, std::move(coeffs));
        if (j.contains("end") && get_int(j, "end") != a.end()) bad("series 'end' disagrees with its coefficients");
        return a;
    });
}

json split_to_json(const SplitCertificate& c) {
    json chain = json::array();
    for (const auto& sigma : c.chain) {
        json steps = json::array();
        if (!sigma.chain()) fail(ErrorCode::InvalidInput, "split chain holds a non-invertible substitution");
        for (const auto& s : *sigma.chain())
            steps.push_back({{"kind", kind_name(s.kind)},
                             {"target", s.target},
                             {"source", s.source},
                             {"height", s.height},
                             {"coeff", s.coeff.to_string()}});
        chain.push_back({{"steps", std::move(steps)}});
    }
    json elims = json::array();
    for (const auto& e : c.eliminations)
        elims.push_back({{"kind", e.kind == Elimination::Kind::Linear ? "linear" : "free"}, {"var", e.var}});
    return {{"chain", std::move(chain)}, {"eliminations", std::move(elims)}};
}

SplitCertificate split_from_json(const json& j, const FieldPtr& F, std::size_t arity) {
    return guarded([&] {
        SplitCertificate c;
        for (const auto& sub : get_array(j, "chain")) {
            std::vector<ElementaryStep> steps;
            for (const auto& s : get_array(sub, "steps")) {
                const auto kind = get<std::string>(s, "kind");
                if (kind != "shear" && kind != "scale") bad("unknown step kind '" + kind + "'");
                steps.push_back({kind == "shear" ? ElementaryStep::Kind::Shear : ElementaryStep::Kind::Scale,
                                 static_cast<std::size_t>(get_uint(s, "target")),
                                 static_cast<std::size_t>(get_uint(s, "source")),
                                 static_cast<unsigned>(get_uint(s, "height")), ratfn_from(member(s, "coeff"), F)});
            }
            c.chain.push_back(Substitution::from_chain(F, arity, std::move(steps)));
        }
        for (const auto& e : get_array(j, "eliminations")) {
            const auto kind = get<std::string>(e, "kind");
            if (kind != "linear" && kind != "free") bad("unknown elimination kind '" + kind + "'");
            c.eliminations.push_back({kind == "linear" ? Elimination::Kind::Linear : Elimination::Kind::Free,
                                      static_cast<std::size_t>(get_uint(e, "var"))});
        }
        return c;
    });
}

json verdict_to_json(const AnisotropyVerdict& v) {
    switch (v.kind()) {
        case AnisotropyVerdict::Kind::Anisotropic: return {{"kind", "anisotropic"}, {"method", to_string(v.method())}};
        case AnisotropyVerdict::Kind::Isotropic: return {{"kind", "isotropic"}, {"witness", ratfns_to(v.witness())}};
        case AnisotropyVerdict::Kind::Unknown: return {{"kind", "unknown"}, {"search_bound", v.search_bound()}};
    }
    return {};
}

AnisotropyVerdict verdict_from_json(const json& j, const FieldPtr& F) {
    return guarded([&] {
        const auto kind = get<std::string>(j, "kind");
        if (kind == "anisotropic") {
            const auto m = get<std::string>(j, "method");
            AnisotropyMethod method;
            if (m == to_string(AnisotropyMethod::EqualHeightLinearAlgebra))
                method = AnisotropyMethod::EqualHeightLinearAlgebra;
            else if (m == to_string(AnisotropyMethod::ValuationSeparation))
                method = AnisotropyMethod::ValuationSeparation;
            else
                bad("unknown anisotropy method '" + m + "'");
            return AnisotropyVerdict::from_parts(AnisotropyVerdict::Kind::Anisotropic, method, {}, 0);
        }
        if (kind == "isotropic")
            return AnisotropyVerdict::from_parts(AnisotropyVerdict::Kind::Isotropic,
                                                 AnisotropyMethod::EqualHeightLinearAlgebra,
                                                 ratfns_from(get_array(j, "witness"), F), 0);
        if (kind == "unknown")
            return AnisotropyVerdict::from_parts(AnisotropyVerdict::Kind::Unknown,
                                                 AnisotropyMethod::EqualHeightLinearAlgebra, {},
                                                 static_cast<unsigned>(get_uint(j, "search_bound")));
        bad("unknown verdict kind '" + kind + "'");
    });
}

json exclusion_to_json(const ExclusionCertificate& c) {
    return {{"target", series_to_json(c.target)},
            {"form", form_to_json(c.form)},
            {"evidence", verdict_to_json(c.evidence)},
            {"target_valuation", c.target_valuation},
            {"min_height", c.min_height},
            {"valuation_bound", c.valuation_bound},
            {"leading_multipliers", c.leading_multipliers}};
}

ExclusionCertificate exclusion_from_json(const json& j, const FieldPtr& F) {
    return guarded([&] {
        return ExclusionCertificate{series_from_json(member(j, "target"), F),
                                    form_from_json(member(j, "form"), F),
                                    verdict_from_json(member(j, "evidence"), F),
                                    get_int(j, "target_valuation"),
                                    static_cast<unsigned>(get_uint(j, "min_height")),
                                    get_int(j, "valuation_bound"),
                                    get<std::vector<std::uint64_t>>(j, "leading_multipliers")};
    });
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["verdict"] = to_string(c.verdict);
    j["version"] = c.version;
    j["seed"] = c.budgets.seed;
    j["input"] = polynomial_to_json(c.input, c.variables);
    j["budgets"] = {{"precision", c.budgets.precision},           {"split_steps", c.budgets.split_steps},
                    {"search_degree", c.budgets.search_degree},   {"torsor_samples", c.budgets.torsor_samples},
                    {"oracle_vmin", c.budgets.oracle_vmin},       {"oracle_vmax", c.budgets.oracle_vmax},
                    {"oracle_degree", c.budgets.oracle_degree}};
    json ev;
    if (c.split) {
        ev["kind"] = "split";
        ev["split"] = split_to_json(*c.split);
        json samples = json::array();
        for (const auto& s : c.samples)
            samples.push_back({{"method", s.method == TorsorSample::Method::Contraction ? "contraction" : "split_chain"},
                               {"target", series_to_json(s.target)},
                               {"solution", series_list_to_json(s.solution)}});
        ev["torsor_samples"] = std::move(samples);
    } else if (c.exclusion) {
        ev["kind"] = "exclusion";
        ev["exclusion"] = exclusion_to_json(*c.exclusion);
        if (c.spot_check)
            ev["oracle_spot_check"] = {{"vmin", c.spot_check->vmin},
                                       {"vmax", c.spot_check->vmax},
                                       {"degree", c.spot_check->degree},
                                       {"generators", c.spot_check->generators},
                                       {"result", "NotInWindow"}};
    } else {
        ev["kind"] = "none";
    }
    j["evidence"] = std::move(ev);
    json d;
    d["principal_part"] = form_to_json(principal_part(c.input));
    if (c.diagnostics.principal) d["principal_verdict"] = verdict_to_json(*c.diagnostics.principal);
    d["split_trace"] = c.diagnostics.split_trace;
    d["split_steps_used"] = c.diagnostics.split_steps_used;
    j["diagnostics"] = std::move(d);
    return j;
}

Certificate certificate_from_json(const json& j) {
    return guarded([&] {
        PolynomialInput in = polynomial_from_json(member(j, "input"));
        const FieldPtr F = in.poly.field();
        Budgets b;
        const json& bj = member(j, "budgets");
        b.precision = get_int(bj, "precision");
        b.split_steps = static_cast<unsigned>(get_uint(bj, "split_steps"));
        b.search_degree = static_cast<unsigned>(get_uint(bj, "search_degree"));
        b.torsor_samples = static_cast<unsigned>(get_uint(bj, "torsor_samples"));
        b.oracle_vmin = get_int(bj, "oracle_vmin");
        b.oracle_vmax = get_int(bj, "oracle_vmax");
        b.oracle_degree = static_cast<unsigned>(get_uint(bj, "oracle_degree"));
        b.seed = get_uint(j, "seed");

        Certificate c{verdict_from_string(get<std::string>(j, "verdict")),
                      in.poly,
                      in.variables,
                      get<std::string>(j, "version"),
                      b,
                      {},
                      {},
                      {},
                      {},
                      {}};
        const json& ev = member(j, "evidence");
        const auto kind = get<std::string>(ev, "kind");
        if (kind == "split") {
            c.split = split_from_json(member(ev, "split"), F, in.poly.arity());
            for (const auto& s : get_array(ev, "torsor_samples")) {
                const auto m = get<std::string>(s, "method");
                if (m != "contraction" && m != "split_chain") bad("unknown sample method '" + m + "'");
                c.samples.push_back({m == "contraction" ? TorsorSample::Method::Contraction
                                                        : TorsorSample::Method::SplitChain,
                                     series_from_json(member(s, "target"), F),
                                     series_list_from_json(member(s, "solution"), F)});
            }
        } else if (kind == "exclusion") {
            c.exclusion = exclusion_from_json(member(ev, "exclusion"), F);
            if (ev.contains("oracle_spot_check")) {
                const json& sc = ev["oracle_spot_check"];
                c.spot_check = OracleSpotCheck{get_int(sc, "vmin"), get_int(sc, "vmax"),
                                               static_cast<unsigned>(get_uint(sc, "degree")),
                                               get_uint(sc, "generators")};
            }
        } else if (kind != "none") {
            bad("unknown evidence kind '" + kind + "'");
        }
        const json& d = member(j, "diagnostics");
        if (d.contains("principal_verdict")) c.diagnostics.principal = verdict_from_json(d["principal_verdict"], F);
        c.diagnostics.split_trace = get<std::vector<std::string>>(d, "split_trace");
        c.diagnostics.split_steps_used = static_cast<unsigned>(get_uint(d, "split_steps_used"));
        return c;
    });
}

FiniteGroupTable group_from_json(const json& j) {
    return guarded([&] {
        const std::uint64_t n = get_uint(j, "order");
        auto table = get<std::vector<std::vector<std::uint32_t>>>(j, "table");
        if (table.size() != n) fail(ErrorCode::InvalidGroupTable, "table size does not match 'order'");
        FiniteGroupTable G(std::move(table));
        if (j.contains("identity") && get_uint(j, "identity") != G.identity())
            fail(ErrorCode::InvalidGroupTable, "declared identity is not the identity of the table");
        return G;
    });
}

json group_to_json(const FiniteGroupTable& G) {
    return {{"order", G.order()}, {"identity", G.identity()}, {"table", G.table()}};
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace psplit
