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

#include "psplit/psplit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "psplit/parse.hpp"
#include "psplit/serialize.hpp"

struct psplit_polynomial {
    psplit::PolynomialInput in;
};

struct psplit_certificate {
    psplit::Certificate cert;
};

struct psplit_group {
    psplit::FiniteGroupTable table;
};

namespace {

thread_local std::string last_error;

psplit_status status_of(psplit::ErrorCode code) { return static_cast<psplit_status>(static_cast<int>(code) + 1); }

template <class Fn>
psplit_status guard(Fn&& fn) {
    try {
        last_error.clear();
        return fn();
    } catch (const psplit::Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return PSPLIT_E_INTERNAL;
    } catch (const std::exception& e) {
        last_error = std::string("internal error: ") + e.what();
        return PSPLIT_E_INTERNAL;
    }
}

psplit_status null_argument(const char* what) {
    last_error = std::string("null argument: ") + what;
    return PSPLIT_E_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

psplit::json parse_json(const char* text) {
    try {
        return psplit::json::parse(text);
    } catch (const psplit::json::exception& e) {
        psplit::fail(psplit::ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
}

psplit::Budgets budgets_of(const psplit_options* opts) {
    psplit_options o;
    psplit_options_init(&o);
    if (opts) o = *opts;
    psplit::Budgets b;
    b.precision = o.precision;
    b.split_steps = o.budget;
    b.search_degree = o.search_degree;
    b.seed = o.seed;
    b.torsor_samples = o.torsor_samples;
    if (b.precision < 1) psplit::fail(psplit::ErrorCode::InvalidInput, "precision must be >= 1");
    return b;
}

}  // namespace

extern "C" {

void psplit_options_init(psplit_options* opts) {
    if (!opts) return;
    const psplit::Budgets b;
    opts->precision = b.precision;
    opts->budget = b.split_steps;
    opts->search_degree = b.search_degree;
    opts->seed = b.seed;
    opts->torsor_samples = b.torsor_samples;
}

const char* psplit_version(void) { return psplit::tool_version; }

const char* psplit_status_string(psplit_status status) {
    switch (status) {
        case PSPLIT_OK: return "OK";
        case PSPLIT_E_NULL_ARGUMENT: return "NullArgument";
        case PSPLIT_E_INTERNAL: return "Internal";
        default: break;
    }
    if (status > PSPLIT_OK && status <= PSPLIT_E_CONTRADICTORY_EVIDENCE)
        return psplit::to_string(static_cast<psplit::ErrorCode>(static_cast<int>(status) - 1));
    return "Unknown";
}

const char* psplit_last_error(void) { return last_error.c_str(); }

void psplit_string_free(char* s) { std::free(s); }

psplit_status psplit_polynomial_from_json(const char* json, psplit_polynomial** out) {
    if (!json) return null_argument("json");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guard([&] {
        *out = new psplit_polynomial{psplit::polynomial_from_json(parse_json(json))};
        return PSPLIT_OK;
    });
}

psplit_status psplit_polynomial_to_json(const psplit_polynomial* poly, char** out) {
    if (!poly) return null_argument("poly");
    if (!out) return null_argument("out");
    return guard([&] {
        *out = copy_string(psplit::dump(psplit::polynomial_to_json(poly->in.poly, poly->in.variables)));
        return PSPLIT_OK;
    });
}

psplit_status psplit_polynomial_to_string(const psplit_polynomial* poly, char** out) {
    if (!poly) return null_argument("poly");
    if (!out) return null_argument("out");
    return guard([&] {
        *out = copy_string(poly->in.poly.to_string(poly->in.variables));
        return PSPLIT_OK;
    });
}

int psplit_polynomial_equal(const psplit_polynomial* a, const psplit_polynomial* b) {
    if (!a || !b) return 0;
    return a->in.poly == b->in.poly && a->in.poly.field()->same_as(*b->in.poly.field());
}

void psplit_polynomial_free(psplit_polynomial* poly) { delete poly; }

psplit_status psplit_classify(const psplit_polynomial* poly, const psplit_options* opts, psplit_certificate** out) {
    if (!poly) return null_argument("poly");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guard([&] {
        *out = new psplit_certificate{psplit::classify(poly->in.poly, budgets_of(opts), poly->in.variables)};
        return PSPLIT_OK;
    });
}

psplit_verdict psplit_certificate_verdict(const psplit_certificate* cert) {
    if (!cert) return PSPLIT_UNDECIDED;
    switch (cert->cert.verdict) {
        case psplit::Verdict::SplitSpecial: return PSPLIT_SPLIT_SPECIAL;
        case psplit::Verdict::NotSplitNotSpecial: return PSPLIT_NOT_SPLIT_NOT_SPECIAL;
        case psplit::Verdict::Undecided: return PSPLIT_UNDECIDED;
    }
    return PSPLIT_UNDECIDED;
}

psplit_status psplit_certificate_to_json(const psplit_certificate* cert, char** out) {
    if (!cert) return null_argument("cert");
    if (!out) return null_argument("out");
    return guard([&] {
        *out = copy_string(psplit::dump(psplit::certificate_to_json(cert->cert)));
        return PSPLIT_OK;
    });
}

psplit_status psplit_certificate_from_json(const char* json, psplit_certificate** out) {
    if (!json) return null_argument("json");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guard([&] {
        *out = new psplit_certificate{psplit::certificate_from_json(parse_json(json))};
        return PSPLIT_OK;
    });
}

void psplit_certificate_free(psplit_certificate* cert) { delete cert; }

psplit_status psplit_verify(const psplit_certificate* cert, const psplit_polynomial* poly, int* ok, char** trace) {
    if (!cert) return null_argument("cert");
    if (!poly) return null_argument("poly");
    if (!ok) return null_argument("ok");
    return guard([&] {
        const psplit::Verification v = psplit::verify(cert->cert, poly->in.poly);
        *ok = v.ok ? 1 : 0;
        if (trace) {
            std::string text;
            for (const auto& line : v.trace) text += line + "\n";
            *trace = copy_string(text);
        }
        return PSPLIT_OK;
    });
}

psplit_status psplit_h1(const psplit_polynomial* poly, const char* target, const psplit_options* opts,
                        psplit_h1_class* cls, char** report) {
    if (!poly) return null_argument("poly");
    if (!target) return null_argument("target");
    return guard([&] {
        const psplit::Budgets b = budgets_of(opts);
        const psplit::LaurentSeries t = psplit::parse_series(target, poly->in.poly.field(), b.precision);
        const psplit::ClassReport r = psplit::h1_class(poly->in.poly, t, b);
        if (cls)
            *cls = r.kind == psplit::ClassReport::Kind::Trivial      ? PSPLIT_H1_TRIVIAL
                   : r.kind == psplit::ClassReport::Kind::Nontrivial ? PSPLIT_H1_NONTRIVIAL
                                                                     : PSPLIT_H1_UNKNOWN;
        if (report) {
            psplit::json j;
            j["polynomial"] = poly->in.poly.to_string(poly->in.variables);
            j["target"] = psplit::series_to_json(t);
            j["target_text"] = t.to_string();
            j["class"] = psplit::to_string(r.kind);
            j["method"] = r.method;
            if (r.preimage) {
                psplit::json pre = psplit::json::array();
                for (const auto& a : *r.preimage) pre.push_back(psplit::series_to_json(a));
                j["preimage"] = std::move(pre);
            }
            if (r.exclusion) j["exclusion"] = psplit::exclusion_to_json(*r.exclusion);
            if (r.kind == psplit::ClassReport::Kind::Unknown)
                j["searched_box"] = {{"vmin", b.oracle_vmin}, {"vmax", b.oracle_vmax}, {"degree", b.oracle_degree}};
            *report = copy_string(psplit::dump(j));
        }
        return PSPLIT_OK;
    });
}

psplit_status psplit_oracle(const psplit_polynomial* poly, const char* target, int64_t vmin, int64_t vmax,
                            uint32_t deg, int enumerate, const psplit_options* opts, int* in_image, char** report) {
    if (!poly) return null_argument("poly");
    if (!target) return null_argument("target");
    return guard([&] {
        const psplit::Budgets b = budgets_of(opts);
        const psplit::LaurentSeries t = psplit::parse_series(target, poly->in.poly.field(), b.precision);
        psplit::OracleOptions o;
        o.mode = enumerate ? psplit::OracleMode::Enumerate : psplit::OracleMode::Span;
        const psplit::OracleResult r = psplit::brute_force_image(poly->in.poly, t, vmin, vmax, deg, o);
        if (in_image) *in_image = r.in_image ? 1 : 0;
        if (report) {
            psplit::json j;
            j["polynomial"] = poly->in.poly.to_string(poly->in.variables);
            j["target"] = psplit::series_to_json(t);
            j["result"] = r.in_image ? "InImage" : "NotInWindow";
            j["mode"] = enumerate ? "enumerate" : "span";
            j["box"] = {{"vmin", vmin}, {"vmax", vmax}, {"degree", deg}, {"log_p_size", r.box_log_p}};
            j["scanned"] = r.scanned;
            if (r.preimage) {
                psplit::json pre = psplit::json::array();
                for (const auto& a : *r.preimage) pre.push_back(psplit::series_to_json(a));
                j["preimage"] = std::move(pre);
            }
            *report = copy_string(psplit::dump(j));
        }
        return PSPLIT_OK;
    });
}

psplit_status psplit_group_from_json(const char* json, psplit_group** out) {
    if (!json) return null_argument("json");
    if (!out) return null_argument("out");
    *out = nullptr;
    return guard([&] {
        *out = new psplit_group{psplit::group_from_json(parse_json(json))};
        return PSPLIT_OK;
    });
}

void psplit_group_free(psplit_group* group) { delete group; }

psplit_status psplit_frattini(const psplit_group* group, const psplit_options* opts, char** report) {
    if (!group) return null_argument("group");
    if (!report) return null_argument("report");
    return guard([&] {
        const psplit::Budgets b = budgets_of(opts);
        const auto& G = group->table;
        const std::uint32_t p = psplit::group_prime(G);
        const psplit::Subgroup phi = psplit::frattini_subgroup(G);
        psplit::json j;
        j["order"] = G.order();
        j["frattini"] = phi.elements();
        j["frattini_order"] = phi.size();
        j["maximal_subgroups"] = psplit::maximal_subgroups(G).size();
        j["methods_agree"] = true;
        if (p == 0) {
            j["trivial"] = true;
        } else {
            const psplit::ElementaryQuotient q = psplit::elementary_quotient(G);
            j["p"] = p;
            j["rank"] = q.rank;
            const psplit::EtaleCertificate e = psplit::etale_not_special(q.rank, psplit::GroundField::prime(p),
                                                                         b.precision);
            const psplit::Check c = psplit::verify_etale(e);
            if (!c) psplit::fail(psplit::ErrorCode::ContradictoryEvidence, "etale certificate failed: " + c.reason);
            j["not_special"] = {{"rank", e.rank},
                                {"block", e.block.to_string({"x"})},
                                {"coordinate", e.coordinate},
                                {"exclusion", psplit::exclusion_to_json(e.exclusion)},
                                {"verified", true}};
        }
        *report = copy_string(psplit::dump(j));
        return PSPLIT_OK;
    });
}

}  // extern "C"
