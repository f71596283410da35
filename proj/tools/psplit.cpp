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

// psplit command-line front end. Talks to the library only through psplit.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "psplit/psplit.h"

namespace {

constexpr int exit_decided = 0;
constexpr int exit_undecided = 1;
constexpr int exit_invalid = 2;

struct StringDeleter {
    void operator()(char* s) const { psplit_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct PolyDeleter {
    void operator()(psplit_polynomial* p) const { psplit_polynomial_free(p); }
};
struct CertDeleter {
    void operator()(psplit_certificate* c) const { psplit_certificate_free(c); }
};
struct GroupDeleter {
    void operator()(psplit_group* g) const { psplit_group_free(g); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "psplit: cannot read " << path << "\n";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int report_error(psplit_status st) {
    std::cerr << "psplit: " << psplit_status_string(st) << ": " << psplit_last_error() << "\n";
    return st == PSPLIT_E_CONTRADICTORY_EVIDENCE || st == PSPLIT_E_INTERNAL ? exit_undecided : exit_invalid;
}

std::unique_ptr<psplit_polynomial, PolyDeleter> load_polynomial(const std::string& path, int& code) {
    std::string text;
    if (!read_file(path, text)) {
        code = exit_invalid;
        return nullptr;
    }
    psplit_polynomial* p = nullptr;
    const psplit_status st = psplit_polynomial_from_json(text.c_str(), &p);
    if (st != PSPLIT_OK) {
        code = report_error(st);
        return nullptr;
    }
    return std::unique_ptr<psplit_polynomial, PolyDeleter>(p);
}

struct Globals {
    long long precision = 16;
    unsigned budget = 8;
    unsigned long long seed = 0;
    unsigned search_degree = 2;
    unsigned samples = 20;

    psplit_options options() const {
        psplit_options o;
        psplit_options_init(&o);
        o.precision = precision;
        o.budget = budget;
        o.seed = seed;
        o.search_degree = search_degree;
        o.torsor_samples = samples;
        return o;
    }
};

int cmd_classify(const Globals& g, const std::string& file, const std::string& out_path) {
    int code = exit_invalid;
    auto poly = load_polynomial(file, code);
    if (!poly) return code;
    const psplit_options o = g.options();
    psplit_certificate* raw = nullptr;
    psplit_status st = psplit_classify(poly.get(), &o, &raw);
    if (st != PSPLIT_OK) return report_error(st);
    std::unique_ptr<psplit_certificate, CertDeleter> cert(raw);

    char* json = nullptr;
    st = psplit_certificate_to_json(cert.get(), &json);
    if (st != PSPLIT_OK) return report_error(st);
    CString text(json);
    if (out_path.empty()) {
        std::cout << text.get() << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text.get() << "\n";
        if (!out) {
            std::cerr << "psplit: cannot write " << out_path << "\n";
            return exit_invalid;
        }
    }

    int ok = 0;
    char* trace = nullptr;
    st = psplit_verify(cert.get(), poly.get(), &ok, &trace);
    if (st != PSPLIT_OK) return report_error(st);
    CString tr(trace);
    if (!ok) {
        std::cerr << "psplit: self-verification failed\n" << tr.get();
        return exit_undecided;
    }
    return psplit_certificate_verdict(cert.get()) == PSPLIT_UNDECIDED ? exit_undecided : exit_decided;
}

int cmd_verify(const std::string& cert_path, const std::string& file, bool quiet) {
    int code = exit_invalid;
    auto poly = load_polynomial(file, code);
    if (!poly) return code;
    std::string text;
    if (!read_file(cert_path, text)) return exit_invalid;
    psplit_certificate* raw = nullptr;
    psplit_status st = psplit_certificate_from_json(text.c_str(), &raw);
    if (st != PSPLIT_OK) return report_error(st);
    std::unique_ptr<psplit_certificate, CertDeleter> cert(raw);

    int ok = 0;
    char* trace = nullptr;
    st = psplit_verify(cert.get(), poly.get(), &ok, &trace);
    if (st != PSPLIT_OK) return report_error(st);
    CString tr(trace);
    if (!quiet) std::cout << tr.get();
    std::cout << (ok ? "VERIFIED" : "REJECTED") << "\n";
    if (!ok) return exit_undecided;
    return psplit_certificate_verdict(cert.get()) == PSPLIT_UNDECIDED ? exit_undecided : exit_decided;
}

int cmd_h1(const Globals& g, const std::string& target, const std::string& file) {
    int code = exit_invalid;
    auto poly = load_polynomial(file, code);
    if (!poly) return code;
    const psplit_options o = g.options();
    psplit_h1_class cls = PSPLIT_H1_UNKNOWN;
    char* report = nullptr;
    const psplit_status st = psplit_h1(poly.get(), target.c_str(), &o, &cls, &report);
    if (st != PSPLIT_OK) return report_error(st);
    CString r(report);
    std::cout << r.get() << "\n";
    return cls == PSPLIT_H1_UNKNOWN ? exit_undecided : exit_decided;
}

int cmd_oracle(const Globals& g, long long vmin, long long vmax, unsigned deg, bool enumerate,
               const std::string& target, const std::string& file) {
    int code = exit_invalid;
    auto poly = load_polynomial(file, code);
    if (!poly) return code;
    const psplit_options o = g.options();
    int in_image = 0;
    char* report = nullptr;
    const psplit_status st =
        psplit_oracle(poly.get(), target.c_str(), vmin, vmax, deg, enumerate ? 1 : 0, &o, &in_image, &report);
    if (st != PSPLIT_OK) return report_error(st);
    CString r(report);
    std::cout << r.get() << "\n";
    return exit_decided;
}

int cmd_frattini(const Globals& g, const std::string& file) {
    std::string text;
    if (!read_file(file, text)) return exit_invalid;
    psplit_group* raw = nullptr;
    psplit_status st = psplit_group_from_json(text.c_str(), &raw);
    if (st != PSPLIT_OK) return report_error(st);
    std::unique_ptr<psplit_group, GroupDeleter> group(raw);
    const psplit_options o = g.options();
    char* report = nullptr;
    st = psplit_frattini(group.get(), &o, &report);
    if (st != PSPLIT_OK) return report_error(st);
    CString r(report);
    std::cout << r.get() << "\n";
    return exit_decided;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"psplit: split/special certificates for p-polynomial kernels over F_q(s)"};
    app.set_version_flag("--version", std::string(psplit_version()));
    app.require_subcommand(1);

    Globals g;
    app.add_option("--precision", g.precision, "t-adic precision of series (default 16)")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", g.budget, "substitution steps for the split search (default 8)");
    app.add_option("--seed", g.seed, "seed for torsor sampling (default 0)");
    app.add_option("--search-degree", g.search_degree, "s-degree bound for isotropy searches (default 2)");
    app.add_option("--samples", g.samples, "torsor targets solved for split inputs (default 20)");

    std::string file, cert_path, target, out_path;
    long long vmin = -2, vmax = 2;
    unsigned deg = 2;
    bool enumerate = false;
    bool quiet = false;

    auto* classify = app.add_subcommand("classify", "classify a p-polynomial and emit a certificate");
    classify->add_option("file", file, "polynomial JSON")->required()->check(CLI::ExistingFile);
    classify->add_option("-o,--output", out_path, "write the certificate here instead of stdout");

    auto* h1 = app.add_subcommand("h1", "decide the class of a target in H^1(k((t)), G)");
    h1->add_option("--target", target, "series literal, e.g. t^-1 + s*t")->required();
    h1->add_option("file", file, "polynomial JSON")->required()->check(CLI::ExistingFile);

    auto* oracle = app.add_subcommand("oracle", "bounded search for a preimage of a target");
    oracle->add_option("--vmin", vmin, "lowest t-exponent")->required();
    oracle->add_option("--vmax", vmax, "highest t-exponent")->required();
    oracle->add_option("--deg", deg, "s-degree bound of the coefficients")->required();
    oracle->add_option("--target", target, "series literal")->required();
    oracle->add_flag("--enumerate", enumerate, "scan every tuple instead of solving over F_p");
    oracle->add_option("file", file, "polynomial JSON")->required()->check(CLI::ExistingFile);

    auto* frattini = app.add_subcommand("frattini", "Frattini subgroup and elementary quotient of a p-group");
    frattini->add_option("file", file, "group table JSON")->required()->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "replay a certificate against its input");
    verify->add_option("cert", cert_path, "certificate JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("file", file, "polynomial JSON")->required()->check(CLI::ExistingFile);
    verify->add_flag("-q,--quiet", quiet, "print only the outcome");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    if (*classify) return cmd_classify(g, file, out_path);
    if (*h1) return cmd_h1(g, target, file);
    if (*oracle) return cmd_oracle(g, vmin, vmax, deg, enumerate, target, file);
    if (*frattini) return cmd_frattini(g, file);
    if (*verify) return cmd_verify(cert_path, file, quiet);
    return exit_invalid;
}
