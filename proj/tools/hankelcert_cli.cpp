// Command-line front end; talks to the engine exclusively through the
// shared-library C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hankelcert.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCertifiedFalse = 1;
constexpr int kExitUsage = 2;

int to_exit_code(hc_status s) {
    switch (s) {
        case HC_OK: return kExitOk;
        case HC_CERTIFIED_FALSE: return kExitCertifiedFalse;
        case HC_USAGE: return kExitUsage;
        case HC_ERROR: return kExitUsage;
    }
    return kExitUsage;
}

std::string take(char* s) {
    std::string out = s ? s : "";
    hc_string_free(s);
    return out;
}

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            render_text(v, key, os);
        }
    } else if (j.is_array()) {
        os << prefix << ": " << j.dump() << "\n";
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

int print_report(const std::string& report, const std::string& format) {
    if (report.empty()) return 0;
    if (format == "text") {
        json j = json::parse(report, nullptr, false);
        if (j.is_discarded()) {
            std::cout << report << "\n";
        } else {
            render_text(j, "", std::cout);
        }
    } else {
        std::cout << report << std::endl;
    }
    return 0;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) return false;
    out << content << "\n";
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Hankel determinant bounds for the convex class of "
                 "1 + z f''/f' subordinate to 1 + z + (m/n) z^2"};
    app.require_subcommand(1);
    app.fallthrough(true);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // phi M N
    long phi_m = 0, phi_n = 0;
    auto* phi = app.add_subcommand("phi", "check the class conditions of phi(z) = 1 + z + (m/n) z^2");
    phi->add_option("m", phi_m, "numerator of a")->required();
    phi->add_option("n", phi_n, "denominator of a")->required();

    // h2 --t RAT
    std::string h2_t;
    auto* h2 = app.add_subcommand("h2", "sharp |H2(2)| bound at t = m/n");
    h2->add_option("--t", h2_t, "rational t in [0,1/2]")->required();

    // h3-certify [--depth K] [--workers W] [--out FILE]
    int h3_depth = 2, h3_workers = 1;
    std::string h3_out = "h3_certificate.json";
    auto* h3 = app.add_subcommand("h3-certify", "certify |H3(1)| <= 1/144 end to end");
    h3->add_option("--depth", h3_depth, "subdivision depth budget")->capture_default_str();
    h3->add_option("--workers", h3_workers, "worker threads (must not affect outputs)")
        ->capture_default_str();
    h3->add_option("--out", h3_out, "certificate output file")->capture_default_str();

    // reproduce ID
    std::string rep_id;
    auto* rep = app.add_subcommand("reproduce",
                                   "recompute one embedded reference table bit-exactly");
    rep->add_option("id", rep_id, "table id (e.g. b0, q1g0, g2k3)")->required();

    // bound FILE --box SPEC --max RAT [--depth K] [--vertex SPEC]
    std::string bound_file, bound_box, bound_max, bound_vertex, bound_out = "bound_certificate.json";
    int bound_depth = 6, bound_workers = 1;
    auto* bound = app.add_subcommand("bound", "certify p <= threshold on a box");
    bound->add_option("file", bound_file, "polynomial JSON file")->required();
    bound->add_option("--box", bound_box, "box spec lo,hi;lo,hi;...")->required();
    bound->add_option("--max", bound_max, "rational threshold")->required();
    bound->add_option("--depth", bound_depth, "subdivision depth budget")->capture_default_str();
    bound->add_option("--vertex", bound_vertex, "corner spec v1,v2,... for the endgame");
    bound->add_option("--workers", bound_workers, "worker threads")->capture_default_str();
    bound->add_option("--out", bound_out, "certificate output file")->capture_default_str();

    // extremal --schwarz {z2|z3|blaschke} [--x RAT] --t RAT --terms N
    std::string ext_schwarz, ext_x, ext_t;
    int ext_terms = 8;
    auto* ext = app.add_subcommand("extremal", "expand an extremal candidate");
    ext->add_option("--schwarz", ext_schwarz, "z2, z3 or blaschke")->required();
    ext->add_option("--x", ext_x, "blaschke parameter in [0,1]");
    ext->add_option("--t", ext_t, "rational t")->required();
    ext->add_option("--terms", ext_terms, "number of Taylor coefficients")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    hc_status status = HC_ERROR;
    std::string report;

    if (phi->parsed()) {
        char* rep_json = nullptr;
        status = hc_phi(phi_m, phi_n, &rep_json);
        report = take(rep_json);
    } else if (h2->parsed()) {
        char* rep_json = nullptr;
        status = hc_h2(h2_t.c_str(), &rep_json);
        report = take(rep_json);
    } else if (h3->parsed()) {
        char* cert_json = nullptr;
        char* rep_json = nullptr;
        status = hc_h3_certify(h3_depth, h3_workers, &cert_json, &rep_json);
        std::string cert = take(cert_json);
        report = take(rep_json);
        if (!cert.empty()) {
            if (!write_file(h3_out, cert)) {
                std::cerr << "cannot write certificate to " << h3_out << "\n";
                return kExitUsage;
            }
            json j = json::parse(report, nullptr, false);
            if (!j.is_discarded()) {
                j["certificate_path"] = h3_out;
                report = j.dump(2);
            }
        }
    } else if (rep->parsed()) {
        char* rep_json = nullptr;
        status = hc_reproduce(rep_id.c_str(), &rep_json);
        report = take(rep_json);
    } else if (bound->parsed()) {
        std::ifstream in(bound_file);
        if (!in) {
            std::cerr << "cannot read polynomial file " << bound_file << "\n";
            return kExitUsage;
        }
        std::stringstream ss;
        ss << in.rdbuf();

        hc_poly* poly = nullptr;
        char* err = nullptr;
        if (hc_poly_parse_json(ss.str().c_str(), &poly, &err) != HC_OK) {
            std::cerr << "bad polynomial file: " << take(err) << "\n";
            return kExitUsage;
        }
        char* cert_json = nullptr;
        char* rep_json = nullptr;
        status = hc_bound(poly, bound_box.c_str(), bound_max.c_str(), bound_depth,
                          bound_vertex.empty() ? nullptr : bound_vertex.c_str(),
                          bound_workers, &cert_json, &rep_json);
        hc_poly_free(poly);
        std::string cert = take(cert_json);
        report = take(rep_json);
        if (!cert.empty()) {
            if (!write_file(bound_out, cert)) {
                std::cerr << "cannot write certificate to " << bound_out << "\n";
                return kExitUsage;
            }
            json j = json::parse(report, nullptr, false);
            if (!j.is_discarded()) {
                j["certificate_path"] = bound_out;
                report = j.dump(2);
            }
        }
    } else if (ext->parsed()) {
        char* rep_json = nullptr;
        status = hc_extremal(ext_schwarz.c_str(), ext_x.empty() ? nullptr : ext_x.c_str(),
                             ext_t.c_str(), ext_terms, &rep_json);
        report = take(rep_json);
    }

    print_report(report, format);
    return to_exit_code(status);
}
