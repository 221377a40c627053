#include "hankelcert.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "core/catalog.hpp"
#include "core/functionals.hpp"
#include "core/json_io.hpp"
#include "core/phiclass.hpp"
#include "core/pipeline.hpp"
#include "core/series.hpp"

using namespace hcert;

struct hc_poly {
    MultiPoly p;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** slot, const json& j) {
    if (slot) *slot = dup_string(j.dump(2));
}

void emit_error(char** slot, const std::string& msg) {
    if (slot) *slot = dup_string(msg);
}

// map exceptions at the boundary: bad inputs -> HC_USAGE
template <typename F>
hc_status guarded(char** report_slot, F f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        if (report_slot) emit(report_slot, json{{"error", e.what()}});
        return HC_USAGE;
    } catch (const std::domain_error& e) {
        if (report_slot) emit(report_slot, json{{"error", e.what()}});
        return HC_USAGE;
    } catch (const std::exception& e) {
        if (report_slot) emit(report_slot, json{{"error", e.what()}});
        return HC_ERROR;
    }
}

json failure_summary(const Certificate& c) {
    std::vector<const Certificate*> fails;
    c.collect_failures(fails);
    json out = json::array();
    for (const auto* f : fails) {
        json node{{"box", box_to_json(f->box)}, {"note", f->note}};
        if (f->encl)
            node["witness"] = json{{"hi", f->encl->hi.to_string()},
                                   {"argmax", f->encl->argmax}};
        out.push_back(std::move(node));
    }
    return out;
}

}  // namespace

extern "C" {

void hc_string_free(char* s) { std::free(s); }

const char* hc_version(void) { return "hankelcert 1.0.0"; }

hc_status hc_poly_parse_json(const char* json_text, hc_poly** out, char** error) {
    if (!json_text || !out) {
        emit_error(error, "null argument");
        return HC_USAGE;
    }
    *out = nullptr;
    return guarded(nullptr, [&]() {
        try {
            json j = json::parse(json_text);
            *out = new hc_poly{poly_from_json(j)};
            return HC_OK;
        } catch (const json::exception& e) {
            emit_error(error, e.what());
            return HC_USAGE;
        } catch (const std::invalid_argument& e) {
            emit_error(error, e.what());
            return HC_USAGE;
        }
    });
}

char* hc_poly_to_json(const hc_poly* p) {
    if (!p) return nullptr;
    return dup_string(poly_to_json(p->p).dump(2));
}

void hc_poly_free(hc_poly* p) { delete p; }

hc_status hc_poly_builtin(const char* name, hc_poly** out, char** error) {
    if (!name || !out) {
        emit_error(error, "null argument");
        return HC_USAGE;
    }
    *out = nullptr;
    return guarded(nullptr, [&]() {
        const std::string n = name;
        MultiPoly p(std::vector<std::string>{});
        if (n == "h2") p = scaled_h2();
        else if (n == "h3") p = scaled_h3();
        else {
            MajorantChain chain = majorant_chain();
            if (n == "g0") p = chain.g0;
            else if (n == "ghalf") p = chain.ghalf;
            else if (n == "g2") p = chain.g2;
            else if (n == "g2u") p = g2_on_unit_cube(chain.g2);
            else {
                emit_error(error, "unknown builtin '" + n +
                                      "' (have: g0, ghalf, g2, g2u, h2, h3)");
                return HC_USAGE;
            }
        }
        *out = new hc_poly{std::move(p)};
        return HC_OK;
    });
}

hc_status hc_phi(long m, long n, char** report_json) {
    return guarded(report_json, [&]() {
        PhiReport r = check_phi(m, n);
        json outputs{{"a", r.a.to_string()},
                     {"univalent", r.univalent},
                     {"starlike", r.starlike},
                     {"re_positive", r.re_positive},
                     {"admissible", r.admissible},
                     {"boundary_min", r.boundary_min.to_string()}};
        if (r.witness) {
            auto& [z1, z2] = *r.witness;
            outputs["witness"] = json{
                {"z1", {z1.re.to_string(), z1.im.to_string()}},
                {"z2", {z2.re.to_string(), z2.im.to_string()}}};
        }
        json report{{"command", "phi"},
                    {"inputs", {{"m", m}, {"n", n}}},
                    {"outputs", std::move(outputs)},
                    {"approx",
                     {{"a", r.a.to_double()},
                      {"boundary_min", r.boundary_min.to_double()}}},
                    {"status", r.admissible ? "ok" : "not_admissible"}};
        emit(report_json, report);
        return r.admissible ? HC_OK : HC_CERTIFIED_FALSE;
    });
}

hc_status hc_h2(const char* t, char** report_json) {
    return guarded(report_json, [&]() {
        if (!t) throw std::invalid_argument("t is required");
        Rational tr = Rational::from_string(t);
        H2Reduction red = h2_reduction(tr);
        json outputs{{"t", tr.to_string()},
                     {"bound", red.bound.to_string()},
                     {"scaled_bound", red.scaled_bound.to_string()},
                     {"maximizer_s", red.maximizer.to_string()},
                     {"extremal",
                      red.vertex_branch
                          ? json{{"kind", "blaschke"},
                                 {"x_squared", red.maximizer.to_string()}}
                          : json{{"kind", "z2"}}}};
        json report{{"command", "h2"},
                    {"inputs", {{"t", tr.to_string()}}},
                    {"outputs", std::move(outputs)},
                    {"approx", {{"bound", red.bound.to_double()}}},
                    {"status", "ok"}};
        emit(report_json, report);
        return HC_OK;
    });
}

hc_status hc_h3_certify(int depth, int workers, char** certificate_json,
                        char** report_json) {
    return guarded(report_json, [&]() {
        if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
        if (workers < 1) throw std::invalid_argument("workers must be >= 1");
        MasterOutcome out = h3_master(static_cast<unsigned>(depth),
                                      static_cast<unsigned>(workers));

        if (certificate_json) {
            MajorantChain chain = majorant_chain();
            json parts{
                {"lterm_nonneg",
                 certificate_document(chain.y_linear.without_vars({"y"}), Rational(0),
                                      out.lterm_nonneg)},
                {"g1_convex",
                 certificate_document(chain.g1.partial("t", 2), Rational(0),
                                      out.g1_convex)},
                {"g0_max", certificate_document(chain.g0, Rational(60), out.g0_max)},
                {"ghalf_max",
                 certificate_document(chain.ghalf, Rational(60), out.ghalf_max)},
                {"g2_max", certificate_document(g2_on_unit_cube(chain.g2), Rational(60),
                                                out.g2_max)}};
            json cert{{"bound", rat_pair(out.valid ? out.bound : Rational(0))},
                      {"valid", out.valid},
                      {"parts", std::move(parts)}};
            emit(certificate_json, cert);
        }

        json attain = json::array();
        for (const auto& [t, v] : out.attainment)
            attain.push_back(json::array({t.to_string(), v.to_string()}));

        json failures = json::array();
        for (const Certificate* c : {&out.g0_max, &out.ghalf_max, &out.g2_max,
                                     &out.lterm_nonneg, &out.g1_convex}) {
            json fs = failure_summary(*c);
            for (auto& f : fs) failures.push_back(std::move(f));
        }

        json outputs{{"valid", out.valid},
                     {"domain_max", out.domain_max.to_string()},
                     {"attainment", std::move(attain)},
                     {"sharpness_h3_abs", out.sharpness_h3_abs.to_string()},
                     {"failing_branch", out.failing_branch},
                     {"failures", std::move(failures)}};
        if (out.valid) outputs["bound"] = out.bound.to_string();

        json report{{"command", "h3-certify"},
                    {"inputs", {{"depth", depth}, {"workers", workers}}},
                    {"outputs", std::move(outputs)},
                    {"approx",
                     {{"bound", out.valid ? out.bound.to_double() : 0.0}}},
                    {"status", out.valid ? "ok" : "certified_false"}};
        emit(report_json, report);
        return out.valid ? HC_OK : HC_CERTIFIED_FALSE;
    });
}

hc_status hc_reproduce(const char* table_id, char** report_json) {
    return guarded(report_json, [&]() {
        if (!table_id) throw std::invalid_argument("table id is required");
        const std::string id = table_id;
        MajorantChain chain = majorant_chain();
        CatalogEntry entry;
        try {
            entry = reproduce_table(id, chain);
        } catch (const std::invalid_argument&) {
            json report{{"command", "reproduce"},
                        {"inputs", {{"id", id}}},
                        {"error", "unknown table id '" + id + "'"},
                        {"valid_ids", catalog_ids()},
                        {"status", "usage"}};
            emit(report_json, report);
            return HC_USAGE;
        }

        json diffs = json::array();
        for (const auto& d : entry.diffs)
            diffs.push_back(json{{"row", d.row},
                                 {"col", d.col},
                                 {"computed", d.computed.to_string()},
                                 {"reference", d.reference.to_string()}});

        const bool ok = entry.matches_reference && entry.routes_agree;
        json outputs{{"match", entry.matches_reference},
                     {"routes_agree", entry.routes_agree},
                     {"matrix_max", entry.matrix_max.to_string()},
                     {"max_entry", json::array({entry.max_row, entry.max_col})},
                     {"diff_count", entry.diffs.size()},
                     {"diffs", std::move(diffs)},
                     {"tensor", tensor_to_json(entry.tensor)}};
        if (entry.has_slice) outputs["slice"] = entry.slice;

        json report{{"command", "reproduce"},
                    {"inputs", {{"id", id}}},
                    {"outputs", std::move(outputs)},
                    {"approx", {{"matrix_max", entry.matrix_max.to_double()}}},
                    {"status", ok ? "ok" : "mismatch"}};
        emit(report_json, report);
        return ok ? HC_OK : HC_CERTIFIED_FALSE;
    });
}

hc_status hc_bound(const hc_poly* p, const char* box_spec, const char* threshold,
                   int depth, const char* vertex_spec, int workers,
                   char** certificate_json, char** report_json) {
    return guarded(report_json, [&]() {
        if (!p || !box_spec || !threshold)
            throw std::invalid_argument("polynomial, box and threshold are required");
        if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
        if (workers < 1) throw std::invalid_argument("workers must be >= 1");

        Box box = parse_box_spec(box_spec);
        if (box.dim() != p->p.vars().size())
            throw std::invalid_argument("box dimension does not match the polynomial");
        Rational thr = Rational::from_string(threshold);

        CertifyPolicy policy;
        policy.max_depth = static_cast<unsigned>(depth);
        policy.workers = static_cast<unsigned>(workers);
        if (vertex_spec) {
            auto v = parse_point_spec(vertex_spec);
            if (v.size() != box.dim())
                throw std::invalid_argument("vertex dimension does not match the box");
            policy.vertex = std::move(v);
        }

        Certificate cert = certify_max(p->p, box, thr, policy);
        if (certificate_json) emit(certificate_json, certificate_document(p->p, thr, cert));

        json outputs{{"valid", cert.valid()},
                     {"threshold", thr.to_string()},
                     {"failures", failure_summary(cert)}};
        if (cert.valid()) outputs["bound"] = cert.bound.to_string();

        json report{{"command", "bound"},
                    {"inputs",
                     {{"box", box_to_json(box)},
                      {"threshold", thr.to_string()},
                      {"depth", depth},
                      {"workers", workers},
                      {"vertex", vertex_spec ? json(vertex_spec) : json(nullptr)}}},
                    {"outputs", std::move(outputs)},
                    {"approx",
                     {{"bound", cert.valid() ? cert.bound.to_double() : 0.0}}},
                    {"status", cert.valid() ? "ok" : "certified_false"}};
        emit(report_json, report);
        return cert.valid() ? HC_OK : HC_CERTIFIED_FALSE;
    });
}

hc_status hc_extremal(const char* schwarz, const char* x, const char* t, int terms,
                      char** report_json) {
    return guarded(report_json, [&]() {
        if (!schwarz || !t) throw std::invalid_argument("schwarz kind and t are required");
        if (terms < 5) throw std::invalid_argument("terms must be >= 5");
        const std::string kind = schwarz;
        const Rational tr = Rational::from_string(t);
        const auto n = static_cast<std::size_t>(terms);

        SchwarzSpec spec = SchwarzSpec::monomial(2);
        if (kind == "z2") spec = SchwarzSpec::monomial(2);
        else if (kind == "z3") spec = SchwarzSpec::monomial(3);
        else if (kind == "blaschke") {
            if (!x) throw std::invalid_argument("blaschke requires --x");
            spec = SchwarzSpec::blaschke(Rational::from_string(x));
        } else {
            throw std::invalid_argument("unknown schwarz kind '" + kind +
                                        "' (have: z2, z3, blaschke)");
        }

        auto a = expand_subordinate(schwarz_series(spec, n), tr, n);
        auto hv = hankel_from_taylor({a[1], a[2], a[3], a[4]});

        json coeffs = json::array();
        for (const auto& c : a) coeffs.push_back(c.to_string());

        json outputs{{"taylor", std::move(coeffs)},
                     {"h2", hv.h2.to_string()},
                     {"h3", hv.h3.to_string()}};

        // the closed-form integral expansions double-check the monomial cases
        if (kind == "z2" && n >= 8) {
            auto f = extremal_expand(ExtremalKind::H2Monomial, tr, n);
            bool agree = true;
            for (std::size_t k = 1; k < n; ++k)
                if (f.c[k] != a[k - 1]) agree = false;
            outputs["closed_form_agrees"] = agree;
        } else if (kind == "z3" && n >= 11) {
            auto f = extremal_expand(ExtremalKind::H3Monomial, tr, n);
            bool agree = true;
            for (std::size_t k = 1; k < n; ++k)
                if (f.c[k] != a[k - 1]) agree = false;
            outputs["closed_form_agrees"] = agree;
        }

        json report{{"command", "extremal"},
                    {"inputs",
                     {{"schwarz", kind},
                      {"x", x ? json(x) : json(nullptr)},
                      {"t", tr.to_string()},
                      {"terms", terms}}},
                    {"outputs", std::move(outputs)},
                    {"approx", {{"h2", hv.h2.to_double()}, {"h3", hv.h3.to_double()}}},
                    {"status", "ok"}};
        emit(report_json, report);
        return HC_OK;
    });
}

}  // extern "C"
