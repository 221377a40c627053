#include "json_io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <stdexcept>

namespace hcert {

json rat_pair(const Rational& r) { return json::array({r.num_string(), r.den_string()}); }

Rational rat_from_pair(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected [num, den] pair");
    return Rational::from_string(j[0].get<std::string>()) /
           Rational::from_string(j[1].get<std::string>());
}

json poly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["e"] = e;
        t["n"] = c.num_string();
        t["d"] = c.den_string();
        terms.push_back(std::move(t));
    }
    return json{{"vars", p.vars()}, {"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("polynomial JSON needs 'vars' and 'terms'");
    MultiPoly p(j["vars"].get<std::vector<std::string>>());
    for (const auto& t : j["terms"]) {
        auto e = t["e"].get<std::vector<unsigned>>();
        Rational num = Rational::from_string(t["n"].get<std::string>());
        Rational den = Rational::from_string(t["d"].get<std::string>());
        if (den.is_zero()) throw std::invalid_argument("zero denominator in term");
        p.add_term(e, num / den);
    }
    return p;
}

json box_to_json(const Box& b) {
    json out = json::array();
    for (std::size_t i = 0; i < b.dim(); ++i)
        out.push_back(json::array({b.axis(i).lo.to_string(), b.axis(i).hi.to_string()}));
    return out;
}

Box box_from_json(const json& j) {
    std::vector<Interval> axes;
    for (const auto& a : j)
        axes.push_back(Interval{Rational::from_string(a[0].get<std::string>()),
                                Rational::from_string(a[1].get<std::string>())});
    return Box(std::move(axes));
}

json tensor_to_json(const BernsteinTensor& t) {
    json coeffs = json::array();
    for (const auto& c : t.coeffs) coeffs.push_back(rat_pair(c));
    return json{{"degrees", t.degrees}, {"box", box_to_json(t.box)},
                {"coeffs", std::move(coeffs)}};
}

namespace {

json enclosure_to_json(const Enclosure& e) {
    return json{{"lo", e.lo.to_string()},
                {"hi", e.hi.to_string()},
                {"argmin", e.argmin},
                {"argmax", e.argmax}};
}

json domination_to_json(const DominationRecord& d) {
    json vertex = json::array();
    for (const auto& v : d.vertex) vertex.push_back(v.to_string());
    json ledger = json::array();
    for (const auto& a : d.ledger)
        ledger.push_back(json{{"expo", a.expo},
                              {"coeff", a.coeff.to_string()},
                              {"target_axis", a.target_axis},
                              {"bound_coeff", a.bound_coeff.to_string()}});
    return json{{"vertex", std::move(vertex)},
                {"threshold", d.threshold.to_string()},
                {"alpha", d.alpha.to_string()},
                {"beta", d.beta.to_string()},
                {"delta", d.delta.to_string()},
                {"lambda", d.lambda.to_string()},
                {"ledger", std::move(ledger)}};
}

}  // namespace

json certificate_node_to_json(const Certificate& c) {
    json node;
    node["kind"] = cert_kind_name(c.kind);
    node["box"] = box_to_json(c.box);
    if (c.kind != CertKind::Failed) node["bound"] = rat_pair(c.bound);

    json detail;
    if (!c.label.empty()) detail["label"] = c.label;
    if (!c.note.empty()) detail["note"] = c.note;
    if (c.encl) detail["enclosure"] = enclosure_to_json(*c.encl);
    if (c.domination) detail["domination"] = domination_to_json(*c.domination);
    node["detail"] = std::move(detail);

    json kids = json::array();
    for (const auto& k : c.children) kids.push_back(certificate_node_to_json(k));
    node["children"] = std::move(kids);
    return node;
}

std::string poly_sha256(const MultiPoly& p) {
    const std::string dump = poly_to_json(p).dump();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(dump.data(), dump.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("poly_sha256: digest failure");
    std::string hex;
    hex.reserve(2 * len);
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

json certificate_document(const MultiPoly& p, const Rational& threshold,
                          const Certificate& root) {
    return json{{"poly_sha", poly_sha256(p)},
                {"threshold", rat_pair(threshold)},
                {"valid", root.valid()},
                {"root", certificate_node_to_json(root)}};
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

Box parse_box_spec(const std::string& spec) {
    std::vector<Interval> axes;
    for (const auto& part : split_on(spec, ';')) {
        auto ends = split_on(part, ',');
        if (ends.size() != 2)
            throw std::invalid_argument("box spec: each axis needs 'lo,hi'");
        axes.push_back(Interval{Rational::from_string(ends[0]),
                                Rational::from_string(ends[1])});
    }
    if (axes.empty()) throw std::invalid_argument("box spec: empty");
    return Box(std::move(axes));
}

std::vector<Rational> parse_point_spec(const std::string& spec) {
    std::vector<Rational> out;
    for (const auto& part : split_on(spec, ','))
        out.push_back(Rational::from_string(part));
    return out;
}

}  // namespace hcert
