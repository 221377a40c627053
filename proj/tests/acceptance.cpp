// Acceptance gate: every criterion below runs in exact arithmetic and
// prints a single PASS/FAIL line. The process exits nonzero if any
// criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/certify.hpp"
#include "core/functionals.hpp"
#include "core/json_io.hpp"
#include "core/phiclass.hpp"
#include "core/pipeline.hpp"
#include "core/series.hpp"
#include "test_helpers.hpp"

using namespace hcert;
using testutil::Rng;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        ok = false;
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("criterion %d %-34s %s%s\n", number, name.c_str(), ok ? "PASS" : "FAIL",
                note.c_str());
    if (!ok) ++failures;
}

bool expect(bool cond, const char* what) {
    if (!cond) std::printf("    unmet: %s\n", what);
    return cond;
}

Rational rat_s(const char* s) { return Rational::from_string(s); }

}  // namespace

// ---- 1: every embedded table recomputes bit-exactly -----------------------

bool golden_tables() {
    MajorantChain chain = majorant_chain();
    auto entries = tensor_matrices(chain);
    bool ok = expect(entries.size() == 38, "38 embedded tables");
    for (const auto& e : entries) {
        if (!e.matches_reference || !e.routes_agree) {
            std::printf("    table %s: match=%d routes=%d diffs=%zu\n", e.id.c_str(),
                        e.matches_reference, e.routes_agree, e.diffs.size());
            ok = false;
        }
    }

    struct Anchor {
        const char* id;
        const char* max;
    };
    const Anchor anchors[] = {
        {"b0", "123/2"},         {"bhalf", "127/2"},
        {"q1g0", "483/8"},       {"q2g0", "991/20"},
        {"q3g0", "5267/128"},    {"q4g0", "5087/128"},
        {"q1ghalf", "487/8"},    {"q2ghalf", "18241/320"},
        {"q3ghalf", "12921/256"},{"q4ghalf", "26721/512"},
        {"q11g0", "1923/32"},    {"q12g0", "14701/256"},
        {"q13g0", "7067867/131072"}, {"q14g0", "13970539/262144"},
        {"q11ghalf", "1927/32"}, {"q12ghalf", "301427/5120"},
        {"q13ghalf", "14781075/262144"}, {"q14ghalf", "7446495/131072"},
    };
    for (const auto& a : anchors) {
        auto e = reproduce_table(a.id, chain);
        if (e.matrix_max != rat_s(a.max)) {
            std::printf("    anchor %s: got %s want %s\n", a.id,
                        e.matrix_max.to_string().c_str(), a.max);
            ok = false;
        }
    }

    // G2 stage anchors with their attainment entries
    auto g2k3 = reproduce_table("g2k3", chain);
    ok &= expect(g2k3.matrix_max == rat_s("1217/20") && g2k3.max_row == 3 &&
                     g2k3.max_col == 3 && g2k3.slice == 3,
                 "g2 root max 1217/20 at (3,3,3)");
    auto g2q2k3 = reproduce_table("g2q2k3", chain);
    ok &= expect(g2q2k3.matrix_max == rat_s("39295/768") && g2q2k3.max_row == 5 &&
                     g2q2k3.max_col == 2,
                 "g2 refined max 39295/768 at (5,2,3)");
    Rational stage1(0);
    for (int r = 1; r <= 4; ++r)
        for (int k = 0; k <= 3; ++k) {
            auto e = reproduce_table(
                "g2q" + std::to_string(r) + "k" + std::to_string(k), chain);
            if (e.matrix_max > stage1) stage1 = e.matrix_max;
        }
    ok &= expect(stage1 == rat_s("39295/768"), "g2 stage-1 bound 39295/768");
    return ok;
}

// ---- 2: the end-to-end H3 certification ------------------------------------

bool h3_end_to_end() {
    MasterOutcome out = h3_master(2, 1);
    bool ok = expect(out.valid, "depth-2 pipeline valid");
    ok &= expect(out.bound == Rational(1, 144), "bound 1/144");

    MajorantChain chain = majorant_chain();
    ok &= expect(verify_max_certificate(chain.g0, Rational(60), out.g0_max),
                 "G0 certificate replays");
    ok &= expect(verify_max_certificate(chain.ghalf, Rational(60), out.ghalf_max),
                 "G1/2 certificate replays");
    ok &= expect(
        verify_max_certificate(g2_on_unit_cube(chain.g2), Rational(60), out.g2_max),
        "G2 certificate replays");
    ok &= expect(verify_nonneg_certificate(y_linear_expression(chain), out.lterm_nonneg),
                 "linear-term certificate replays");
    ok &= expect(verify_nonneg_certificate(g1_convexity_expression(chain), out.g1_convex),
                 "convexity certificate replays");

    // the corner boxes close by vertex domination in both campaigns
    auto corner_kind = [](const Certificate& c) {
        const Certificate* q1 = &c.children.at(0);
        return q1->children.at(0).kind;
    };
    ok &= expect(corner_kind(out.g0_max) == CertKind::VertexDominated,
                 "G0 corner closes by vertex domination");
    ok &= expect(corner_kind(out.ghalf_max) == CertKind::VertexDominated,
                 "G1/2 corner closes by vertex domination");

    // staged failure narrative: depth 0 fails on the unit square with
    // witness 123/2 at (1,1); depth 1 leaves exactly the first quadrant
    // open (for G1/2), witness 487/8
    MasterOutcome d0 = h3_master(0, 1);
    std::vector<const Certificate*> f0;
    d0.g0_max.collect_failures(f0);
    ok &= expect(!d0.valid && d0.failing_branch == "g0_max" && f0.size() == 1 &&
                     f0[0]->box == Box::unit_cube(2) &&
                     f0[0]->encl->hi == rat_s("123/2") &&
                     f0[0]->encl->argmax == std::vector<unsigned>{1, 1},
                 "depth-0 failure names [0,1]^2 with witness 123/2 at (1,1)");

    MasterOutcome d1 = h3_master(1, 1);
    std::vector<const Certificate*> f1;
    d1.ghalf_max.collect_failures(f1);
    Box q1({Interval{Rational(0), Rational(1, 2)}, Interval{Rational(0), Rational(1, 2)}});
    ok &= expect(!d1.valid && f1.size() == 1 && f1[0]->box == q1 &&
                     f1[0]->encl->hi == rat_s("487/8"),
                 "depth-1 failure names Q1 with witness 487/8");
    return ok;
}

// ---- 3: the sharp H2 bound --------------------------------------------------

bool h2_sharp_values() {
    bool ok = true;
    for (Rational t : {Rational(0), Rational(1, 8), Rational(1, 4)}) {
        H2Reduction r = h2_reduction(t);
        ok &= expect(r.bound == Rational(1, 36), "flat branch value 1/36");
    }
    for (Rational t : {Rational(1, 4), Rational(3, 8), Rational(1, 2)}) {
        H2Reduction r = h2_reduction(t);
        Rational want = (Rational(4) + (4 * t - Rational(1)).pow(2) /
                                           (Rational(8) + 20 * t - Rational(16) * t * t)) /
                        Rational(144);
        ok &= expect(r.bound == want, "vertex branch closed form");
    }
    H2Reduction half = h2_reduction(Rational(1, 2));
    ok &= expect(half.bound == Rational(19, 672), "value 19/672 at t=1/2");

    // 1000-point rational grid over s in [0,1]
    Rational b = 4 * Rational(1, 2) - Rational(1);
    Rational c = Rational(4) * Rational(1, 4) - 5 * Rational(1, 2) - Rational(2);
    Rational grid(0);
    for (long k = 0; k <= 1000; ++k) {
        Rational s(k, 1000);
        Rational v = Rational(4) + b * s + c * s * s;
        if (v > grid) grid = v;
    }
    ok &= expect(grid <= half.scaled_bound, "grid max below the exact bound");
    ok &= expect(half.scaled_bound - grid <= half.scaled_bound / Rational(1000),
                 "grid gap within 1/1000 of scale");
    return ok;
}

// ---- 4: exact symbolic identities -------------------------------------------

bool symbolic_identities() {
    bool ok = true;
    CoeffFormulas ref = coeff_formulas_reference();
    MultiPoly composed = Rational(8640) * (ref.a3 * (ref.a2 * ref.a4 - ref.a3 * ref.a3) -
                                           ref.a4 * (ref.a4 - ref.a2 * ref.a3) +
                                           ref.a5 * (ref.a3 - ref.a2 * ref.a2));
    ok &= expect(scaled_h3() == composed, "scaled H3 equals the composed route");
    ok &= expect(scaled_h3() == scaled_h3_reference(), "scaled H3 equals its reference form");

    GroupedForm gf = schwarz_substitute(scaled_h3());
    GroupedForm gr = grouped_form_reference();
    ok &= expect(gf.part_const == gr.part_const && gf.part_eta == gr.part_eta &&
                     gf.part_eta2 == gr.part_eta2 && gf.part_rho == gr.part_rho,
                 "substitution equals the reference grouping");

    MajorantChain chain = majorant_chain();
    MultiPoly y = MultiPoly::variable(majorant_vars(), "y");
    MultiPoly one = MultiPoly::constant(majorant_vars(), Rational(1));
    ok &= expect(chain.h1 - chain.h == chain.y_linear * (one - y),
                 "H1 - H = Lterm (1 - y)");
    ok &= expect(chain.g0 == g0_reference(), "G0 equals its reference extended form");
    ok &= expect(chain.ghalf == ghalf_reference(), "G1/2 equals its reference extended form");
    return ok;
}

// ---- 5: sharpness witnesses --------------------------------------------------

bool sharpness_witnesses() {
    bool ok = true;
    for (Rational t : {Rational(0), Rational(1, 4), Rational(1, 2)}) {
        auto a = expand_subordinate(schwarz_series(SchwarzSpec::monomial(2), 6), t, 6);
        auto v = hankel_from_taylor({a[1], a[2], a[3], a[4]});
        ok &= expect(a[1] == Rational(0) && a[2] == Rational(1, 6) && a[3] == Rational(0),
                     "z^2 coefficients (0, 1/6, 0)");
        ok &= expect(v.h2 == Rational(-1, 36), "z^2 gives H2 = -1/36");

        auto a3 = expand_subordinate(schwarz_series(SchwarzSpec::monomial(3), 6), t, 6);
        auto v3 = hankel_from_taylor({a3[1], a3[2], a3[3], a3[4]});
        ok &= expect(a3[1] == Rational(0) && a3[2] == Rational(0) &&
                         a3[3] == Rational(1, 12) && a3[4] == Rational(0),
                     "z^3 coefficients through a5");
        ok &= expect(v3.h3 == Rational(-1, 144), "z^3 gives H3 = -1/144");
    }

    Rng rng(606);
    for (int i = 0; i < 10; ++i) {
        Rational x = rng.rational_in_01();
        Rational t = rng.rational_in_01() * Rational(1, 2);
        auto a = expand_subordinate(schwarz_series(SchwarzSpec::blaschke(x), 5), t, 5);
        ok &= expect(a[1] == x / Rational(2), "blaschke a2 = x/2");
        ok &= expect(a[2] == ((Rational(2) + t) * x * x - Rational(1)) / Rational(6),
                     "blaschke a3 formula");
        ok &= expect(a[3] == x * ((Rational(6) + 7 * t) * x * x - (Rational(5) + 4 * t)) /
                                 Rational(24),
                     "blaschke a4 formula");
    }

    // 144 H2 on the blaschke family is -psi_t(x^2) identically
    const std::vector<std::string> XT{"x", "t"};
    MultiPoly x = MultiPoly::variable(XT, "x");
    MultiPoly t = MultiPoly::variable(XT, "t");
    MultiPoly family = scaled_h2().with_vars(schwarz_vars())
                           .substitute({x, x * x - MultiPoly::constant(XT, Rational(1)),
                                        x.pow(3) - x, x.pow(4) - x.pow(2), t});
    MultiPoly psi_x2(XT);
    const MultiPoly psi = psi_reference();
    for (const auto& [e, c] : psi.terms()) psi_x2.add_term({2 * e[0], e[1]}, c);
    bool family_ok = expect(family == -psi_x2, "144|H2| = psi_t(x^2) on the family");
    return ok && family_ok;
}

// ---- 6: nonnegativity certificates -------------------------------------------

bool nonneg_certificates() {
    MajorantChain chain = majorant_chain();
    bool ok = true;
    Certificate lterm = certify_nonneg(y_linear_expression(chain), y_linear_domain(), {});
    ok &= expect(lterm.valid(), "y-linear coefficient >= 0 on [0,1]^2 x [0,1/2]");
    Certificate convex =
        certify_nonneg(g1_convexity_expression(chain), y_linear_domain(), {});
    ok &= expect(convex.valid(), "d^2 G1/dt^2 >= 0 via the three-part split");
    for (const auto& f : majorant_factors()) {
        Certificate c = certify_nonneg(f.poly, f.domain, {});
        if (!c.valid()) {
            std::printf("    factor %s failed\n", f.name.c_str());
            ok = false;
        }
    }
    return ok;
}

// ---- 7: property suites -------------------------------------------------------

bool property_suites() {
    bool ok = true;
    Rng rng(899);

    // Bernstein machinery on 200 random cubic/quartic instances
    for (int i = 0; i < 200; ++i) {
        const unsigned deg = static_cast<unsigned>(rng.integer(3, 4));
        MultiPoly p = rng.poly({"a", "b"}, deg, 8);
        Rational lo1 = rng.rational(3, 3), lo2 = rng.rational(3, 3);
        Box box({Interval{lo1, lo1 + rng.rational_in_01() + Rational(1, 5)},
                 Interval{lo2, lo2 + rng.rational_in_01() + Rational(1, 5)}});
        BernsteinTensor bt = to_bernstein(p, {deg, deg}, box);
        Enclosure e = enclosure(bt);

        for (int k = 0; k < 2; ++k) {
            std::vector<Rational> pt{box.axis(0).lo + rng.rational_in_01() * box.width(0),
                                     box.axis(1).lo + rng.rational_in_01() * box.width(1)};
            Rational v = p.eval(pt);
            if (!(e.lo <= v && v <= e.hi)) ok = expect(false, "enclosure soundness");
        }
        for (int ca = 0; ca <= 1 && ok; ++ca)
            for (int cb = 0; cb <= 1; ++cb)
                if (bt.at({ca ? deg : 0u, cb ? deg : 0u}) != p.eval(box.corner({ca, cb})))
                    ok = expect(false, "corner interpolation");

        std::size_t axis = static_cast<std::size_t>(rng.integer(0, 1));
        auto [l, r] = subdivide(bt, axis);
        if (to_bernstein(p, {deg, deg}, l.box).coeffs != l.coeffs ||
            to_bernstein(p, {deg, deg}, r.box).coeffs != r.coeffs)
            ok = expect(false, "dual-route equality");
        if (!(enclosure(l).hi <= e.hi && enclosure(r).hi <= e.hi &&
              enclosure(l).lo >= e.lo && enclosure(r).lo >= e.lo))
            ok = expect(false, "monotone refinement");
        if (!ok) break;
    }

    // series vs symbolic formulas on 50 random schwarz tuples
    CoeffFormulas f = coeff_formulas();
    for (int i = 0; i < 50 && ok; ++i) {
        std::vector<Rational> c(4);
        for (auto& v : c) {
            long den = rng.integer(1, 9);
            v = Rational(rng.integer(-den, den), den);
        }
        Rational t = rng.rational_in_01() * Rational(1, 2);
        auto a = expand_subordinate(
            schwarz_series(SchwarzSpec::explicit_coefficients(c), 5), t, 5);
        std::vector<Rational> pt{c[0], c[1], c[2], c[3], t};
        if (a[1] != f.a2.eval(pt) || a[2] != f.a3.eval(pt) || a[3] != f.a4.eval(pt) ||
            a[4] != f.a5.eval(pt))
            ok = expect(false, "series/formula oracle equivalence");
    }

    // disk oracle for the quadratic maximum on 100 random triples
    for (int i = 0; i < 100 && ok; ++i) {
        Rational A = rng.rational(8, 4) / Rational(2);
        Rational B = rng.rational(8, 4) / Rational(2);
        Rational C = rng.rational(8, 4) / Rational(2);
        auto y = disk_quadratic_max(A, B, C);
        const double av = A.to_double(), bv = B.to_double(), cv = C.to_double();
        const int n = 200;
        double grid = 0.0;
        for (int ix = -n; ix <= n; ++ix) {
            for (int iy = -n; iy <= n; ++iy) {
                double re = ix / double(n), im = iy / double(n);
                double r2 = re * re + im * im;
                if (r2 > 1.0) continue;
                double vre = av + bv * re + cv * (re * re - im * im);
                double vim = bv * im + cv * (2 * re * im);
                double v = std::sqrt(vre * vre + vim * vim) + 1.0 - r2;
                if (v > grid) grid = v;
            }
        }
        double val = y.approx();
        if (!(grid <= val + 1e-9 && val <= grid + 8.0 * 1.5 / n + 1e-9))
            ok = expect(false, "disk-grid oracle agreement");
    }

    // the corner box always defeats pure enclosure
    MajorantChain chain = majorant_chain();
    Rational hi(1, 4);
    for (int d = 0; d <= 4 && ok; ++d) {
        Box corner({Interval{Rational(0), hi}, Interval{Rational(0), hi}});
        if (!(enclosure(to_bernstein(chain.g0, {6, 4}, corner)).hi > Rational(60)))
            ok = expect(false, "domination necessity at the corner");
        hi = hi / Rational(2);
    }
    return ok;
}

// ---- 8: the phi class conditions ----------------------------------------------

bool phi_class() {
    bool ok = true;
    struct Row {
        long m, n;
        bool univalent, re_positive;
    };
    const Row rows[] = {
        {1, 2, true, true},  {1, 3, true, true},   {1, 1, false, false},
        {2, 3, false, true}, {4, 5, false, true},
    };
    for (const auto& r : rows) {
        PhiReport rep = check_phi(r.m, r.n);
        if (rep.univalent != r.univalent || rep.starlike != r.univalent ||
            rep.re_positive != r.re_positive) {
            std::printf("    phi(%ld,%ld) flags wrong\n", r.m, r.n);
            ok = false;
        }
        if (rep.witness) {
            auto [z1, z2] = *rep.witness;
            if (!(phi_eval(rep.a, z1) == phi_eval(rep.a, z2)) || z1 == z2 ||
                !(z1.norm2() < Rational(1)) || !(z2.norm2() < Rational(1)))
                ok = expect(false, "witness exactness");
        }
    }

    ok &= expect(boundary_min(Rational(1, 5)) == Rational(1, 5), "boundary min, flat case");
    ok &= expect(boundary_min(Rational(1, 2)) == Rational(1, 4),
                 "boundary min, interior case");

    Rng rng(1234);
    for (int i = 0; i < 40 && ok; ++i) {
        long den = rng.integer(1, 30);
        long num = rng.integer(1, 2 * den);
        Rational a(num, den);
        Rational bm = boundary_min(a);
        const double av = a.to_double();
        double grid = 1e300;
        for (int k = 0; k <= 720; ++k) {
            double th = M_PI * k / 720;
            double v = 1.0 + std::cos(th) + av * std::cos(2 * th);
            if (v < grid) grid = v;
        }
        double slack = (1.0 + 2.0 * av) * (M_PI / 720) / 2.0 + 1e-9;
        if (!(bm.to_double() <= grid + 1e-9 && grid <= bm.to_double() + slack))
            ok = expect(false, "trigonometric sampling net");
        if ((bm > Rational(0)) != check_phi(num, den).re_positive)
            ok = expect(false, "boundary min sign matches the flag");
    }
    return ok;
}

int main() {
    criterion(1, "golden tables bit-exact", golden_tables);
    criterion(2, "h3 certification end-to-end", h3_end_to_end);
    criterion(3, "h2 sharp values", h2_sharp_values);
    criterion(4, "symbolic identities", symbolic_identities);
    criterion(5, "sharpness witnesses", sharpness_witnesses);
    criterion(6, "nonnegativity certificates", nonneg_certificates);
    criterion(7, "property suites", property_suites);
    criterion(8, "phi class conditions", phi_class);

    if (failures == 0) {
        std::printf("all 8 criteria PASS\n");
        return 0;
    }
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
}
