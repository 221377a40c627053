#include <doctest.h>

#include "core/functionals.hpp"
#include "core/series.hpp"
#include "test_helpers.hpp"

using namespace hcert;
using testutil::Rng;
using testutil::eval_complex;

TEST_CASE("coefficient formulas match their closed forms") {
    CoeffFormulas f = coeff_formulas();
    CoeffFormulas ref = coeff_formulas_reference();
    CHECK(f.a2 == ref.a2);
    CHECK(f.a3 == ref.a3);
    CHECK(f.a4 == ref.a4);
    CHECK(f.a5 == ref.a5);

    // a3 at (c1,c2) = (0,1) is 1/6 for every t
    CHECK(f.a3.eval({0, 1, 0, 0, Rational(1, 3)}) == Rational(1, 6));
    // a2 vanishes with c1
    CHECK(f.a2.eval({0, 5, 7, 9, Rational(1, 2)}) == Rational(0));
    // a5 at c = (0,1,0,0), t = 1/2
    CHECK(f.a5.eval({0, 1, 0, 0, Rational(1, 2)}) == Rational(1, 20));
}

TEST_CASE("scaled H2 functional") {
    MultiPoly h2 = scaled_h2();
    CHECK(h2 == scaled_h2_reference());
    CHECK(h2.vars() == std::vector<std::string>{"c1", "c2", "c3", "t"});

    CHECK(h2.eval({0, 1, 0, Rational(2, 7)}) == Rational(-4));
    CHECK(h2.eval({1, 0, 0, 0}) == Rational(-1));
    CHECK(h2.eval({0, 0, 0, Rational(1, 3)}) == Rational(0));
}

TEST_CASE("scaled H3 functional") {
    MultiPoly h3 = scaled_h3();
    CHECK(h3 == scaled_h3_reference());

    CHECK(h3.eval({0, 0, 1, 0, Rational(1, 5)}) == Rational(-60));
    CHECK(h3.eval({0, 1, 0, 0, Rational(1, 2)}) == Rational(32));
    CHECK(h3.eval({0, 0, 0, 0, Rational(1, 4)}) == Rational(0));

    // the composed route through the closed coefficient formulas
    CoeffFormulas f = coeff_formulas_reference();
    MultiPoly composed = Rational(8640) * (f.a3 * (f.a2 * f.a4 - f.a3 * f.a3) -
                                           f.a4 * (f.a4 - f.a2 * f.a3) +
                                           f.a5 * (f.a3 - f.a2 * f.a2));
    CHECK(h3 == composed);
}

TEST_CASE("parametrized decomposition") {
    GroupedForm gf = schwarz_substitute(scaled_h3());
    GroupedForm ref = grouped_form_reference();

    SUBCASE("matches the reference parts") {
        CHECK(gf.part_const == ref.part_const);
        CHECK(gf.part_eta == ref.part_eta);
        CHECK(gf.part_eta2 == ref.part_eta2);
        CHECK(gf.part_rho == ref.part_rho);
    }
    SUBCASE("parts reassemble the full substitution") {
        const auto& P = param_vars();
        MultiPoly e = MultiPoly::variable(P, "e");
        MultiPoly r = MultiPoly::variable(P, "r");
        MultiPoly whole = gf.part_const + gf.part_eta * e + gf.part_eta2 * e * e +
                          gf.part_rho * r;
        CHECK(whole == parametrized(scaled_h3()));
    }
    SUBCASE("every part vanishes at p = 1 except the leading one") {
        Rng rng(77);
        for (int i = 0; i < 10; ++i) {
            std::vector<Rational> pt{Rational(1), rng.rational(), rng.rational(),
                                     rng.rational(), rng.rational(), rng.rational(),
                                     rng.rational_in_01()};
            CHECK(gf.part_eta.eval(pt) == Rational(0));
            CHECK(gf.part_eta2.eval(pt) == Rational(0));
            CHECK(gf.part_rho.eval(pt) == Rational(0));
        }
    }
    SUBCASE("substituting a constant gives a pure constant part") {
        MultiPoly one = MultiPoly::constant(schwarz_vars(), Rational(1));
        GroupedForm g1 = schwarz_substitute(one);
        CHECK(g1.part_const == MultiPoly::constant(param_vars(), Rational(1)));
        CHECK(g1.part_eta.is_zero());
        CHECK(g1.part_eta2.is_zero());
        CHECK(g1.part_rho.is_zero());
    }
    SUBCASE("variables outside the schwarz set are rejected") {
        MultiPoly alien = MultiPoly::variable({"c1", "q"}, "q");
        CHECK_THROWS_AS(schwarz_substitute(alien), std::invalid_argument);
    }
}

TEST_CASE("majorant chain") {
    MajorantChain chain = majorant_chain();
    const MultiPoly& h = chain.h;

    SUBCASE("reference anchor values") {
        // H(0,0,1,t) = 60
        CHECK(h.eval({0, 0, 1, Rational(1, 3)}) == Rational(60));
        CHECK(h.eval({0, 0, 1, Rational(1, 2)}) == Rational(60));
        // H(1,x,y,t) = 1 - 6t + 21t^2 + 4t^3
        Rng rng(5);
        for (int i = 0; i < 8; ++i) {
            Rational x = rng.rational_in_01(), y = rng.rational_in_01(),
                     t = rng.rational_in_01() * Rational(1, 2);
            CHECK(h.eval({Rational(1), x, y, t}) ==
                  Rational(1) - 6 * t + Rational(21) * t * t + Rational(4) * t.pow(3));
        }
        // H(0,0,0,t) = 0
        CHECK(h.eval({0, 0, 0, Rational(1, 4)}) == Rational(0));
    }
    SUBCASE("lift identities") {
        const auto& M = majorant_vars();
        MultiPoly y = MultiPoly::variable(M, "y");
        MultiPoly one = MultiPoly::constant(M, Rational(1));
        CHECK(chain.h1 - h == chain.y_linear * (one - y));
        CHECK(chain.h1.fix_var("y", Rational(1)) == h.fix_var("y", Rational(1)));
        CHECK(chain.h1.coefficient_of("y", 1).is_zero());
    }
    SUBCASE("restrictions match the reference forms") {
        CHECK(chain.g0 == g0_reference());
        CHECK(chain.ghalf == ghalf_reference());
        CHECK(chain.g2 == g2_reference());
        CHECK(g2_on_unit_cube(chain.g2) == g2_ucube_reference());
    }
    SUBCASE("G0 corner value and beta-vertex anchor") {
        CHECK(chain.g0.eval({0, 0}) == Rational(60));
        CHECK(chain.ghalf.eval({0, 0}) == Rational(60));
        CHECK(chain.g0.eval({1, 1}) == Rational(1));
    }
    SUBCASE("H dominates H1 pointwise on samples") {
        Rng rng(23);
        for (int i = 0; i < 50; ++i) {
            std::vector<Rational> pt{rng.rational_in_01(), rng.rational_in_01(),
                                     rng.rational_in_01(),
                                     rng.rational_in_01() * Rational(1, 2)};
            CHECK(h.eval(pt) <= chain.h1.eval(pt));
        }
    }
}

TEST_CASE("majorization soundness on sampled complex data") {
    MajorantChain chain = majorant_chain();
    MultiPoly q = parametrized(scaled_h3());
    Rng rng(2024);

    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        Rational p = rng.rational_in_01();
        Rational x = rng.rational_in_01();   // |gamma|
        Rational y = rng.rational_in_01();   // |eta|
        Rational rho_mod = rng.rational_in_01();
        Rational t = rng.rational_in_01() * Rational(1, 2);

        RationalComplex gamma = rng.with_modulus(x);
        RationalComplex eta = rng.with_modulus(y);
        RationalComplex rho = rng.with_modulus(rho_mod);
        RationalComplex gc{gamma.re, -gamma.im};
        RationalComplex ec{eta.re, -eta.im};

        RationalComplex value = eval_complex(
            q, {{p, Rational(0)}, gamma, gc, eta, ec, rho, {t, Rational(0)}});
        Rational bound = chain.h.eval({p, x, y, t});
        REQUIRE(bound >= Rational(0));
        CHECK(value.norm2() <= bound * bound);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("sharp H2 reduction") {
    SUBCASE("flat branch") {
        for (Rational t : {Rational(0), Rational(1, 8), Rational(1, 4)}) {
            H2Reduction r = h2_reduction(t);
            CHECK(r.scaled_bound == Rational(4));
            CHECK(r.bound == Rational(1, 36));
            CHECK(r.maximizer == Rational(0));
            CHECK_FALSE(r.vertex_branch);
        }
    }
    SUBCASE("vertex branch") {
        H2Reduction r = h2_reduction(Rational(1, 2));
        CHECK(r.scaled_bound == Rational(57, 14));
        CHECK(r.bound == Rational(19, 672));
        CHECK(r.maximizer == Rational(1, 7));
        CHECK(r.vertex_branch);

        H2Reduction r38 = h2_reduction(Rational(3, 8));
        // 4 + (4t-1)^2/(8+20t-16t^2) at t = 3/8
        Rational t(3, 8);
        Rational expect =
            Rational(4) + (4 * t - Rational(1)).pow(2) /
                              (Rational(8) + 20 * t - Rational(16) * t * t);
        CHECK(r38.scaled_bound == expect);
        CHECK(r38.bound == expect / Rational(144));
    }
    SUBCASE("grid corroboration at several t") {
        for (Rational t : {Rational(0), Rational(1, 8), Rational(1, 4), Rational(3, 8),
                           Rational(1, 2)}) {
            H2Reduction r = h2_reduction(t);
            Rational b = 4 * t - Rational(1);
            Rational c = Rational(4) * t * t - 5 * t - Rational(2);
            Rational grid_max(0);
            for (long k = 0; k <= 1000; ++k) {
                Rational s(k, 1000);
                Rational v = Rational(4) + b * s + c * s * s;
                if (v > grid_max) grid_max = v;
            }
            CHECK(grid_max <= r.scaled_bound);
            CHECK(r.scaled_bound - grid_max <= r.scaled_bound / Rational(1000));
        }
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(h2_reduction(Rational(3, 4)), std::domain_error);
        CHECK_THROWS_AS(h2_reduction(Rational(-1, 10)), std::domain_error);
    }
    SUBCASE("collapsed quadratic evaluates at the vertex point") {
        // psi at (s,t) = (1/7, 1/2) is 4 + 1/14
        CHECK(psi_reference().eval({Rational(1, 7), Rational(1, 2)}) == Rational(57, 14));
    }
}

TEST_CASE("blaschke family saturates the H2 bound") {
    // 144 (a3^2 - a2 a4) for the blaschke coefficients equals psi_t(x^2)
    // identically
    const std::vector<std::string> XT{"x", "t"};
    MultiPoly x = MultiPoly::variable(XT, "x");
    MultiPoly c1 = x;
    MultiPoly c2 = x * x - MultiPoly::constant(XT, Rational(1));
    MultiPoly c3 = x.pow(3) - x;
    MultiPoly c4 = x.pow(4) - x.pow(2);
    MultiPoly t = MultiPoly::variable(XT, "t");

    MultiPoly h2 = scaled_h2().with_vars(schwarz_vars());
    MultiPoly on_family = h2.substitute({c1, c2, c3, c4, t});

    MultiPoly psi = psi_reference();  // over {s,t}
    MultiPoly psi_x2(XT);
    for (const auto& [e, c] : psi.terms()) psi_x2.add_term({2 * e[0], e[1]}, c);

    CHECK(on_family == -psi_x2);
}

TEST_CASE("disk quadratic maximum") {
    SUBCASE("case-table values") {
        auto y0 = disk_quadratic_max(0, 0, 0);
        CHECK(y0.q == Rational(1));
        CHECK(y0.d == Rational(1));
        CHECK(y0.branch == 2);

        auto y1 = disk_quadratic_max(1, 2, 1);
        CHECK(y1.q == Rational(4));
        CHECK(y1.branch == 1);

        auto y2 = disk_quadratic_max(1, 1, 0);
        CHECK(y2.q == Rational(9, 4));
        CHECK(y2.branch == 2);
    }
    SUBCASE("sqrt branch is exact") {
        auto y = disk_quadratic_max(1, 1, -1);
        CHECK(y.branch == 7);
        CHECK(y.q == Rational(2));
        CHECK(y.d == Rational(5, 4));  // value 2 sqrt(5)/2 = sqrt(5)
    }
    SUBCASE("disk-grid oracle on random triples") {
        Rng rng(404);
        int sqrt_branch_seen = 0;
        for (int i = 0; i < 100; ++i) {
            Rational A = rng.rational(8, 4) / Rational(2);  // in [-2, 2]
            Rational B = rng.rational(8, 4) / Rational(2);
            Rational C = rng.rational(8, 4) / Rational(2);
            auto y = disk_quadratic_max(A, B, C);
            if (y.branch == 7) ++sqrt_branch_seen;

            const double av = A.to_double(), bv = B.to_double(), cv = C.to_double();
            const int n = 200;
            double grid_max = 0.0;
            auto probe = [&](double re, double im) {
                double r2 = re * re + im * im;
                if (r2 > 1.0 + 1e-12) return;
                double vre = av + bv * re + cv * (re * re - im * im);
                double vim = bv * im + cv * (2 * re * im);
                double v = std::sqrt(vre * vre + vim * vim) + 1.0 - r2;
                if (v > grid_max) grid_max = v;
            };
            for (int ix = -n; ix <= n; ++ix)
                for (int iy = -n; iy <= n; ++iy)
                    probe(ix / double(n), iy / double(n));

            const double value = y.approx();
            // grid points never beat the exact maximum, and the maximum is
            // attained within one grid cell (derivative bounded by
            // |B| + 2|C| + 2 <= 8 on the disk)
            CHECK(grid_max <= value + 1e-9);
            CHECK(value <= grid_max + 8.0 * 1.5 / n + 1e-9);
        }
        CHECK(sqrt_branch_seen > 0);
    }
}
