#include <doctest.h>

#include "core/hankel.hpp"
#include "core/multipoly.hpp"
#include "test_helpers.hpp"

using namespace hcert;
using testutil::Rng;

namespace {

MultiPoly var(const std::vector<std::string>& vars, const std::string& n) {
    return MultiPoly::variable(vars, n);
}
MultiPoly con(const std::vector<std::string>& vars, const Rational& c) {
    return MultiPoly::constant(vars, c);
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).den_string() == "2");
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK(Rational::from_string("7").to_string() == "7");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
}

TEST_CASE("polynomial ring operations") {
    const std::vector<std::string> V{"x"};
    MultiPoly x = var(V, "x");
    MultiPoly one = con(V, Rational(1));

    SUBCASE("difference of squares") {
        CHECK((x + one) * (x - one) == x * x - one);
    }
    SUBCASE("absorbing element") {
        MultiPoly p = x * x + 3 * x;
        CHECK((p * MultiPoly(V)).is_zero());
        CHECK((p * MultiPoly(V)).terms().empty());
    }
    SUBCASE("squaring z + a z^2 with a = 1/2") {
        const std::vector<std::string> W{"z"};
        MultiPoly z = var(W, "z");
        MultiPoly p = z + Rational(1, 2) * z.pow(2);
        MultiPoly sq = p * p;
        MultiPoly want = z.pow(2) + z.pow(3) + Rational(1, 4) * z.pow(4);
        CHECK(sq == want);
        CHECK(sq.eval({Rational(2)}) == Rational(16));
    }
    SUBCASE("mismatched variable lists are rejected") {
        MultiPoly y = var({"y"}, "y");
        CHECK_THROWS_AS(x + y, std::invalid_argument);
        CHECK_THROWS_AS(x * y, std::invalid_argument);
    }
}

TEST_CASE("evaluation") {
    const std::vector<std::string> V{"a", "b"};
    Rng rng(101);
    SUBCASE("constant term at the origin") {
        for (int i = 0; i < 20; ++i) {
            MultiPoly p = rng.poly(V, 3, 6);
            CHECK(p.eval({Rational(0), Rational(0)}) == p.constant_term());
        }
    }
    SUBCASE("evaluation is a ring homomorphism") {
        for (int i = 0; i < 30; ++i) {
            MultiPoly p = rng.poly(V, 3, 5);
            MultiPoly q = rng.poly(V, 3, 5);
            auto pt = rng.point(2);
            CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
            CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
        }
    }
    SUBCASE("dimension mismatch") {
        MultiPoly p = rng.poly(V, 2, 3);
        CHECK_THROWS_AS(p.eval({Rational(1)}), std::invalid_argument);
    }
}

TEST_CASE("affine substitution") {
    const std::vector<std::string> V{"x"};
    MultiPoly x = var(V, "x");

    SUBCASE("x^2 under x -> u/2") {
        CHECK(x.pow(2).subst_affine("x", Rational(1, 2), Rational(0)) ==
              Rational(1, 4) * x.pow(2));
    }
    SUBCASE("x -> u/4 + 1/4 maps [0,1] onto [1/4,1/2]") {
        MultiPoly m = x.subst_affine("x", Rational(1, 4), Rational(1, 4));
        CHECK(m.eval({Rational(0)}) == Rational(1, 4));
        CHECK(m.eval({Rational(1)}) == Rational(1, 2));
    }
    SUBCASE("eval(subst(p), u) == eval(p, scale*u + shift)") {
        Rng rng(7);
        const std::vector<std::string> W{"a", "b"};
        for (int i = 0; i < 30; ++i) {
            MultiPoly p = rng.poly(W, 3, 6);
            Rational scale = rng.rational();
            Rational shift = rng.rational();
            Rational u = rng.rational();
            Rational other = rng.rational();
            MultiPoly s = p.subst_affine("a", scale, shift);
            CHECK(s.eval({u, other}) == p.eval({scale * u + shift, other}));
        }
    }
    SUBCASE("unknown variable") {
        CHECK_THROWS_AS(x.subst_affine("y", Rational(1), Rational(0)),
                        std::invalid_argument);
    }
}

TEST_CASE("formal partial derivatives") {
    const std::vector<std::string> V{"t", "s"};
    MultiPoly t = var(V, "t"), s = var(V, "s");

    MultiPoly p = (4 * t.pow(2) - 5 * t - con(V, Rational(2))) * s.pow(2);
    CHECK(p.partial("t", 2) == 8 * s.pow(2));
    CHECK_THROWS_AS(p.partial("t", 0), std::invalid_argument);
    CHECK_THROWS_AS(p.partial("q", 1), std::invalid_argument);

    Rng rng(13);
    for (int i = 0; i < 10; ++i) {
        MultiPoly q = rng.poly(V, 4, 8);
        CHECK(q.partial("t", 1).partial("s", 1) == q.partial("s", 1).partial("t", 1));
    }
}

TEST_CASE("ring laws on random instances") {
    Rng rng(42);
    const std::vector<std::string> V{"x", "y", "z"};
    for (int i = 0; i < 25; ++i) {
        MultiPoly a = rng.poly(V, 2, 4);
        MultiPoly b = rng.poly(V, 2, 4);
        MultiPoly c = rng.poly(V, 2, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
    }
}

TEST_CASE("hankel determinants") {
    SUBCASE("1x1 is the anchor coefficient") {
        std::vector<Rational> a{Rational(1), Rational(1, 2), Rational(1, 3)};
        CHECK(hankel_det(a, 1, 2) == Rational(1, 2));
        CHECK(hankel_det(a, 1, 3) == Rational(1, 3));
    }
    SUBCASE("second determinant of the z^2 extremal data") {
        std::vector<Rational> a{Rational(1), Rational(0), Rational(1, 6), Rational(0),
                                Rational(0)};
        CHECK(hankel_det(a, 2, 2) == Rational(-1, 36));
    }
    SUBCASE("third determinant of the z^3 extremal data") {
        std::vector<Rational> a{Rational(1), Rational(0), Rational(0), Rational(1, 12),
                                Rational(0)};
        CHECK(hankel_det(a, 3, 1) == Rational(-1, 144));
    }
    SUBCASE("insufficient coefficients") {
        std::vector<Rational> a{Rational(1), Rational(1)};
        CHECK_THROWS_AS(hankel_det(a, 3, 1), std::invalid_argument);
    }
    SUBCASE("agrees with cofactor expansion on random instances") {
        Rng rng(99);
        for (int i = 0; i < 40; ++i) {
            std::vector<Rational> a(8);
            for (auto& v : a) v = rng.rational();
            unsigned n = static_cast<unsigned>(rng.integer(1, 4));
            Rational want2 = a[n - 1] * a[n + 1] - a[n] * a[n];
            CHECK(hankel_det(a, 2, n) == want2);
            auto at = [&](unsigned k) { return a[k - 1]; };
            Rational want3 = at(n) * (at(n + 2) * at(n + 4) - at(n + 3) * at(n + 3)) -
                             at(n + 1) * (at(n + 1) * at(n + 4) - at(n + 3) * at(n + 2)) +
                             at(n + 2) * (at(n + 1) * at(n + 3) - at(n + 2) * at(n + 2));
            CHECK(hankel_det(a, 3, n) == want3);
        }
    }
    SUBCASE("bareiss handles zero and vanishing pivots") {
        std::vector<std::vector<Rational>> m{{Rational(0), Rational(1)},
                                             {Rational(1), Rational(0)}};
        CHECK(bareiss_det(m) == Rational(-1));
        std::vector<std::vector<Rational>> sing{{Rational(1), Rational(2)},
                                                {Rational(2), Rational(4)}};
        CHECK(bareiss_det(sing) == Rational(0));
    }
}

TEST_CASE("box geometry") {
    Box b({Interval{Rational(0), Rational(1)}, Interval{Rational(0), Rational(1, 2)}});
    CHECK(b.dim() == 2);
    CHECK(b.width(1) == Rational(1, 2));
    CHECK(b.contains({Rational(1, 2), Rational(1, 4)}));
    CHECK_FALSE(b.contains({Rational(1, 2), Rational(3, 4)}));
    CHECK(b.corner({1, 0}) == std::vector<Rational>{Rational(1), Rational(0)});
    CHECK_THROWS_AS(Box({Interval{Rational(1), Rational(0)}}), std::invalid_argument);
}
