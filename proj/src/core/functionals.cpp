#include "functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "certify.hpp"
#include "series_core.hpp"

namespace hcert {

namespace {

// tiny builder for hand-written polynomial formulas
struct Ctx {
    std::vector<std::string> vars;
    MultiPoly operator()(const std::string& n) const { return MultiPoly::variable(vars, n); }
    MultiPoly k(long num, long den = 1) const {
        return MultiPoly::constant(vars, Rational(num, den));
    }
};

MultiPoly from_terms(const std::vector<std::string>& vars,
                     const std::vector<std::pair<Rational, std::vector<unsigned>>>& terms) {
    MultiPoly p(vars);
    for (const auto& [c, e] : terms) p.add_term(e, c);
    return p;
}

bool poly_is_zero(const MultiPoly& m) { return m.is_zero(); }

}  // namespace

CoeffFormulas coeff_formulas() {
    const auto& V = schwarz_vars();
    const MultiPoly zero(V);
    const MultiPoly one = MultiPoly::constant(V, Rational(1));
    // w = c1 z + c2 z^2 + c3 z^3 + c4 z^4, to order 5
    std::vector<MultiPoly> w{zero, MultiPoly::variable(V, "c1"), MultiPoly::variable(V, "c2"),
                             MultiPoly::variable(V, "c3"), MultiPoly::variable(V, "c4")};
    auto a = series_core::subordinate_taylor(w, MultiPoly::variable(V, "t"), zero, one,
                                             poly_is_zero);
    return CoeffFormulas{a[1], a[2], a[3], a[4]};
}

CoeffFormulas coeff_formulas_reference() {
    Ctx V{schwarz_vars()};
    auto c1 = V("c1"), c2 = V("c2"), c3 = V("c3"), c4 = V("c4"), t = V("t");
    CoeffFormulas f;
    f.a2 = Rational(1, 2) * c1;
    f.a3 = Rational(1, 6) * ((V.k(1) + t) * c1.pow(2) + c2);
    f.a4 = Rational(1, 24) *
           ((V.k(1) + 3 * t) * c1.pow(3) + (V.k(3) + 4 * t) * c1 * c2 + 2 * c3);
    f.a5 = Rational(1, 120) *
           ((V.k(1) + 6 * t + 3 * t.pow(2)) * c1.pow(4) +
            2 * (V.k(3) + 11 * t) * c1.pow(2) * c2 + (V.k(3) + 6 * t) * c2.pow(2) +
            4 * (V.k(2) + 3 * t) * c1 * c3 + 6 * c4);
    return f;
}

MultiPoly scaled_h2() {
    CoeffFormulas f = coeff_formulas();
    MultiPoly h2 = Rational(144) * (f.a2 * f.a4 - f.a3 * f.a3);
    return h2.without_vars({"c4"});
}

MultiPoly scaled_h2_reference() {
    Ctx V{{"c1", "c2", "c3", "t"}};
    auto c1 = V("c1"), c2 = V("c2"), c3 = V("c3"), t = V("t");
    return (4 * t + V.k(1)) * c1.pow(2) * c2 + 6 * c1 * c3 - 4 * c2.pow(2) -
           (4 * t.pow(2) - t + V.k(1)) * c1.pow(4);
}

MultiPoly scaled_h3() {
    CoeffFormulas f = coeff_formulas();
    MultiPoly h3 = f.a3 * (f.a2 * f.a4 - f.a3 * f.a3) - f.a4 * (f.a4 - f.a2 * f.a3) +
                   f.a5 * (f.a3 - f.a2 * f.a2);
    return Rational(8640) * h3;
}

MultiPoly scaled_h3_reference() {
    Ctx V{schwarz_vars()};
    auto c1 = V("c1"), c2 = V("c2"), c3 = V("c3"), c4 = V("c4"), t = V("t");
    return -(V.k(1) - 6 * t + 21 * t.pow(2) + 4 * t.pow(3)) * c1.pow(6) +
           6 * (V.k(1) - 3 * t + 10 * t.pow(2)) * c1.pow(4) * c2 +
           (V.k(-4) + 72 * t) * c2.pow(3) +
           12 * (V.k(1) - 3 * t + 12 * t.pow(2)) * c1.pow(3) * c3 +
           12 * (V.k(3) - 8 * t) * c1 * c2 * c3 - 60 * c3.pow(2) + 72 * c2 * c4 -
           3 * c1.pow(2) *
               ((V.k(7) - 8 * t + 56 * t.pow(2)) * c2.pow(2) +
                12 * (V.k(1) - 2 * t) * c4);
}

MultiPoly parametrized(const MultiPoly& target) {
    const auto& P = param_vars();
    Ctx W{P};
    auto p = W("p"), g = W("g"), gc = W("gc"), e = W("e"), ec = W("ec"), r = W("r"),
         t = W("t");
    const MultiPoly one = W.k(1);
    MultiPoly m2 = one - p.pow(2);          // 1 - c1^2
    MultiPoly mg = one - g * gc;            // 1 - |gamma|^2
    MultiPoly me = one - e * ec;            // 1 - |eta|^2

    std::vector<MultiPoly> images;
    for (const auto& v : target.vars()) {
        if (v == "c1") images.push_back(p);
        else if (v == "c2") images.push_back(m2 * g);
        else if (v == "c3") images.push_back(m2 * (e * mg - p * g.pow(2)));
        else if (v == "c4")
            images.push_back(m2 * (p.pow(2) * g.pow(3) -
                                   mg * (2 * p * g * e + gc * e.pow(2)) + mg * me * r));
        else if (v == "t") images.push_back(t);
        else
            throw std::invalid_argument("parametrized: unexpected variable '" + v + "'");
    }
    return target.substitute(images);
}

GroupedForm schwarz_substitute(const MultiPoly& target) {
    MultiPoly q = parametrized(target);
    const auto& P = param_vars();
    const std::size_t ie = q.var_index("e"), iec = q.var_index("ec"),
                      ir = q.var_index("r");
    GroupedForm out{MultiPoly(P), MultiPoly(P), MultiPoly(P), MultiPoly(P)};
    for (const auto& [expo, c] : q.terms()) {
        MultiPoly::Exponents rest = expo;
        if (expo[ir] == 1) {
            rest[ir] = 0;
            out.part_rho.add_term(rest, c);   // may carry e*ec
            continue;
        }
        if (expo[ir] != 0 || expo[iec] != 0 || expo[ie] > 2)
            throw std::logic_error("schwarz_substitute: unexpected monomial structure");
        const unsigned k = expo[ie];
        rest[ie] = 0;
        if (k == 0) out.part_const.add_term(rest, c);
        else if (k == 1) out.part_eta.add_term(rest, c);
        else out.part_eta2.add_term(rest, c);
    }
    return out;
}

GroupedForm grouped_form_reference() {
    Ctx W{param_vars()};
    auto p = W("p"), g = W("g"), gc = W("gc"), e = W("e"), ec = W("ec"), t = W("t");
    const MultiPoly one = W.k(1);
    MultiPoly d2 = p.pow(2) - one;   // -1 + c1^2
    MultiPoly dg = g * gc - one;     // -1 + |gamma|^2
    MultiPoly de = e * ec - one;     // -1 + |eta|^2

    GroupedForm f{MultiPoly(param_vars()), MultiPoly(param_vars()),
                  MultiPoly(param_vars()), MultiPoly(param_vars())};
    f.part_const =
        -(one - 6 * t + 21 * t.pow(2) + 4 * t.pow(3)) * p.pow(6) -
        6 * (one - 3 * t + 10 * t.pow(2)) * g * p.pow(4) * d2 +
        12 * g.pow(4) * p.pow(2) * d2.pow(2) -
        3 * g.pow(2) * p.pow(2) * d2 *
            (W.k(-7) + 3 * p.pow(2) + 8 * t.pow(2) * (W.k(-7) + p.pow(2)) +
             4 * t * (W.k(2) + p.pow(2))) -
        4 * g.pow(3) * d2 *
            (W.k(-1) - 7 * p.pow(2) - p.pow(4) +
             6 * t * (W.k(3) - 2 * p.pow(2) + 2 * p.pow(4)));
    f.part_eta =
        12 * dg * p * d2 *
        ((one - 3 * t + 12 * t.pow(2)) * p.pow(2) + 2 * g.pow(2) * d2 +
         3 * g * (one + p.pow(2)) - 4 * t * g * (W.k(2) + p.pow(2)));
    f.part_eta2 =
        -12 * dg * d2 *
        (W.k(5) - 5 * p.pow(2) + 5 * g * gc * d2 -
         3 * ((one - 2 * t) * p.pow(2) + 2 * g * d2) * gc);
    f.part_rho = 36 * dg * de * d2 * ((one - 2 * t) * p.pow(2) + 2 * g * d2);
    return f;
}

namespace {

// ----- grouped-factor majorization catalog ------------------------------

// one sign-definite group of the decomposition: coeff * g^gp * gc^gcp *
// (1-|g|^2)^m * (1-|e|^2)^k * prod(factors), sitting in one of the four
// parts. The majorant replaces moduli: |g|->x, |e|->y, |r|->1.
struct Group {
    int part;  // 0 const, 1 eta, 2 eta2, 3 rho
    Rational coeff;
    unsigned gp = 0, gcp = 0;
    unsigned m = 0;  // power of (1-|gamma|^2)
    unsigned k = 0;  // power of (1-|eta|^2)
    std::vector<std::string> factors;
};

const std::vector<Group>& group_catalog() {
    static const std::vector<Group> groups = {
        {0, Rational(-1), 0, 0, 0, 0, {"cubic_t", "p6"}},
        {0, Rational(6), 1, 0, 0, 0, {"q10", "p4", "one_minus_p2"}},
        {0, Rational(12), 4, 0, 0, 0, {"p2", "one_minus_p2", "one_minus_p2"}},
        {0, Rational(-3), 2, 0, 0, 0, {"p2", "one_minus_p2", "bracket"}},
        {0, Rational(-4), 3, 0, 0, 0, {"one_minus_p2", "one_plus_7p2_p4"}},
        {0, Rational(24), 3, 0, 0, 0, {"one_minus_p2", "t", "three_minus_2p2_2p4"}},
        {1, Rational(12), 0, 0, 1, 0, {"p", "p2", "one_minus_p2", "q12"}},
        {1, Rational(-24), 2, 0, 1, 0, {"p", "one_minus_p2", "one_minus_p2"}},
        {1, Rational(36), 1, 0, 1, 0, {"p", "one_minus_p2", "one_plus_p2"}},
        {1, Rational(-48), 1, 0, 1, 0, {"p", "one_minus_p2", "t", "two_plus_p2"}},
        {2, Rational(-60), 0, 0, 2, 0, {"one_minus_p2", "one_minus_p2"}},
        {2, Rational(36), 0, 1, 1, 0, {"one_minus_p2", "one_minus_2t", "p2"}},
        {2, Rational(-72), 1, 1, 1, 0, {"one_minus_p2", "one_minus_p2"}},
        {3, Rational(-36), 0, 0, 1, 1, {"one_minus_p2", "one_minus_2t", "p2"}},
        {3, Rational(72), 1, 0, 1, 1, {"one_minus_p2", "one_minus_p2"}},
    };
    return groups;
}

MultiPoly factor_poly(const std::string& name) {
    Ctx F{{"p", "t"}};
    auto p = F("p"), t = F("t");
    if (name == "p") return p;
    if (name == "p2") return p.pow(2);
    if (name == "p4") return p.pow(4);
    if (name == "p6") return p.pow(6);
    if (name == "t") return t;
    if (name == "one_minus_p2") return F.k(1) - p.pow(2);
    if (name == "one_plus_p2") return F.k(1) + p.pow(2);
    if (name == "two_plus_p2") return F.k(2) + p.pow(2);
    if (name == "one_plus_7p2_p4") return F.k(1) + 7 * p.pow(2) + p.pow(4);
    if (name == "three_minus_2p2_2p4") return F.k(3) - 2 * p.pow(2) + 2 * p.pow(4);
    if (name == "one_minus_2t") return F.k(1) - 2 * t;
    if (name == "q10") return F.k(1) - 3 * t + 10 * t.pow(2);
    if (name == "q12") return F.k(1) - 3 * t + 12 * t.pow(2);
    if (name == "cubic_t") return F.k(1) - 6 * t + 21 * t.pow(2) + 4 * t.pow(3);
    if (name == "bracket")
        return F.k(7) - 3 * p.pow(2) + 8 * t.pow(2) * (F.k(7) - p.pow(2)) -
               4 * t * (F.k(2) + p.pow(2));
    throw std::logic_error("unknown majorant factor '" + name + "'");
}

Box pt_domain() {
    return Box({Interval{Rational(0), Rational(1)}, Interval{Rational(0), Rational(1, 2)}});
}

}  // namespace

std::vector<MajorantFactor> majorant_factors() {
    std::vector<MajorantFactor> out;
    std::vector<std::string> names = {
        "p",  "p2",  "p4", "p6", "t", "one_minus_p2", "one_plus_p2", "two_plus_p2",
        "one_plus_7p2_p4", "three_minus_2p2_2p4", "one_minus_2t", "q10", "q12",
        "cubic_t", "bracket"};
    for (const auto& n : names) out.push_back({n, factor_poly(n), pt_domain()});
    return out;
}

MajorantChain majorant_chain() {
    // rebuild the four parts from the group catalog and check them
    // against the direct substitution
    GroupedForm direct = schwarz_substitute(scaled_h3());

    const auto& P = param_vars();
    Ctx W{P};
    auto g = W("g"), gc = W("gc"), e = W("e"), ec = W("ec");
    const MultiPoly mg = W.k(1) - g * gc;
    const MultiPoly me = W.k(1) - e * ec;

    GroupedForm rebuilt{MultiPoly(P), MultiPoly(P), MultiPoly(P), MultiPoly(P)};
    Ctx M{majorant_vars()};
    auto x = M("x"), y = M("y");
    const MultiPoly mx = M.k(1) - x.pow(2);
    const MultiPoly my = M.k(1) - y.pow(2);
    MultiPoly h(majorant_vars());

    for (const auto& grp : group_catalog()) {
        MultiPoly exact = MultiPoly::constant(P, grp.coeff) * g.pow(grp.gp) *
                          gc.pow(grp.gcp) * mg.pow(grp.m) * me.pow(grp.k);
        MultiPoly maj = MultiPoly::constant(majorant_vars(), grp.coeff.abs()) *
                        x.pow(grp.gp + grp.gcp) * mx.pow(grp.m) * my.pow(grp.k);
        if (grp.part == 1) maj = maj * y;
        if (grp.part == 2) maj = maj * y.pow(2);
        for (const auto& fname : grp.factors) {
            MultiPoly f = factor_poly(fname);
            exact = exact * f.with_vars(P);
            maj = maj * f.with_vars(majorant_vars());
        }
        switch (grp.part) {
            case 0: rebuilt.part_const += exact; break;
            case 1: rebuilt.part_eta += exact; break;
            case 2: rebuilt.part_eta2 += exact; break;
            case 3: rebuilt.part_rho += exact; break;
        }
        h += maj;
    }

    if (!(rebuilt.part_const == direct.part_const && rebuilt.part_eta == direct.part_eta &&
          rebuilt.part_eta2 == direct.part_eta2 && rebuilt.part_rho == direct.part_rho))
        throw std::logic_error("majorant_chain: group catalog disagrees with substitution");

    // every factor must be certified nonnegative on the domain
    CertifyPolicy factor_policy;
    factor_policy.max_depth = 2;
    for (const auto& f : majorant_factors()) {
        Certificate c = certify_nonneg(f.poly, f.domain, factor_policy);
        if (!c.valid())
            throw std::logic_error("majorant_chain: factor '" + f.name +
                                   "' failed its nonnegativity certificate");
    }

    if (!(h == majorant_reference()))
        throw std::logic_error("majorant_chain: assembled majorant differs from reference");

    MajorantChain chain;
    chain.h = h;
    chain.y_linear = h.coefficient_of("y", 1);

    // lift: replace the y-linear term by its value at y = 1; sound
    // because the linear coefficient is certified nonnegative
    chain.h1 = h + (M.k(1) - y) * chain.y_linear;
    if (!chain.h1.coefficient_of("y", 1).is_zero())
        throw std::logic_error("majorant_chain: lift left a linear term");

    chain.g1 = chain.h1.fix_var("y", Rational(1)).without_vars({"y"});
    chain.g2 = chain.h1.fix_var("y", Rational(0)).without_vars({"y"});
    chain.g0 = chain.g1.fix_var("t", Rational(0)).without_vars({"t"});
    chain.ghalf = chain.g1.fix_var("t", Rational(1, 2)).without_vars({"t"});
    return chain;
}

MultiPoly majorant_reference() {
    Ctx M{majorant_vars()};
    auto p = M("p"), x = M("x"), y = M("y"), t = M("t");
    const MultiPoly one = M.k(1);
    MultiPoly m2 = one - p.pow(2);
    return (one - 6 * t + 21 * t.pow(2) + 4 * t.pow(3)) * p.pow(6) +
           x * (6 * (one - 3 * t + 10 * t.pow(2)) * p.pow(4) * m2) +
           x.pow(2) * (3 * p.pow(2) * m2 *
                       (M.k(7) - 3 * p.pow(2) + 8 * t.pow(2) * (M.k(7) - p.pow(2)) -
                        4 * t * (M.k(2) + p.pow(2)))) +
           x.pow(3) * (4 * m2 *
                       (one + 7 * p.pow(2) + p.pow(4) +
                        6 * t * (M.k(3) - 2 * p.pow(2) + 2 * p.pow(4)))) +
           x.pow(4) * (12 * p.pow(2) * (p.pow(2) - one).pow(2)) +
           y * (12 * (one - x.pow(2)) * p * m2 *
                ((one - 3 * t + 12 * t.pow(2)) * p.pow(2) + 2 * x.pow(2) * m2 +
                 3 * x * (one + p.pow(2)) + 4 * t * x * (M.k(2) + p.pow(2)))) +
           y.pow(2) * (12 * (one - x.pow(2)) * m2 *
                       (5 * (one - x.pow(2)) * m2 +
                        3 * ((one - 2 * t) * p.pow(2) + 2 * x * m2) * x)) +
           36 * (one - x.pow(2)) * (one - y.pow(2)) * m2 *
               ((one - 2 * t) * p.pow(2) + 2 * x * m2);
}

MultiPoly g2_reference() {
    Ctx M{{"p", "x", "t"}};
    auto p = M("p"), x = M("x"), t = M("t");
    const MultiPoly one = M.k(1);
    MultiPoly m2 = one - p.pow(2);
    MultiPoly mx = one - x.pow(2);
    return p.pow(6) * (one - 6 * t + 21 * t.pow(2) + 4 * t.pow(3)) +
           6 * p.pow(4) * m2 * (one - 3 * t + 10 * t.pow(2)) * x +
           3 * p.pow(2) * m2 *
               (M.k(7) - 3 * p.pow(2) - 4 * (M.k(2) + p.pow(2)) * t +
                8 * (M.k(7) - p.pow(2)) * t.pow(2)) *
               x.pow(2) +
           4 * m2 *
               (one + 7 * p.pow(2) + p.pow(4) +
                6 * (M.k(3) - 2 * p.pow(2) + 2 * p.pow(4)) * t) *
               x.pow(3) +
           12 * p.pow(2) * (p.pow(2) - one).pow(2) * x.pow(4) +
           36 * m2 * (p.pow(2) * (one - 2 * t) + 2 * m2 * x) * mx +
           12 * p * m2 * mx *
               (p.pow(2) * (one - 3 * t + 12 * t.pow(2)) + 3 * (one + p.pow(2)) * x +
                4 * (M.k(2) + p.pow(2)) * t * x + 2 * m2 * x.pow(2));
}

MultiPoly g0_reference() {
    // extended form; exponent order (p, x)
    using T = std::pair<Rational, std::vector<unsigned>>;
    std::vector<T> terms = {
        {Rational(12), {6, 4}},  {Rational(-4), {6, 3}},  {Rational(9), {6, 2}},
        {Rational(-6), {6, 1}},  {Rational(1), {6, 0}},   {Rational(-24), {5, 4}},
        {Rational(36), {5, 3}},  {Rational(36), {5, 2}},  {Rational(-36), {5, 1}},
        {Rational(-12), {5, 0}}, {Rational(-36), {4, 4}}, {Rational(12), {4, 3}},
        {Rational(-78), {4, 2}}, {Rational(-30), {4, 1}}, {Rational(60), {4, 0}},
        {Rational(48), {3, 4}},  {Rational(-60), {3, 2}}, {Rational(12), {3, 0}},
        {Rational(36), {2, 4}},  {Rational(-12), {2, 3}}, {Rational(117), {2, 2}},
        {Rational(36), {2, 1}},  {Rational(-120), {2, 0}},{Rational(-24), {1, 4}},
        {Rational(-36), {1, 3}}, {Rational(24), {1, 2}},  {Rational(36), {1, 1}},
        {Rational(-12), {0, 4}}, {Rational(4), {0, 3}},   {Rational(-48), {0, 2}},
        {Rational(60), {0, 0}},
    };
    return from_terms({"p", "x"}, terms);
}

MultiPoly ghalf_reference() {
    using T = std::pair<Rational, std::vector<unsigned>>;
    std::vector<T> terms = {
        {Rational(12), {6, 4}},   {Rational(-28), {6, 3}}, {Rational(21), {6, 2}},
        {Rational(-12), {6, 1}},  {Rational(15, 4), {6, 0}},
        {Rational(-24), {5, 4}},  {Rational(60), {5, 3}},  {Rational(54), {5, 2}},
        {Rational(-60), {5, 1}},  {Rational(-30), {5, 0}},
        {Rational(-36), {4, 4}},  {Rational(24), {4, 3}},  {Rational(-120), {4, 2}},
        {Rational(12), {4, 1}},   {Rational(60), {4, 0}},
        {Rational(48), {3, 4}},   {Rational(24), {3, 3}},  {Rational(-78), {3, 2}},
        {Rational(-24), {3, 1}},  {Rational(30), {3, 0}},
        {Rational(36), {2, 4}},   {Rational(-36), {2, 3}}, {Rational(147), {2, 2}},
        {Rational(-120), {2, 0}},
        {Rational(-24), {1, 4}},  {Rational(-84), {1, 3}}, {Rational(24), {1, 2}},
        {Rational(84), {1, 1}},
        {Rational(-12), {0, 4}},  {Rational(40), {0, 3}},  {Rational(-48), {0, 2}},
        {Rational(60), {0, 0}},
    };
    return from_terms({"p", "x"}, terms);
}

MultiPoly g2_ucube_reference() {
    // exponent order (p, x, u)
    using T = std::pair<Rational, std::vector<unsigned>>;
    std::vector<T> terms = {
        {Rational(1, 2), {6, 0, 3}},  {Rational(6), {6, 2, 2}},   {Rational(-15), {6, 1, 2}},
        {Rational(21, 4), {6, 0, 2}}, {Rational(-24), {6, 3, 1}}, {Rational(6), {6, 2, 1}},
        {Rational(9), {6, 1, 1}},     {Rational(-3), {6, 0, 1}},  {Rational(12), {6, 4, 0}},
        {Rational(-4), {6, 3, 0}},    {Rational(9), {6, 2, 0}},   {Rational(-6), {6, 1, 0}},
        {Rational(1), {6, 0, 0}},
        {Rational(36), {5, 2, 2}},    {Rational(-36), {5, 0, 2}}, {Rational(24), {5, 3, 1}},
        {Rational(-18), {5, 2, 1}},   {Rational(-24), {5, 1, 1}}, {Rational(18), {5, 0, 1}},
        {Rational(-24), {5, 4, 0}},   {Rational(36), {5, 3, 0}},  {Rational(36), {5, 2, 0}},
        {Rational(-36), {5, 1, 0}},   {Rational(-12), {5, 0, 0}},
        {Rational(-48), {4, 2, 2}},   {Rational(15), {4, 1, 2}},  {Rational(48), {4, 3, 1}},
        {Rational(-30), {4, 2, 1}},   {Rational(-9), {4, 1, 1}},  {Rational(36), {4, 0, 1}},
        {Rational(-24), {4, 4, 0}},   {Rational(-96), {4, 3, 0}}, {Rational(6), {4, 2, 0}},
        {Rational(78), {4, 1, 0}},    {Rational(-36), {4, 0, 0}},
        {Rational(-36), {3, 2, 2}},   {Rational(36), {3, 0, 2}},  {Rational(24), {3, 3, 1}},
        {Rational(18), {3, 2, 1}},    {Rational(-24), {3, 1, 1}}, {Rational(-18), {3, 0, 1}},
        {Rational(48), {3, 4, 0}},    {Rational(-60), {3, 2, 0}}, {Rational(12), {3, 0, 0}},
        {Rational(42), {2, 2, 2}},    {Rational(-60), {2, 3, 1}}, {Rational(24), {2, 2, 1}},
        {Rational(-36), {2, 0, 1}},   {Rational(12), {2, 4, 0}},  {Rational(168), {2, 3, 0}},
        {Rational(-15), {2, 2, 0}},   {Rational(-144), {2, 1, 0}},{Rational(36), {2, 0, 0}},
        {Rational(-48), {1, 3, 1}},   {Rational(48), {1, 1, 1}},  {Rational(-24), {1, 4, 0}},
        {Rational(-36), {1, 3, 0}},   {Rational(24), {1, 2, 0}},  {Rational(36), {1, 1, 0}},
        {Rational(36), {0, 3, 1}},    {Rational(-68), {0, 3, 0}}, {Rational(72), {0, 1, 0}},
    };
    return from_terms({"p", "x", "u"}, terms);
}

MultiPoly g2_on_unit_cube(const MultiPoly& g2) {
    const std::vector<std::string> U{"p", "x", "u"};
    std::vector<MultiPoly> images;
    for (const auto& v : g2.vars()) {
        if (v == "t")
            images.push_back(Rational(1, 2) * MultiPoly::variable(U, "u"));
        else
            images.push_back(MultiPoly::variable(U, v));
    }
    return g2.substitute(images);
}

MultiPoly f1_reference() {
    Ctx M{{"x", "y", "t"}};
    auto x = M("x"), y = M("y"), t = M("t");
    const MultiPoly one = M.k(1);
    MultiPoly mx = one - x.pow(2);
    return (4 * t.pow(2) - t + one) * x.pow(4) + (4 * t + one) * x.pow(2) * mx * y +
           mx * (M.k(4) + 2 * x.pow(2) - 6 * x) * y.pow(2) + 6 * x * mx;
}

MultiPoly psi_reference() {
    Ctx M{{"s", "t"}};
    auto s = M("s"), t = M("t");
    return M.k(4) + (4 * t - M.k(1)) * s + (4 * t.pow(2) - 5 * t - M.k(2)) * s.pow(2);
}

H2Reduction h2_reduction(const Rational& t) {
    if (t < Rational(0) || t > Rational(1, 2))
        throw std::domain_error("h2_reduction: t must lie in [0, 1/2]");

    // parametrize 144 H2 and majorize it group by group; the result must
    // be the reference F1 (the regrouped forms are identical polynomials)
    MultiPoly h2 = scaled_h2().with_vars(schwarz_vars());
    GroupedForm gf = schwarz_substitute(h2);
    if (!gf.part_eta2.is_zero() || !gf.part_rho.is_zero())
        throw std::logic_error("h2_reduction: unexpected eta^2/rho parts");

    // the substituted parts must carry the expected grouping before the
    // moduli are replaced
    {
        Ctx W{param_vars()};
        auto p = W("p"), g = W("g"), gc = W("gc"), wt = W("t");
        const MultiPoly wone = W.k(1);
        MultiPoly wm2 = wone - p.pow(2);
        MultiPoly expect_const = -(4 * wt.pow(2) - wt + wone) * p.pow(4) +
                                 (4 * wt + wone) * p.pow(2) * wm2 * g -
                                 2 * wm2 * (W.k(2) + p.pow(2)) * g.pow(2);
        MultiPoly expect_eta = 6 * p * wm2 * (wone - g * gc);
        if (!(gf.part_const == expect_const && gf.part_eta == expect_eta))
            throw std::logic_error("h2_reduction: substituted grouping mismatch");
    }

    const std::vector<std::string> V{"x", "y", "t"};
    Ctx M{V};
    auto x = M("x"), y = M("y"), tt = M("t");
    const MultiPoly one = M.k(1);
    MultiPoly mx = one - x.pow(2);
    MultiPoly f1_built = (4 * tt.pow(2) - tt + one) * x.pow(4) +
                         (4 * tt + one) * x.pow(2) * mx * y +
                         2 * mx * (M.k(2) + x.pow(2)) * y.pow(2) +
                         6 * x * mx * (one - y.pow(2));
    if (!(f1_built == f1_reference()))
        throw std::logic_error("h2_reduction: majorant disagrees with reference F1");

    // dF1/dy >= 0 on [0,1]^2 x [0,1/2], via the two nonnegative groups
    PosExpr df1 = PosExpr::sum({
        PosExpr::product({PosExpr::leaf((4 * tt + one)), PosExpr::leaf(x.pow(2)),
                          PosExpr::leaf(mx)}),
        PosExpr::product({PosExpr::leaf(2 * mx), PosExpr::leaf(M.k(4) + 2 * x.pow(2) - 6 * x),
                          PosExpr::leaf(y)}),
    });
    if (!(df1.flatten() == f1_reference().partial("y", 1)))
        throw std::logic_error("h2_reduction: derivative split mismatch");
    Box dom({Interval{Rational(0), Rational(1)}, Interval{Rational(0), Rational(1)},
             Interval{Rational(0), Rational(1, 2)}});
    CertifyPolicy policy;
    policy.max_depth = 2;
    Certificate inc = certify_nonneg(df1, dom, policy);
    if (!inc.valid())
        throw std::logic_error("h2_reduction: monotonicity certificate failed");

    // collapse at y = 1; the result is even in x, substitute s = x^2
    MultiPoly at1 = f1_reference().fix_var("y", Rational(1)).without_vars({"y"});
    MultiPoly psi(std::vector<std::string>{"s", "t"});
    for (const auto& [e, c] : at1.terms()) {
        if (e[0] % 2 != 0)
            throw std::logic_error("h2_reduction: collapse is not even in x");
        psi.add_term({e[0] / 2, e[1]}, c);
    }
    if (!(psi == psi_reference()))
        throw std::logic_error("h2_reduction: collapsed quadratic mismatch");

    // exact maximum of the concave quadratic over [0,1] by
    // vertex/endpoint comparison
    const Rational b = Rational(4) * t - Rational(1);
    const Rational c = Rational(4) * t * t - Rational(5) * t - Rational(2);
    auto psi_at = [&](const Rational& s) { return Rational(4) + b * s + c * s * s; };

    H2Reduction out;
    out.maximizer = Rational(0);
    out.scaled_bound = psi_at(out.maximizer);
    if (psi_at(Rational(1)) > out.scaled_bound) {
        out.maximizer = Rational(1);
        out.scaled_bound = psi_at(out.maximizer);
    }
    if (c < Rational(0)) {
        Rational s0 = -b / (Rational(2) * c);
        if (s0 >= Rational(0) && s0 <= Rational(1) && psi_at(s0) > out.scaled_bound) {
            out.maximizer = s0;
            out.scaled_bound = psi_at(s0);
        }
    }
    out.bound = out.scaled_bound / Rational(144);
    out.vertex_branch = out.maximizer > Rational(0);
    return out;
}

double DiskQuadraticMax::approx() const {
    return q.to_double() * std::sqrt(d.to_double());
}

DiskQuadraticMax disk_quadratic_max(const Rational& A, const Rational& B,
                                    const Rational& C) {
    const Rational a = A.abs(), b = B.abs(), cc = C.abs();
    const Rational one(1), two(2), four(4);

    auto result = [&](Rational q, Rational d, int branch, std::string name) {
        return DiskQuadraticMax{std::move(q), std::move(d), branch, std::move(name)};
    };

    if (A * C >= Rational(0)) {
        if (b >= two * (one - cc))
            return result(a + b + cc, one, 1, "|A|+|B|+|C|");
        return result(one + a + B * B / (four * (one - cc)), one, 2,
                      "1+|A|+B^2/(4(1-|C|))");
    }
    // AC < 0 (so C != 0); the guard quantity is -4AC(C^-2 - 1), which is
    // 4|A|(1-C^2)/|C| here
    const Rational disc = Rational(-4) * A * C * (one / (C * C) - one);
    if (disc <= B * B && b < two * (one - cc))
        return result(one - a + B * B / (four * (one - cc)), one, 3,
                      "1-|A|+B^2/(4(1-|C|))");
    const Rational lim = four * (one + cc) * (one + cc);
    if (B * B < (lim < disc ? lim : disc))
        return result(one + a + B * B / (four * (one + cc)), one, 4,
                      "1+|A|+B^2/(4(1+|C|))");
    // R(A,B,C)
    if (cc * (b + four * a) <= (A * B).abs())
        return result(a + b - cc, one, 5, "R: |A|+|B|-|C|");
    if ((A * B).abs() <= cc * (b - four * a))
        return result(-a + b + cc, one, 6, "R: -|A|+|B|+|C|");
    return result(a + cc, one - B * B / (four * A * C), 7,
                  "R: (|A|+|C|) sqrt(1 - B^2/(4AC))");
}

}  // namespace hcert
