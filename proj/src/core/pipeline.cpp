#include "pipeline.hpp"

#include <stdexcept>

#include "series.hpp"

namespace hcert {

namespace {

struct Ctx {
    std::vector<std::string> vars;
    MultiPoly operator()(const std::string& n) const { return MultiPoly::variable(vars, n); }
    MultiPoly k(long num, long den = 1) const {
        return MultiPoly::constant(vars, Rational(num, den));
    }
};

}  // namespace

Box y_linear_domain() {
    return Box({Interval{Rational(0), Rational(1)}, Interval{Rational(0), Rational(1)},
                Interval{Rational(0), Rational(1, 2)}});
}

PosExpr y_linear_expression(const MajorantChain& chain) {
    Ctx M{{"p", "x", "t"}};
    auto p = M("p"), x = M("x"), t = M("t");
    const MultiPoly one = M.k(1);
    MultiPoly m2 = one - p.pow(2);

    PosExpr expr = PosExpr::product({
        PosExpr::leaf(12 * (one - x.pow(2))),
        PosExpr::leaf(p),
        PosExpr::leaf(m2),
        PosExpr::sum({
            PosExpr::product({PosExpr::leaf(one - 3 * t + 12 * t.pow(2)),
                              PosExpr::leaf(p.pow(2))}),
            PosExpr::product({PosExpr::leaf(2 * x.pow(2)), PosExpr::leaf(m2)}),
            PosExpr::product({PosExpr::leaf(3 * x), PosExpr::leaf(one + p.pow(2))}),
            PosExpr::product({PosExpr::leaf(4 * t), PosExpr::leaf(x),
                              PosExpr::leaf(M.k(2) + p.pow(2))}),
        }),
    });

    MultiPoly target = chain.y_linear.without_vars({"y"}).with_vars({"p", "x", "t"});
    if (!(expr.flatten() == target))
        throw std::logic_error("y_linear_expression: grouping does not flatten to the "
                               "majorant's linear coefficient");
    return expr;
}

PosExpr g1_convexity_expression(const MajorantChain& chain) {
    Ctx M{{"p", "x", "t"}};
    auto p = M("p"), x = M("x"), t = M("t");
    const MultiPoly one = M.k(1);

    // 6p^2 ( 8(p-1)^2(p+1)(p+7) x^2 + 20 p^2 (1-p^2) x
    //        + p (4p^3 t + 7p^3 - 48p^2 + 48) )
    PosExpr expr = PosExpr::product({
        PosExpr::leaf(6 * p.pow(2)),
        PosExpr::sum({
            PosExpr::product({PosExpr::leaf(8 * (p - one).pow(2)), PosExpr::leaf(p + one),
                              PosExpr::leaf(p + M.k(7)), PosExpr::leaf(x.pow(2))}),
            PosExpr::product({PosExpr::leaf(20 * p.pow(2)), PosExpr::leaf(one - p.pow(2)),
                              PosExpr::leaf(x)}),
            PosExpr::product({PosExpr::leaf(p),
                              PosExpr::leaf(4 * p.pow(3) * t + 7 * p.pow(3) -
                                            48 * p.pow(2) + M.k(48))}),
        }),
    });

    if (!(expr.flatten() == chain.g1.partial("t", 2)))
        throw std::logic_error("g1_convexity_expression: grouping does not flatten to "
                               "d^2 G1/dt^2");
    return expr;
}

MasterOutcome h3_master(unsigned max_depth, unsigned workers) {
    MajorantChain chain = majorant_chain();

    MasterOutcome out;
    out.domain_max = Rational(60);

    // H1 is a quadratic in y with no linear term, so its maximum over
    // y in [0,1] sits at an endpoint; both structural facts are checked
    if (chain.h1.degree_in(chain.h1.var_index("y")) > 2 ||
        !chain.h1.coefficient_of("y", 1).is_zero())
        throw std::logic_error("h3_master: H1 is not an endpoint-maximized quadratic in y");

    CertifyPolicy nonneg_policy;
    nonneg_policy.max_depth = 2;
    nonneg_policy.workers = workers;

    out.lterm_nonneg = certify_nonneg(y_linear_expression(chain), y_linear_domain(),
                                      nonneg_policy);
    out.g1_convex = certify_nonneg(g1_convexity_expression(chain), y_linear_domain(),
                                   nonneg_policy);

    CertifyPolicy corner_policy;
    corner_policy.max_depth = max_depth;
    corner_policy.workers = workers;
    corner_policy.vertex = std::vector<Rational>{Rational(0), Rational(0)};

    const Rational threshold(60);
    out.g0_max = certify_max(chain.g0, Box::unit_cube(2), threshold, corner_policy);
    out.ghalf_max = certify_max(chain.ghalf, Box::unit_cube(2), threshold, corner_policy);

    CertifyPolicy cube_policy;
    cube_policy.max_depth = max_depth;
    cube_policy.workers = workers;
    out.g2_max = certify_max(g2_on_unit_cube(chain.g2), Box::unit_cube(3), threshold,
                             cube_policy);

    for (long num : {0L, 1L, 2L}) {
        Rational t(num, 4);
        out.attainment.emplace_back(t, chain.g1.eval({Rational(0), Rational(0), t}));
    }

    // sharpness: the z^3 extremal function attains |H3| = 1/144
    auto a = expand_subordinate(schwarz_series(SchwarzSpec::monomial(3), 8), Rational(0), 8);
    auto hv = hankel_from_taylor({a[1], a[2], a[3], a[4]});
    out.sharpness_h3_abs = hv.h3.abs();

    out.valid = out.lterm_nonneg.valid() && out.g1_convex.valid() && out.g0_max.valid() &&
                out.ghalf_max.valid() && out.g2_max.valid();
    if (!out.valid) {
        if (!out.lterm_nonneg.valid()) out.failing_branch = "lterm_nonneg";
        else if (!out.g1_convex.valid()) out.failing_branch = "g1_convex";
        else if (!out.g0_max.valid()) out.failing_branch = "g0_max";
        else if (!out.ghalf_max.valid()) out.failing_branch = "ghalf_max";
        else out.failing_branch = "g2_max";
    } else {
        for (const auto& [t, v] : out.attainment)
            if (v != threshold)
                throw std::logic_error("h3_master: attainment check failed");
        out.bound = threshold / Rational(8640);
    }
    return out;
}

}  // namespace hcert
