#ifndef HCERT_PIPELINE_HPP
#define HCERT_PIPELINE_HPP

#include <string>
#include <utility>
#include <vector>

#include "certify.hpp"
#include "functionals.hpp"

namespace hcert {

// The y-linear coefficient of the majorant as the product/sum tree of
// its sign-definite groups (certified factor-wise); flattens to
// chain.y_linear exactly.
PosExpr y_linear_expression(const MajorantChain& chain);
Box y_linear_domain();  // [0,1]^2 x [0,1/2] over (p,x,t)

// d^2 G1 / dt^2 as 6p^2 * (three nonnegative summands); flattens to
// chain.g1.partial("t",2) exactly.
PosExpr g1_convexity_expression(const MajorantChain& chain);

struct MasterOutcome {
    bool valid = false;
    Rational domain_max;   // 60
    Rational bound;        // 60/8640 = 1/144 when valid
    Certificate lterm_nonneg;
    Certificate g1_convex;
    Certificate g0_max;
    Certificate ghalf_max;
    Certificate g2_max;
    std::vector<std::pair<Rational, Rational>> attainment;  // (t, G1(0,0,t))
    Rational sharpness_h3_abs;  // |H3| of the z^3 extremal expansion
    std::string failing_branch;  // empty when valid
};

// The end-to-end certification: majorant chain, the two nonnegativity
// certificates that justify the y- and t-endpoint reductions, and the
// three branch-and-bound campaigns (G0 and G1/2 with the vertex-(0,0)
// endgame, G2 on the unit cube after u = 2t).
MasterOutcome h3_master(unsigned max_depth, unsigned workers);

}  // namespace hcert

#endif
