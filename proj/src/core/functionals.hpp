#ifndef HCERT_FUNCTIONALS_HPP
#define HCERT_FUNCTIONALS_HPP

#include <string>
#include <vector>

#include "multipoly.hpp"

namespace hcert {

// Variable conventions used throughout:
//   Schwarz space   {c1,c2,c3,c4,t} : coefficients of w and the phi parameter
//   parameter space {p,g,gc,e,ec,r,t} : c1=p and the unimodular parameters
//                    g = gamma, gc = conj(gamma), e = eta, ec = conj(eta), r = rho
//   majorant space  {p,x,y,t} : x = |gamma|, y = |eta|

inline const std::vector<std::string>& schwarz_vars() {
    static const std::vector<std::string> v{"c1", "c2", "c3", "c4", "t"};
    return v;
}
inline const std::vector<std::string>& param_vars() {
    static const std::vector<std::string> v{"p", "g", "gc", "e", "ec", "r", "t"};
    return v;
}
inline const std::vector<std::string>& majorant_vars() {
    static const std::vector<std::string> v{"p", "x", "y", "t"};
    return v;
}

struct CoeffFormulas {
    MultiPoly a2, a3, a4, a5;  // over schwarz_vars()
};

// a2..a5 derived by running the subordination recurrence symbolically
CoeffFormulas coeff_formulas();
// the same four polynomials in their closed reference form
CoeffFormulas coeff_formulas_reference();

// 144 * H2(2) over {c1,c2,c3,t}
MultiPoly scaled_h2();
MultiPoly scaled_h2_reference();

// 8640 * H3(1) over schwarz_vars()
MultiPoly scaled_h3();
MultiPoly scaled_h3_reference();

// A + B*eta + C*eta^2 + D*rho decomposition after substituting the
// Schwarz-coefficient parametrization
//   c2 = (1-c1^2) g
//   c3 = (1-c1^2)(e(1-g gc) - c1 g^2)
//   c4 = (1-c1^2)(c1^2 g^3 - (1-g gc)(2 c1 g e + gc e^2) + (1-g gc)(1-e ec) r)
// into a polynomial over the Schwarz space. Parts live over param_vars()
// minus r; only part_rho involves e*ec.
struct GroupedForm {
    MultiPoly part_const, part_eta, part_eta2, part_rho;
};

GroupedForm schwarz_substitute(const MultiPoly& target);
GroupedForm grouped_form_reference();  // reference decomposition parts

// the substituted parametrization of a target, over param_vars()
MultiPoly parametrized(const MultiPoly& target);

struct MajorantChain {
    MultiPoly h;         // over majorant_vars()
    MultiPoly h1;        // h with the y-linear term replaced by its y=1 value
    MultiPoly y_linear;  // coefficient of the term linear in y
    MultiPoly g1, g2;    // h1 at y=1 / y=0, over {p,x,t}
    MultiPoly g0, ghalf; // g1 at t=0 / t=1/2, over {p,x}
};

// Grouped-factor majorization of the decomposition: every sign-definite
// group keeps its factors, each factor's nonnegativity on the domain is
// certified, and moduli are substituted (|gamma| -> x, |eta| -> y,
// |rho| -> 1). Throws if a factor certificate fails or if the rebuilt
// decomposition disagrees with the direct substitution.
MajorantChain majorant_chain();

MultiPoly majorant_reference();   // reference majorant over majorant_vars()
MultiPoly g2_reference();         // reference G2 over {p,x,t}
MultiPoly g0_reference();         // reference extended form over {p,x}
MultiPoly ghalf_reference();      // reference extended form over {p,x}
MultiPoly g2_ucube_reference();   // reference tri-degree (6,4,3) form

// G2 with t = u/2, over {p,x,u} on the unit cube
MultiPoly g2_on_unit_cube(const MultiPoly& g2);

// the sign-definite (p,t) factors used by the majorization, paired with
// the boxes on which they are certified
struct MajorantFactor {
    std::string name;
    MultiPoly poly;   // over {p,t}
    Box domain;       // [0,1] x [0,1/2]
};
std::vector<MajorantFactor> majorant_factors();

struct H2Reduction {
    Rational scaled_bound;  // max of psi_t on [0,1] (bounds 144|H2|)
    Rational bound;         // scaled_bound / 144
    Rational maximizer;     // the maximizing s = x^2
    bool vertex_branch;     // false when the maximum sits at s = 0
};

// Full sharp-H2 chain for one t in [0,1/2]: parametrize 144 H2,
// majorize, certify dF1/dy >= 0, collapse at y=1 to psi_t, and take the
// exact concave-quadratic maximum by vertex/endpoint comparison.
H2Reduction h2_reduction(const Rational& t);

MultiPoly f1_reference();   // over {x,y,t}
MultiPoly psi_reference();  // over {s,t}

// max over the closed unit disk of |A + B z + C z^2| + 1 - |z|^2,
// evaluated by the closed-form case table. The exact value is
// q * sqrt(d); d = 1 on every branch except the final one.
struct DiskQuadraticMax {
    Rational q;
    Rational d;
    int branch;  // 1..7 in case-table order
    std::string branch_name;
    double approx() const;
};

DiskQuadraticMax disk_quadratic_max(const Rational& A, const Rational& B, const Rational& C);

}  // namespace hcert

#endif
