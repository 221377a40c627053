#include "phiclass.hpp"

#include <stdexcept>

namespace hcert {

RationalComplex phi_eval(const Rational& a, const RationalComplex& z) {
    RationalComplex z2 = z * z;
    return {Rational(1) + z.re + a * z2.re, z.im + a * z2.im};
}

Rational boundary_min(const Rational& a) {
    if (a <= Rational(0)) throw std::domain_error("boundary_min: a must be positive");
    // q(x) = 2a x^2 + x + 1 - a on [-1,1]; critical point x0 = -1/(4a)
    if (a <= Rational(1, 4)) return a;  // minimum at x = -1
    return Rational(1) - a - Rational(1) / (Rational(8) * a);
}

PhiReport check_phi(long m, long n) {
    if (m < 1 || n < 1) throw std::invalid_argument("check_phi: m, n must be positive");
    PhiReport r;
    r.a = Rational(m, n);

    // univalence and starlikeness with respect to 1 are both equivalent
    // to a <= 1/2
    r.univalent = Rational(2) * r.a <= Rational(1);
    r.starlike = r.univalent;

    // Re phi > 0 iff a <= (2+sqrt 2)/4, i.e. 4a <= 2 or (4a-2)^2 <= 2
    const Rational s = Rational(4) * r.a - Rational(2);
    r.re_positive = (s <= Rational(0)) || (s * s <= Rational(2));

    r.admissible = r.univalent && r.starlike && r.re_positive;
    r.boundary_min = boundary_min(r.a);

    if (!r.univalent) {
        // distinct z1, z2 with z1 + z2 = -1/a, both inside the disk:
        // c = -1/(2a) has |c| < 1, take eps = (1-|c|)/2
        const Rational c = Rational(-1) / (Rational(2) * r.a);
        const Rational eps = (Rational(1) - c.abs()) / Rational(2);
        RationalComplex z1{c + eps, Rational(0)};
        RationalComplex z2{c - eps, Rational(0)};
        r.witness = std::make_pair(z1, z2);
    }
    return r;
}

}  // namespace hcert
