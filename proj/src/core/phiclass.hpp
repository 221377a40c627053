#ifndef HCERT_PHICLASS_HPP
#define HCERT_PHICLASS_HPP

#include <optional>
#include <utility>

#include "rational.hpp"

namespace hcert {

struct RationalComplex {
    Rational re;
    Rational im;

    friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend RationalComplex operator*(const Rational& c, const RationalComplex& a) {
        return {c * a.re, c * a.im};
    }
    friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    Rational norm2() const { return re * re + im * im; }
};

// phi(z) = 1 + z + a z^2 evaluated exactly
RationalComplex phi_eval(const Rational& a, const RationalComplex& z);

// Exact verification of the class conditions for phi(z) = 1 + z + (m/n) z^2:
// univalence and starlikeness with respect to 1 hold iff 2m <= n; the
// real part stays positive iff a <= (2+sqrt 2)/4, decided by exact
// sign/squaring logic. When univalence fails, `witness` holds distinct
// points z1, z2 inside the disk with phi(z1) = phi(z2) exactly.
struct PhiReport {
    Rational a;
    bool univalent = false;
    bool starlike = false;
    bool re_positive = false;
    bool admissible = false;  // all three conditions
    std::optional<std::pair<RationalComplex, RationalComplex>> witness;
    Rational boundary_min;  // min of Re phi on |z| = 1
};

PhiReport check_phi(long m, long n);

// min over |z|=1 of Re phi = min over x in [-1,1] of 2a x^2 + x + 1 - a:
// equals a when a <= 1/4, else 1 - a - 1/(8a).
Rational boundary_min(const Rational& a);

}  // namespace hcert

#endif
