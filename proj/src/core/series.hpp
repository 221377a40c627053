#ifndef HCERT_SERIES_HPP
#define HCERT_SERIES_HPP

#include <cstddef>
#include <vector>

#include "rational.hpp"

namespace hcert {

// Univariate power series truncated at a fixed order N: coefficient of
// z^k lives at index k, k = 0..N-1. All arithmetic truncates at N.
struct TruncatedSeries {
    std::vector<Rational> c;

    std::size_t order() const { return c.size(); }
    const Rational& at(std::size_t k) const { return c.at(k); }

    static TruncatedSeries zero(std::size_t order) {
        return TruncatedSeries{std::vector<Rational>(order, Rational(0))};
    }
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_integrate(const TruncatedSeries& a);
TruncatedSeries series_derivative(const TruncatedSeries& a);
// requires zero constant term
TruncatedSeries series_exp(const TruncatedSeries& a);

// Schwarz functions used by the sharpness constructions: z^k, the
// one-parameter Blaschke-type family z(x-z)/(1-xz), or explicitly given
// coefficients c_1.. (constant term always 0).
struct SchwarzSpec {
    enum class Kind { Monomial, Blaschke, Explicit };
    Kind kind;
    unsigned monomial_power = 0;             // Monomial
    Rational blaschke_x;                     // Blaschke, x in [0,1]
    std::vector<Rational> explicit_coeffs;   // Explicit: c_1, c_2, ...

    static SchwarzSpec monomial(unsigned k);
    static SchwarzSpec blaschke(const Rational& x);
    static SchwarzSpec explicit_coefficients(std::vector<Rational> c);
};

// w as a truncated series of order N (so coefficients c_1..c_{N-1});
// for the Blaschke family, c_1 = x and c_k = x^k - x^{k-2} for k >= 2.
TruncatedSeries schwarz_series(const SchwarzSpec& spec, std::size_t N);

// Taylor coefficients a_1..a_N (a_1 = 1) of the normalized f with
// 1 + z f''/f' = 1 + w + t w^2.
std::vector<Rational> expand_subordinate(const TruncatedSeries& w, const Rational& t,
                                         std::size_t N);

struct HankelValues {
    Rational h2;  // a2 a4 - a3^2
    Rational h3;  // a3(a2 a4 - a3^2) - a4(a4 - a2 a3) + a5(a3 - a2^2)
};

// `a` holds a_2, a_3, a_4, a_5 (at least four entries).
HankelValues hankel_from_taylor(const std::vector<Rational>& a);

enum class ExtremalKind { H2Monomial, H3Monomial };

// Closed-form expansion of the extremal integrals
//   f = int_0^z exp(s^2/2 + t s^4/4) ds   (H2Monomial, N >= 8)
//   f = int_0^z exp(s^3/3 + t s^6/6) ds   (H3Monomial, N >= 11)
// computed from the double-sum formula, independently of the series-exp
// machinery; must agree with expand_subordinate on z^2 / z^3.
TruncatedSeries extremal_expand(ExtremalKind kind, const Rational& t, std::size_t N);

}  // namespace hcert

#endif
