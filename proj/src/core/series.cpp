#include "series.hpp"

#include <stdexcept>

#include "series_core.hpp"

namespace hcert {

namespace {
const Rational kZero(0);
const Rational kOne(1);
bool rat_is_zero(const Rational& r) { return r.is_zero(); }
}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    return {series_core::add(a.c, b.c)};
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    return {series_core::mul(a.c, b.c, kZero)};
}

TruncatedSeries series_integrate(const TruncatedSeries& a) {
    return {series_core::integrate(a.c, kZero)};
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
    return {series_core::derivative(a.c, kZero)};
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
    return {series_core::exp(a.c, kZero, kOne, rat_is_zero)};
}

SchwarzSpec SchwarzSpec::monomial(unsigned k) {
    if (k < 1) throw std::invalid_argument("SchwarzSpec: monomial power must be >= 1");
    SchwarzSpec s;
    s.kind = Kind::Monomial;
    s.monomial_power = k;
    return s;
}

SchwarzSpec SchwarzSpec::blaschke(const Rational& x) {
    if (x < Rational(0) || x > Rational(1))
        throw std::invalid_argument("SchwarzSpec: blaschke parameter must lie in [0,1]");
    SchwarzSpec s;
    s.kind = Kind::Blaschke;
    s.blaschke_x = x;
    return s;
}

SchwarzSpec SchwarzSpec::explicit_coefficients(std::vector<Rational> c) {
    SchwarzSpec s;
    s.kind = Kind::Explicit;
    s.explicit_coeffs = std::move(c);
    return s;
}

TruncatedSeries schwarz_series(const SchwarzSpec& spec, std::size_t N) {
    if (N < 2) throw std::invalid_argument("schwarz_series: N must be >= 2");
    TruncatedSeries w = TruncatedSeries::zero(N);
    switch (spec.kind) {
        case SchwarzSpec::Kind::Monomial:
            if (spec.monomial_power < N) w.c[spec.monomial_power] = Rational(1);
            break;
        case SchwarzSpec::Kind::Blaschke: {
            // z(x-z)/(1-xz) = xz + (x^2-1)z^2 + (x^3-x)z^3 + ...
            const Rational& x = spec.blaschke_x;
            if (N > 1) w.c[1] = x;
            for (std::size_t k = 2; k < N; ++k)
                w.c[k] = x.pow(static_cast<unsigned>(k)) - x.pow(static_cast<unsigned>(k - 2));
            break;
        }
        case SchwarzSpec::Kind::Explicit:
            for (std::size_t i = 0; i < spec.explicit_coeffs.size() && i + 1 < N; ++i)
                w.c[i + 1] = spec.explicit_coeffs[i];
            break;
    }
    return w;
}

std::vector<Rational> expand_subordinate(const TruncatedSeries& w, const Rational& t,
                                         std::size_t N) {
    if (N < 5) throw std::invalid_argument("expand_subordinate: N must be >= 5");
    if (w.order() == 0 || !w.c[0].is_zero())
        throw std::invalid_argument("expand_subordinate: w must have zero constant term");
    std::vector<Rational> wc = w.c;
    wc.resize(N, Rational(0));
    return series_core::subordinate_taylor(wc, t, kZero, kOne, rat_is_zero);
}

HankelValues hankel_from_taylor(const std::vector<Rational>& a) {
    if (a.size() < 4)
        throw std::invalid_argument("hankel_from_taylor: need a_2..a_5");
    const Rational& a2 = a[0];
    const Rational& a3 = a[1];
    const Rational& a4 = a[2];
    const Rational& a5 = a[3];
    HankelValues v;
    v.h2 = a2 * a4 - a3 * a3;
    v.h3 = a3 * (a2 * a4 - a3 * a3) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2 * a2);
    return v;
}

TruncatedSeries extremal_expand(ExtremalKind kind, const Rational& t, std::size_t N) {
    const unsigned base = (kind == ExtremalKind::H2Monomial) ? 2u : 3u;
    const std::size_t min_order = (kind == ExtremalKind::H2Monomial) ? 8u : 11u;
    if (N < min_order)
        throw std::invalid_argument("extremal_expand: N too small to expose the leading terms");

    // f = sum_{k,j>=0} t^j / (base^k (2 base)^j k! j!) * z^(base k + 2 base j + 1)
    //                 / (base k + 2 base j + 1)
    TruncatedSeries f = TruncatedSeries::zero(N);
    Rational kfact(1), basek(1);
    for (unsigned k = 0;; ++k) {
        if (k) {
            kfact *= Rational(static_cast<long>(k));
            basek *= Rational(static_cast<long>(base));
        }
        if (static_cast<std::size_t>(base) * k + 1 >= N) break;
        Rational jfact(1), b2j(1), tj(1);
        for (unsigned j = 0;; ++j) {
            if (j) {
                jfact *= Rational(static_cast<long>(j));
                b2j *= Rational(static_cast<long>(2 * base));
                tj *= t;
            }
            const std::size_t e = static_cast<std::size_t>(base) * k +
                                  2 * static_cast<std::size_t>(base) * j + 1;
            if (e >= N) break;
            f.c[e] += tj / (basek * b2j * kfact * jfact * Rational(static_cast<long>(e)));
        }
    }
    return f;
}

}  // namespace hcert
