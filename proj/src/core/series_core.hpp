#ifndef HCERT_SERIES_CORE_HPP
#define HCERT_SERIES_CORE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace hcert::series_core {

// Generic truncated-power-series kernels over any coefficient ring C
// with +, *, and scalar multiplication by Rational. Instantiated with
// C = Rational for the numeric engine and C = MultiPoly to run the same
// recurrences symbolically.

template <typename C>
std::vector<C> mul(const std::vector<C>& a, const std::vector<C>& b, const C& zero) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("series mul: order mismatch");
    std::vector<C> r(n, zero);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

template <typename C>
std::vector<C> add(const std::vector<C>& a, const std::vector<C>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("series add: order mismatch");
    std::vector<C> r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

// index shift with exact division: (integrate s)[k] = s[k-1]/k
template <typename C>
std::vector<C> integrate(const std::vector<C>& s, const C& zero) {
    std::vector<C> r(s.size(), zero);
    for (std::size_t k = 1; k < s.size(); ++k)
        r[k] = s[k - 1] * Rational(1, static_cast<long>(k));
    return r;
}

template <typename C>
std::vector<C> derivative(const std::vector<C>& s, const C& zero) {
    std::vector<C> r(s.size(), zero);
    for (std::size_t k = 0; k + 1 < s.size(); ++k)
        r[k] = s[k + 1] * Rational(static_cast<long>(k + 1));
    return r;
}

// exp via the E' = S'E recurrence; requires s[0] == 0 so no factorial
// denominators appear.
template <typename C, typename IsZero>
std::vector<C> exp(const std::vector<C>& s, const C& zero, const C& one, IsZero is_zero) {
    if (s.empty()) return {};
    if (!is_zero(s[0]))
        throw std::invalid_argument("series exp: nonzero constant term");
    std::vector<C> e(s.size(), zero);
    e[0] = one;
    for (std::size_t n = 1; n < s.size(); ++n) {
        C acc = zero;
        for (std::size_t k = 1; k <= n; ++k)
            acc += s[k] * e[n - k] * Rational(static_cast<long>(k));
        e[n] = acc * Rational(1, static_cast<long>(n));
    }
    return e;
}

// Taylor coefficients a_1..a_N of the normalized solution of
//   1 + z f''/f' = 1 + w + t w^2,
// i.e. f = integral of exp(integral of (w + t w^2)/z). `w` holds the
// coefficients of z^0..z^{N-1} with w[0] = 0.
template <typename C, typename IsZero>
std::vector<C> subordinate_taylor(const std::vector<C>& w, const C& t, const C& zero,
                                  const C& one, IsZero is_zero) {
    const std::size_t n = w.size();
    if (n == 0 || !is_zero(w[0]))
        throw std::invalid_argument("subordinate_taylor: w must have zero constant term");
    std::vector<C> w2 = mul(w, w, zero);
    std::vector<C> g(n, zero);  // (w + t w^2)/z
    for (std::size_t k = 0; k + 1 < n; ++k) g[k] = w[k + 1] + t * w2[k + 1];
    std::vector<C> s = integrate(g, zero);
    std::vector<C> fp = exp(s, zero, one, is_zero);
    std::vector<C> a(n, zero);  // a[k] holds a_{k+1}
    for (std::size_t k = 1; k <= n; ++k)
        a[k - 1] = fp[k - 1] * Rational(1, static_cast<long>(k));
    return a;
}

}  // namespace hcert::series_core

#endif
