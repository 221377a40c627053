#include "hankel.hpp"

#include <stdexcept>

namespace hcert {

Rational bareiss_det(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("bareiss_det: matrix not square");
    if (n == 0) return Rational(1);

    // Clear denominators row by row so the elimination runs over
    // integers; divide the scale factors back out at the end.
    mpz_class scale(1);
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].raw().get_den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = m[i][j].raw() * l;
            a[i][j] = v.get_num();  // exact by construction of l
        }
        scale *= l;
    }

    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return Rational(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_class quo;
                // Bareiss guarantees exact division by the previous pivot.
                mpz_divexact(quo.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = quo;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }

    mpq_class det(a[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return Rational(std::move(det));
}

Rational hankel_det(const std::vector<Rational>& taylor, unsigned q, unsigned n) {
    if (q < 1 || n < 1) throw std::invalid_argument("hankel_det: q, n must be >= 1");
    // largest index needed is a_{n+2q-2}; taylor[k] holds a_{k+1}
    const std::size_t needed = static_cast<std::size_t>(n) + 2 * q - 2;
    if (taylor.size() < needed)
        throw std::invalid_argument("hankel_det: insufficient Taylor coefficients");

    std::vector<std::vector<Rational>> m(q, std::vector<Rational>(q));
    for (unsigned i = 0; i < q; ++i)
        for (unsigned j = 0; j < q; ++j) m[i][j] = taylor[n + i + j - 1];
    return bareiss_det(std::move(m));
}

}  // namespace hcert
