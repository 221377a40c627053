#ifndef HCERT_BERNSTEIN_HPP
#define HCERT_BERNSTEIN_HPP

#include <utility>
#include <vector>

#include "multipoly.hpp"

namespace hcert {

// Exact Bernstein coefficient tensor of a polynomial on a rational box.
// Coefficients are stored dense in row-major multi-index order; the
// degrees stay small here ((6,4) and (6,4,3)), so density keeps the
// index arithmetic and golden comparisons trivial.
struct BernsteinTensor {
    std::vector<unsigned> degrees;  // per-axis degree
    Box box;
    std::vector<Rational> coeffs;   // size = prod(degrees[i]+1)

    std::size_t size() const;
    std::size_t flat_index(const std::vector<unsigned>& idx) const;
    std::vector<unsigned> unflatten(std::size_t flat) const;
    const Rational& at(const std::vector<unsigned>& idx) const {
        return coeffs[flat_index(idx)];
    }
};

struct Enclosure {
    Rational lo;
    Rational hi;
    std::vector<unsigned> argmin;  // first flat index attaining lo
    std::vector<unsigned> argmax;  // first flat index attaining hi
};

// Exact conversion: affine-map the box to the unit cube, then the
// binomial power-to-Bernstein transform per axis. `degrees` must cover
// the per-variable degree of p.
BernsteinTensor to_bernstein(const MultiPoly& p, const std::vector<unsigned>& degrees,
                             const Box& box);

// min/max coefficient; bounds the polynomial's range on the box
Enclosure enclosure(const BernsteinTensor& b);

// de Casteljau split at the axis midpoint; both children represent the
// same polynomial exactly on the two half-boxes
std::pair<BernsteinTensor, BernsteinTensor> subdivide(const BernsteinTensor& b,
                                                      std::size_t axis);

// degree+1 representation of the same polynomial along one axis
BernsteinTensor degree_elevate(const BernsteinTensor& b, std::size_t axis);

// basis expansion back to the power form on the original box
// coordinates (exact round trip with to_bernstein)
MultiPoly expand(const BernsteinTensor& b, const std::vector<std::string>& vars);

}  // namespace hcert

#endif
