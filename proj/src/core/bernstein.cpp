#include "bernstein.hpp"

#include <stdexcept>

namespace hcert {

std::size_t BernsteinTensor::size() const {
    std::size_t s = 1;
    for (unsigned d : degrees) s *= d + 1;
    return s;
}

std::size_t BernsteinTensor::flat_index(const std::vector<unsigned>& idx) const {
    if (idx.size() != degrees.size())
        throw std::invalid_argument("BernsteinTensor: index rank mismatch");
    std::size_t f = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] > degrees[k]) throw std::out_of_range("BernsteinTensor: index out of range");
        f = f * (degrees[k] + 1) + idx[k];
    }
    return f;
}

std::vector<unsigned> BernsteinTensor::unflatten(std::size_t flat) const {
    std::vector<unsigned> idx(degrees.size());
    for (std::size_t k = degrees.size(); k-- > 0;) {
        idx[k] = static_cast<unsigned>(flat % (degrees[k] + 1));
        flat /= degrees[k] + 1;
    }
    return idx;
}

namespace {

// Apply f to every 1-D line along `axis` of a dense tensor with the
// given per-axis sizes; f maps the old line to a new line of length
// new_len (in place into the output tensor).
template <typename F>
std::vector<Rational> map_lines(const std::vector<Rational>& data,
                                const std::vector<std::size_t>& sizes, std::size_t axis,
                                std::size_t new_len, F f) {
    std::size_t outer = 1, inner = 1;
    for (std::size_t k = 0; k < axis; ++k) outer *= sizes[k];
    for (std::size_t k = axis + 1; k < sizes.size(); ++k) inner *= sizes[k];
    const std::size_t old_len = sizes[axis];

    std::vector<Rational> out(outer * new_len * inner);
    std::vector<Rational> line(old_len);
    for (std::size_t o = 0; o < outer; ++o) {
        for (std::size_t i = 0; i < inner; ++i) {
            for (std::size_t j = 0; j < old_len; ++j)
                line[j] = data[(o * old_len + j) * inner + i];
            std::vector<Rational> nl = f(line);
            for (std::size_t j = 0; j < new_len; ++j)
                out[(o * new_len + j) * inner + i] = nl[j];
        }
    }
    return out;
}

}  // namespace

BernsteinTensor to_bernstein(const MultiPoly& p, const std::vector<unsigned>& degrees,
                             const Box& box) {
    const std::size_t dim = p.vars().size();
    if (degrees.size() != dim || box.dim() != dim)
        throw std::invalid_argument("to_bernstein: rank mismatch");

    // map the box onto the unit cube: q(u) = p(lo + width*u)
    MultiPoly q = p;
    for (std::size_t k = 0; k < dim; ++k)
        q = q.subst_affine(p.vars()[k], box.width(k), box.axis(k).lo);

    for (std::size_t k = 0; k < dim; ++k)
        if (q.degree_in(k) > degrees[k])
            throw std::invalid_argument("to_bernstein: requested degree too small");

    BernsteinTensor t;
    t.degrees = degrees;
    t.box = box;

    std::vector<std::size_t> sizes(dim);
    for (std::size_t k = 0; k < dim; ++k) sizes[k] = degrees[k] + 1;

    // dense power coefficients on the unit cube
    std::vector<Rational> a(t.size());
    {
        BernsteinTensor shape = t;  // reuse the indexer
        for (const auto& [e, c] : q.terms()) {
            std::vector<unsigned> idx(e.begin(), e.end());
            a[shape.flat_index(idx)] = c;
        }
    }

    // binomial transform per axis: b_i = sum_{j<=i} C(i,j)/C(n,j) a_j
    for (std::size_t axis = 0; axis < dim; ++axis) {
        const unsigned n = degrees[axis];
        a = map_lines(a, sizes, axis, n + 1, [&](const std::vector<Rational>& line) {
            std::vector<Rational> out(n + 1, Rational(0));
            for (unsigned i = 0; i <= n; ++i)
                for (unsigned j = 0; j <= i; ++j)
                    out[i] += binomial(i, j) / binomial(n, j) * line[j];
            return out;
        });
    }
    t.coeffs = std::move(a);
    return t;
}

Enclosure enclosure(const BernsteinTensor& b) {
    if (b.coeffs.empty()) throw std::invalid_argument("enclosure: empty tensor");
    std::size_t imin = 0, imax = 0;
    for (std::size_t i = 1; i < b.coeffs.size(); ++i) {
        if (b.coeffs[i] < b.coeffs[imin]) imin = i;
        if (b.coeffs[i] > b.coeffs[imax]) imax = i;
    }
    return Enclosure{b.coeffs[imin], b.coeffs[imax], b.unflatten(imin), b.unflatten(imax)};
}

std::pair<BernsteinTensor, BernsteinTensor> subdivide(const BernsteinTensor& b,
                                                      std::size_t axis) {
    if (axis >= b.degrees.size()) throw std::invalid_argument("subdivide: bad axis");
    const unsigned n = b.degrees[axis];
    std::vector<std::size_t> sizes(b.degrees.size());
    for (std::size_t k = 0; k < sizes.size(); ++k) sizes[k] = b.degrees[k] + 1;

    const Rational half(1, 2);
    std::vector<Rational> left_data, right_data;
    {
        // one pass computing both children per line, packed left|right
        auto both = map_lines(b.coeffs, sizes, axis, 2 * (n + 1),
                              [&](const std::vector<Rational>& line) {
            std::vector<Rational> tri = line;
            std::vector<Rational> out(2 * (n + 1));
            out[0] = tri[0];                 // left_0
            out[2 * n + 1] = tri[n];         // right_n
            for (unsigned lvl = 1; lvl <= n; ++lvl) {
                for (unsigned j = 0; j + lvl <= n; ++j)
                    tri[j] = (tri[j] + tri[j + 1]) * half;
                out[lvl] = tri[0];                         // left_lvl
                out[(n + 1) + (n - lvl)] = tri[n - lvl];   // right_{n-lvl}
            }
            return out;
        });
        // unpack
        std::vector<std::size_t> dsizes = sizes;
        dsizes[axis] = 2 * (n + 1);
        left_data = map_lines(both, dsizes, axis, n + 1, [&](const std::vector<Rational>& l) {
            return std::vector<Rational>(l.begin(), l.begin() + (n + 1));
        });
        right_data = map_lines(both, dsizes, axis, n + 1, [&](const std::vector<Rational>& l) {
            return std::vector<Rational>(l.begin() + (n + 1), l.end());
        });
    }

    const Rational mid = (b.box.axis(axis).lo + b.box.axis(axis).hi) * half;
    std::vector<Interval> laxes, raxes;
    for (std::size_t k = 0; k < b.degrees.size(); ++k) {
        laxes.push_back(b.box.axis(k));
        raxes.push_back(b.box.axis(k));
    }
    laxes[axis].hi = mid;
    raxes[axis].lo = mid;

    BernsteinTensor l{b.degrees, Box(laxes), std::move(left_data)};
    BernsteinTensor r{b.degrees, Box(raxes), std::move(right_data)};
    return {std::move(l), std::move(r)};
}

BernsteinTensor degree_elevate(const BernsteinTensor& b, std::size_t axis) {
    if (axis >= b.degrees.size()) throw std::invalid_argument("degree_elevate: bad axis");
    const unsigned n = b.degrees[axis];
    std::vector<std::size_t> sizes(b.degrees.size());
    for (std::size_t k = 0; k < sizes.size(); ++k) sizes[k] = b.degrees[k] + 1;

    auto data = map_lines(b.coeffs, sizes, axis, n + 2, [&](const std::vector<Rational>& line) {
        std::vector<Rational> out(n + 2);
        for (unsigned i = 0; i <= n + 1; ++i) {
            Rational w(static_cast<long>(i), static_cast<long>(n + 1));
            Rational v(0);
            if (i > 0) v += w * line[i - 1];
            if (i <= n) v += (Rational(1) - w) * line[i];
            out[i] = v;
        }
        return out;
    });

    BernsteinTensor e;
    e.degrees = b.degrees;
    e.degrees[axis] = n + 1;
    e.box = b.box;
    e.coeffs = std::move(data);
    return e;
}

MultiPoly expand(const BernsteinTensor& b, const std::vector<std::string>& vars) {
    const std::size_t dim = b.degrees.size();
    if (vars.size() != dim) throw std::invalid_argument("expand: rank mismatch");
    for (std::size_t k = 0; k < dim; ++k)
        if (b.box.width(k).is_zero())
            throw std::invalid_argument("expand: degenerate box axis");

    // Bernstein basis polynomials per axis, in unit-cube coordinates
    std::vector<std::vector<MultiPoly>> basis(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const unsigned n = b.degrees[k];
        MultiPoly u = MultiPoly::variable(vars, vars[k]);
        MultiPoly one = MultiPoly::constant(vars, Rational(1));
        for (unsigned i = 0; i <= n; ++i)
            basis[k].push_back(binomial(n, i) * u.pow(i) * (one - u).pow(n - i));
    }

    MultiPoly acc(vars);
    for (std::size_t f = 0; f < b.coeffs.size(); ++f) {
        if (b.coeffs[f].is_zero()) continue;
        auto idx = b.unflatten(f);
        MultiPoly term = MultiPoly::constant(vars, b.coeffs[f]);
        for (std::size_t k = 0; k < dim; ++k) term = term * basis[k][idx[k]];
        acc += term;
    }

    // back to box coordinates: u_k = (s_k - lo_k)/width_k
    for (std::size_t k = 0; k < dim; ++k) {
        Rational w = b.box.width(k);
        acc = acc.subst_affine(vars[k], Rational(1) / w, -b.box.axis(k).lo / w);
    }
    return acc;
}

}  // namespace hcert
