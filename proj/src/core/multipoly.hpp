#ifndef HCERT_MULTIPOLY_HPP
#define HCERT_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace hcert {

// Closed axis-aligned rational box, one interval per variable of the
// polynomial it is paired with.
struct Interval {
    Rational lo;
    Rational hi;
};

class Box {
public:
    Box() = default;
    explicit Box(std::vector<Interval> axes);

    static Box unit_cube(std::size_t dim);

    std::size_t dim() const { return axes_.size(); }
    const Interval& axis(std::size_t i) const { return axes_.at(i); }
    Rational width(std::size_t i) const { return axes_.at(i).hi - axes_.at(i).lo; }

    bool contains(const std::vector<Rational>& point) const;
    // corner selected by a 0/1 flag per axis (0 -> lo, 1 -> hi)
    std::vector<Rational> corner(const std::vector<int>& which) const;

    friend bool operator==(const Box& a, const Box& b);

private:
    std::vector<Interval> axes_;
};

// Sparse multivariate polynomial over Rational with a named, ordered
// variable list. Terms are kept in a lexicographically ordered map with
// no zero coefficients, so operator== is structural identity.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    std::size_t var_index(const std::string& name) const;

    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p.scaled(c); }
    friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p.scaled(c); }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    Rational eval(const std::vector<Rational>& point) const;

    // r with r(..., u, ...) = p(..., scale*u + shift, ...)
    MultiPoly subst_affine(const std::string& var, const Rational& scale,
                           const Rational& shift) const;

    // formal partial derivative, `order` times
    MultiPoly partial(const std::string& var, unsigned order) const;

    // substitute each variable by a polynomial over a common target
    // variable list; images.size() must equal vars().size()
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    // fix one variable to a rational value (variable list unchanged)
    MultiPoly fix_var(const std::string& var, const Rational& value) const;

    // reorder/extend onto a superset variable list
    MultiPoly with_vars(const std::vector<std::string>& newvars) const;

    // drop variables that no longer occur; throws if one still occurs
    MultiPoly without_vars(const std::vector<std::string>& names) const;

    unsigned degree_in(std::size_t var_idx) const;

    // coefficient of var^k, as a polynomial over the same variable list
    MultiPoly coefficient_of(const std::string& var, unsigned k) const;

    std::string to_string() const;

private:
    void require_same_vars(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace hcert

#endif
