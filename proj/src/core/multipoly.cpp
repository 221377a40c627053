#include "multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace hcert {

Box::Box(std::vector<Interval> axes) : axes_(std::move(axes)) {
    for (const auto& a : axes_)
        if (a.lo > a.hi) throw std::invalid_argument("Box: lo > hi");
}

Box Box::unit_cube(std::size_t dim) {
    std::vector<Interval> axes(dim, Interval{Rational(0), Rational(1)});
    return Box(std::move(axes));
}

bool Box::contains(const std::vector<Rational>& point) const {
    if (point.size() != axes_.size()) return false;
    for (std::size_t i = 0; i < axes_.size(); ++i)
        if (point[i] < axes_[i].lo || point[i] > axes_[i].hi) return false;
    return true;
}

std::vector<Rational> Box::corner(const std::vector<int>& which) const {
    if (which.size() != axes_.size())
        throw std::invalid_argument("Box::corner: dimension mismatch");
    std::vector<Rational> p(axes_.size());
    for (std::size_t i = 0; i < axes_.size(); ++i)
        p[i] = which[i] ? axes_[i].hi : axes_[i].lo;
    return p;
}

bool operator==(const Box& a, const Box& b) {
    if (a.axes_.size() != b.axes_.size()) return false;
    for (std::size_t i = 0; i < a.axes_.size(); ++i)
        if (a.axes_[i].lo != b.axes_[i].lo || a.axes_[i].hi != b.axes_[i].hi) return false;
    return true;
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
        throw std::invalid_argument("MultiPoly: unknown variable '" + name + "'");
    return static_cast<std::size_t>(it - vars_.begin());
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size())
        throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_)
        throw std::invalid_argument("MultiPoly: mismatched variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b);
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly operator-(const MultiPoly& a) { return a.scaled(Rational(-1)); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly r = MultiPoly::constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1u) base = base * base;
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw std::invalid_argument("MultiPoly::eval: dimension mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term *= point[i].pow(e[i]);
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::subst_affine(const std::string& var, const Rational& scale,
                                  const Rational& shift) const {
    const std::size_t vi = var_index(var);
    MultiPoly r(vars_);
    // precompute (scale*u + shift)^k up to the needed degree
    unsigned maxdeg = 0;
    for (const auto& [e, c] : terms_) maxdeg = std::max(maxdeg, e[vi]);
    MultiPoly image(vars_);
    {
        Exponents e1(vars_.size(), 0);
        e1[vi] = 1;
        image.add_term(e1, scale);
        image.add_term(Exponents(vars_.size(), 0), shift);
    }
    std::vector<MultiPoly> powers;
    powers.push_back(MultiPoly::constant(vars_, Rational(1)));
    for (unsigned k = 1; k <= maxdeg; ++k) powers.push_back(powers.back() * image);

    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[vi] = 0;
        MultiPoly term(vars_);
        term.add_term(rest, c);
        r += term * powers[e[vi]];
    }
    return r;
}

MultiPoly MultiPoly::partial(const std::string& var, unsigned order) const {
    if (order == 0) throw std::invalid_argument("MultiPoly::partial: order must be >= 1");
    const std::size_t vi = var_index(var);
    MultiPoly cur = *this;
    for (unsigned k = 0; k < order; ++k) {
        MultiPoly next(vars_);
        for (const auto& [e, c] : cur.terms_) {
            if (e[vi] == 0) continue;
            Exponents d = e;
            d[vi] -= 1;
            next.add_term(d, c * Rational(static_cast<long>(e[vi])));
        }
        cur = std::move(next);
    }
    return cur;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size())
        throw std::invalid_argument("MultiPoly::substitute: wrong image count");
    for (const auto& im : images)
        if (im.vars() != images.front().vars())
            throw std::invalid_argument("MultiPoly::substitute: images disagree on variables");
    const auto tvars = images.front().vars();

    // cache powers of each image
    std::vector<std::vector<MultiPoly>> pw(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        unsigned maxdeg = 0;
        for (const auto& [e, c] : terms_) maxdeg = std::max(maxdeg, e[i]);
        pw[i].push_back(MultiPoly::constant(tvars, Rational(1)));
        for (unsigned k = 1; k <= maxdeg; ++k) pw[i].push_back(pw[i].back() * images[i]);
    }

    MultiPoly r(tvars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(tvars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * pw[i][e[i]];
        r += term;
    }
    return r;
}

MultiPoly MultiPoly::fix_var(const std::string& var, const Rational& value) const {
    const std::size_t vi = var_index(var);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[vi] = 0;
        r.add_term(d, c * value.pow(e[vi]));
    }
    return r;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& newvars) const {
    std::vector<std::size_t> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(newvars.begin(), newvars.end(), vars_[i]);
        if (it == newvars.end())
            throw std::invalid_argument("MultiPoly::with_vars: '" + vars_[i] + "' missing");
        where[i] = static_cast<std::size_t>(it - newvars.begin());
    }
    MultiPoly r(newvars);
    for (const auto& [e, c] : terms_) {
        Exponents d(newvars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) d[where[i]] = e[i];
        r.add_term(d, c);
    }
    return r;
}

MultiPoly MultiPoly::without_vars(const std::vector<std::string>& names) const {
    std::vector<bool> drop(vars_.size(), false);
    for (const auto& n : names) drop[var_index(n)] = true;

    std::vector<std::string> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (!drop[i]) keep.push_back(vars_[i]);

    MultiPoly r(keep);
    for (const auto& [e, c] : terms_) {
        Exponents d;
        d.reserve(keep.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (drop[i]) {
                if (e[i] != 0)
                    throw std::invalid_argument("MultiPoly::without_vars: variable still occurs");
            } else {
                d.push_back(e[i]);
            }
        }
        r.add_term(d, c);
    }
    return r;
}

unsigned MultiPoly::degree_in(std::size_t var_idx) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var_idx));
    return d;
}

MultiPoly MultiPoly::coefficient_of(const std::string& var, unsigned k) const {
    const std::size_t vi = var_index(var);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[vi] != k) continue;
        Exponents d = e;
        d[vi] = 0;
        r.add_term(d, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) os << "*" << vars_[i] << "^" << e[i];
    }
    return os.str();
}

}  // namespace hcert
