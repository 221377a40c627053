#include "certify.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace hcert {

const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::Enclosed: return "enclosed";
        case CertKind::Split: return "split";
        case CertKind::VertexDominated: return "vertex_dominated";
        case CertKind::FactorNonneg: return "factor_nonneg";
        case CertKind::Failed: return "failed";
    }
    return "?";
}

bool Certificate::valid() const {
    if (kind == CertKind::Failed) return false;
    for (const auto& c : children)
        if (!c.valid()) return false;
    return true;
}

void Certificate::collect_failures(std::vector<const Certificate*>& out) const {
    if (kind == CertKind::Failed) out.push_back(this);
    for (const auto& c : children) c.collect_failures(out);
}

namespace {

std::vector<unsigned> poly_degrees(const MultiPoly& p) {
    std::vector<unsigned> d(p.vars().size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = p.degree_in(i);
    return d;
}

// split every axis at its midpoint; children ordered lexicographically
// by lower corner (binary counter, axis 0 most significant)
std::vector<BernsteinTensor> split_all_axes(const BernsteinTensor& t) {
    std::vector<BernsteinTensor> cur{t};
    for (std::size_t axis = 0; axis < t.degrees.size(); ++axis) {
        std::vector<BernsteinTensor> next;
        next.reserve(cur.size() * 2);
        for (const auto& b : cur) {
            auto [l, r] = subdivide(b, axis);
            next.push_back(std::move(l));
            next.push_back(std::move(r));
        }
        cur = std::move(next);
    }
    return cur;
}

bool is_box_corner(const Box& box, const std::vector<Rational>& v) {
    if (v.size() != box.dim()) return false;
    for (std::size_t i = 0; i < box.dim(); ++i)
        if (v[i] != box.axis(i).lo && v[i] != box.axis(i).hi) return false;
    return true;
}

Certificate max_rec(const MultiPoly& p, const BernsteinTensor& tensor,
                    const Rational& threshold, const CertifyPolicy& policy,
                    unsigned depth) {
    Certificate c;
    c.box = tensor.box;
    c.encl = enclosure(tensor);

    if (c.encl->hi <= threshold) {
        c.kind = CertKind::Enclosed;
        c.bound = c.encl->hi;
        return c;
    }
    if (depth < policy.max_depth) {
        auto children = split_all_axes(tensor);
        c.kind = CertKind::Split;
        c.children.reserve(children.size());

        if (policy.workers > 1 && depth == 0) {
            std::vector<std::future<Certificate>> futs;
            futs.reserve(children.size());
            for (const auto& ch : children)
                futs.push_back(std::async(std::launch::async, [&p, &ch, &threshold, &policy,
                                                               depth] {
                    return max_rec(p, ch, threshold, policy, depth + 1);
                }));
            for (auto& f : futs) c.children.push_back(f.get());
        } else {
            for (const auto& ch : children)
                c.children.push_back(max_rec(p, ch, threshold, policy, depth + 1));
        }

        bool all_ok = true;
        Rational worst = threshold;  // children bounds never exceed this when valid
        bool first = true;
        for (const auto& ch : c.children) {
            if (!ch.valid()) { all_ok = false; continue; }
            if (first || ch.bound > worst) { worst = ch.bound; first = false; }
        }
        if (all_ok) c.bound = worst;
        return c;
    }
    // depth budget exhausted: endgame if the declared vertex is a
    // corner of this box
    if (policy.vertex && is_box_corner(tensor.box, *policy.vertex)) {
        Certificate vd = vertex_domination(p, tensor.box, *policy.vertex, threshold);
        vd.encl = c.encl;  // keep the witness enclosure alongside
        return vd;
    }
    c.kind = CertKind::Failed;
    c.note = "enclosure exceeds threshold at depth budget";
    return c;
}

}  // namespace

Certificate certify_max(const MultiPoly& p, const Box& box, const Rational& threshold,
                        const CertifyPolicy& policy) {
    for (std::size_t i = 0; i < box.dim(); ++i)
        if (box.width(i).is_zero())
            throw std::invalid_argument("certify_max: degenerate box");
    BernsteinTensor root = to_bernstein(p, poly_degrees(p), box);
    return max_rec(p, root, threshold, policy, 0);
}

Certificate vertex_domination(const MultiPoly& p, const Box& box,
                              const std::vector<Rational>& vertex,
                              const Rational& threshold) {
    if (!is_box_corner(box, vertex))
        throw std::invalid_argument("vertex_domination: vertex is not a corner of the box");

    // active variables on this box (at most two for the quadratic endgame)
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < p.vars().size(); ++i)
        if (p.degree_in(i) > 0) active.push_back(i);
    if (active.size() > 2)
        throw std::invalid_argument("vertex_domination: more than two active variables");

    auto fail = [&](std::string reason) {
        Certificate c;
        c.kind = CertKind::Failed;
        c.box = box;
        c.encl = enclosure(to_bernstein(p, poly_degrees(p), box));
        c.note = std::move(reason);
        return c;
    };

    // translate the vertex to the origin: u_i in [0, w_i] along each
    // axis, pointing into the box
    MultiPoly q = p;
    std::vector<Rational> widths(p.vars().size(), Rational(0));
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        widths[i] = box.width(i);
        const bool at_lo = vertex[i] == box.axis(i).lo;
        q = q.subst_affine(p.vars()[i], at_lo ? Rational(1) : Rational(-1), vertex[i]);
    }

    DominationRecord rec;
    rec.vertex = vertex;
    rec.threshold = threshold;
    rec.alpha = rec.beta = rec.delta = Rational(0);
    rec.lambda = Rational(0);

    const std::size_t none = static_cast<std::size_t>(-1);
    const std::size_t u1 = active.empty() ? none : active[0];
    const std::size_t u2 = active.size() > 1 ? active[1] : none;
    if (q.constant_term() != threshold)
        return fail("vertex value differs from threshold");

    for (const auto& [e, coeff] : q.terms()) {
        const unsigned a = u1 == none ? 0 : e[u1];
        const unsigned b = u2 == none ? 0 : e[u2];
        const unsigned deg = a + b;
        if (deg == 0) continue;  // the threshold constant
        if (coeff.sign() < 0) {
            if (deg == 2) {
                if (a == 2) rec.alpha += coeff;
                else if (b == 2) rec.beta += coeff;
                else rec.delta += coeff;
            }
            // negative terms of other degrees are simply discarded
            continue;
        }
        if (deg == 1) return fail("positive linear term at the vertex");
        if (deg == 2) {
            if (a == 2) rec.alpha += coeff;
            else if (b == 2) rec.beta += coeff;
            else rec.delta += coeff;
            continue;
        }
        // absorb c u1^a u2^b  <=  c w1^(a-2) w2^b u1^2   (a >= 2)
        //        c u1^a u2^b  <=  c w1^a w2^(b-2) u2^2   (else, b >= 2)
        DominationRecord::Absorption ab;
        ab.expo = {a, b};
        ab.coeff = coeff;
        if (a >= 2) {
            ab.target_axis = u1;
            ab.bound_coeff = coeff * widths[u1].pow(a - 2) * widths[u2].pow(b);
            rec.alpha += ab.bound_coeff;
        } else if (b >= 2) {
            ab.target_axis = u2;
            ab.bound_coeff = coeff * widths[u1].pow(a) * widths[u2].pow(b - 2);
            rec.beta += ab.bound_coeff;
        } else {
            return fail("degree >= 3 monomial with no square part");
        }
        rec.ledger.push_back(std::move(ab));
    }

    const Rational zero(0);
    if (rec.delta <= zero) {
        if (rec.alpha > zero || rec.beta > zero)
            return fail("residual quadratic not nonpositive (delta <= 0 case)");
    } else {
        if (rec.alpha >= zero || rec.beta >= zero)
            return fail("residual quadratic has a nonnegative square coefficient");
        if (rec.delta * rec.delta > Rational(4) * rec.alpha * rec.beta)
            return fail("residual quadratic is indefinite (delta^2 > 4 alpha beta)");
        // feasible lambda range [delta/(-4 beta), -alpha/delta]; take the midpoint
        Rational lo = rec.delta / (Rational(-4) * rec.beta);
        Rational hi = -rec.alpha / rec.delta;
        rec.lambda = (lo + hi) / Rational(2);
        if (rec.alpha + rec.delta * rec.lambda > zero ||
            rec.beta + rec.delta / (Rational(4) * rec.lambda) > zero)
            return fail("lambda selection failed");  // unreachable if the range is nonempty
    }

    Certificate c;
    c.kind = CertKind::VertexDominated;
    c.box = box;
    c.bound = threshold;
    c.domination = std::move(rec);
    return c;
}

PosExpr PosExpr::leaf(MultiPoly p) {
    PosExpr e;
    e.op = Op::Leaf;
    e.poly = std::move(p);
    return e;
}

PosExpr PosExpr::sum(std::vector<PosExpr> kids) {
    PosExpr e;
    e.op = Op::Sum;
    e.kids = std::move(kids);
    return e;
}

PosExpr PosExpr::product(std::vector<PosExpr> kids) {
    PosExpr e;
    e.op = Op::Product;
    e.kids = std::move(kids);
    return e;
}

MultiPoly PosExpr::flatten() const {
    switch (op) {
        case Op::Leaf: return poly;
        case Op::Sum: {
            MultiPoly acc = kids.at(0).flatten();
            for (std::size_t i = 1; i < kids.size(); ++i) acc += kids[i].flatten();
            return acc;
        }
        case Op::Product: {
            MultiPoly acc = kids.at(0).flatten();
            for (std::size_t i = 1; i < kids.size(); ++i) acc = acc * kids[i].flatten();
            return acc;
        }
    }
    throw std::logic_error("PosExpr::flatten: bad op");
}

namespace {

Certificate nonneg_leaf_rec(const BernsteinTensor& tensor, const CertifyPolicy& policy,
                            unsigned depth) {
    Certificate c;
    c.box = tensor.box;
    c.encl = enclosure(tensor);
    if (c.encl->lo >= Rational(0)) {
        c.kind = CertKind::FactorNonneg;
        c.label = "leaf";
        c.bound = c.encl->lo;
        return c;
    }
    if (depth < policy.max_depth) {
        c.kind = CertKind::Split;
        c.label = "leaf";
        auto children = split_all_axes(tensor);
        bool first = true;
        for (const auto& ch : children) {
            c.children.push_back(nonneg_leaf_rec(ch, policy, depth + 1));
            const auto& k = c.children.back();
            if (k.valid() && (first || k.bound < c.bound)) {
                c.bound = k.bound;
                first = false;
            }
        }
        return c;
    }
    c.kind = CertKind::Failed;
    c.note = "negative Bernstein coefficient at depth budget";
    return c;
}

}  // namespace

Certificate certify_nonneg(const PosExpr& e, const Box& box, const CertifyPolicy& policy) {
    switch (e.op) {
        case PosExpr::Op::Leaf: {
            BernsteinTensor t = to_bernstein(e.poly, poly_degrees(e.poly), box);
            return nonneg_leaf_rec(t, policy, 0);
        }
        case PosExpr::Op::Sum:
        case PosExpr::Op::Product: {
            Certificate c;
            c.kind = CertKind::FactorNonneg;
            c.label = e.op == PosExpr::Op::Sum ? "sum" : "product";
            c.box = box;
            bool ok = true;
            Rational acc(e.op == PosExpr::Op::Sum ? 0 : 1);
            for (const auto& k : e.kids) {
                c.children.push_back(certify_nonneg(k, box, policy));
                if (!c.children.back().valid()) ok = false;
                else if (e.op == PosExpr::Op::Sum) acc += c.children.back().bound;
                else acc *= c.children.back().bound;
            }
            if (ok) c.bound = acc;
            return c;
        }
    }
    throw std::logic_error("certify_nonneg: bad op");
}

Certificate certify_nonneg(const MultiPoly& p, const Box& box, const CertifyPolicy& policy) {
    return certify_nonneg(PosExpr::leaf(p), box, policy);
}

namespace {

// the 2^d boxes produced by midpoint-splitting every axis, in the same
// deterministic order the search uses
std::vector<Box> expected_children(const Box& box) {
    const std::size_t d = box.dim();
    std::vector<Box> out;
    out.reserve(1u << d);
    for (std::size_t mask = 0; mask < (1u << d); ++mask) {
        std::vector<Interval> axes;
        for (std::size_t k = 0; k < d; ++k) {
            Rational mid = (box.axis(k).lo + box.axis(k).hi) / Rational(2);
            // axis 0 is the most significant bit
            bool hi_half = (mask >> (d - 1 - k)) & 1u;
            axes.push_back(hi_half ? Interval{mid, box.axis(k).hi}
                                   : Interval{box.axis(k).lo, mid});
        }
        out.push_back(Box(std::move(axes)));
    }
    return out;
}

bool verify_max_rec(const MultiPoly& p, const Rational& threshold, const Certificate& c) {
    switch (c.kind) {
        case CertKind::Enclosed: {
            Enclosure e = enclosure(to_bernstein(p, poly_degrees(p), c.box));
            return e.hi <= threshold && e.hi == c.bound;
        }
        case CertKind::Split: {
            auto boxes = expected_children(c.box);
            if (c.children.size() != boxes.size()) return false;
            for (std::size_t i = 0; i < boxes.size(); ++i) {
                if (!(c.children[i].box == boxes[i])) return false;
                if (!verify_max_rec(p, threshold, c.children[i])) return false;
            }
            return true;
        }
        case CertKind::VertexDominated: {
            if (!c.domination) return false;
            Certificate redo = vertex_domination(p, c.box, c.domination->vertex, threshold);
            return redo.kind == CertKind::VertexDominated;
        }
        default:
            return false;
    }
}

bool verify_nonneg_rec(const MultiPoly& leaf_poly, const Certificate& c) {
    switch (c.kind) {
        case CertKind::FactorNonneg: {
            if (c.label != "leaf") return false;
            Enclosure e = enclosure(to_bernstein(leaf_poly, poly_degrees(leaf_poly), c.box));
            return e.lo >= Rational(0);
        }
        case CertKind::Split: {
            auto boxes = expected_children(c.box);
            if (c.children.size() != boxes.size()) return false;
            for (std::size_t i = 0; i < boxes.size(); ++i) {
                if (!(c.children[i].box == boxes[i])) return false;
                if (!verify_nonneg_rec(leaf_poly, c.children[i])) return false;
            }
            return true;
        }
        default:
            return false;
    }
}

}  // namespace

bool verify_max_certificate(const MultiPoly& p, const Rational& threshold,
                            const Certificate& c) {
    return verify_max_rec(p, threshold, c);
}

bool verify_nonneg_certificate(const PosExpr& e, const Certificate& c) {
    switch (e.op) {
        case PosExpr::Op::Leaf:
            return verify_nonneg_rec(e.poly, c);
        case PosExpr::Op::Sum:
        case PosExpr::Op::Product: {
            const char* want = e.op == PosExpr::Op::Sum ? "sum" : "product";
            if (c.kind != CertKind::FactorNonneg || c.label != want) return false;
            if (c.children.size() != e.kids.size()) return false;
            for (std::size_t i = 0; i < e.kids.size(); ++i)
                if (!verify_nonneg_certificate(e.kids[i], c.children[i])) return false;
            return true;
        }
    }
    return false;
}

}  // namespace hcert
