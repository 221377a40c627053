#ifndef HCERT_CERTIFY_HPP
#define HCERT_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bernstein.hpp"
#include "multipoly.hpp"

namespace hcert {

enum class CertKind { Enclosed, Split, VertexDominated, FactorNonneg, Failed };

const char* cert_kind_name(CertKind k);

// Endgame record: after translating the vertex to the origin, the
// surviving quadratic alpha*u1^2 + beta*u2^2 + delta*u1*u2 must be
// nonpositive on the nonnegative orthant, via u1*u2 <= lambda*u1^2 +
// u2^2/(4 lambda) when delta > 0.
struct DominationRecord {
    std::vector<Rational> vertex;
    Rational threshold;
    Rational alpha, beta, delta;
    Rational lambda;  // 0 when delta <= 0

    struct Absorption {
        std::vector<unsigned> expo;  // monomial exponents (vertex coordinates)
        Rational coeff;
        std::size_t target_axis;     // absorbed into u_target^2
        Rational bound_coeff;        // coeff * product of width powers
    };
    std::vector<Absorption> ledger;
    std::string reject_reason;  // empty on success
};

struct Certificate {
    CertKind kind = CertKind::Failed;
    Box box;
    Rational bound;  // established bound: upper bound for max-certs,
                     // certified lower bound (>= 0) for nonneg-certs
    std::optional<Enclosure> encl;  // this box's tensor enclosure
    std::optional<DominationRecord> domination;
    std::string label;  // nonneg combinators: "sum" / "product" / "leaf"
    std::string note;   // failure reason on Failed nodes
    std::vector<Certificate> children;

    bool valid() const;
    // all invalid leaves, depth-first
    void collect_failures(std::vector<const Certificate*>& out) const;
};

struct CertifyPolicy {
    unsigned max_depth = 6;
    std::optional<std::vector<Rational>> vertex;  // declared corner for the endgame
    unsigned workers = 1;
};

// Certify p <= threshold on box: Bernstein enclosure, midpoint
// subdivision of every axis up to max_depth, then the vertex-domination
// endgame on boxes that have the declared vertex as a corner. Failure
// is reported as a certificate whose failed leaves carry the witness
// enclosure, never as an exception.
Certificate certify_max(const MultiPoly& p, const Box& box, const Rational& threshold,
                        const CertifyPolicy& policy);

// Expression tree of polynomials combined by + and *; used to certify
// nonnegativity structurally (a sum or product of nonnegative parts is
// nonnegative; a leaf is checked by its Bernstein coefficients).
struct PosExpr {
    enum class Op { Leaf, Sum, Product };
    Op op = Op::Leaf;
    MultiPoly poly;
    std::vector<PosExpr> kids;

    static PosExpr leaf(MultiPoly p);
    static PosExpr sum(std::vector<PosExpr> kids);
    static PosExpr product(std::vector<PosExpr> kids);

    // the represented polynomial (for identity checks against a target)
    MultiPoly flatten() const;
};

Certificate certify_nonneg(const PosExpr& e, const Box& box, const CertifyPolicy& policy);

// convenience: single-leaf nonnegativity
Certificate certify_nonneg(const MultiPoly& p, const Box& box, const CertifyPolicy& policy);

// standalone endgame step (also used at max_depth inside certify_max)
Certificate vertex_domination(const MultiPoly& p, const Box& box,
                              const std::vector<Rational>& vertex, const Rational& threshold);

// Independent replay: walk the certificate and recompute every leaf
// from (polynomial, box) alone, using fresh Bernstein conversions via
// the affine-substitution route (the search itself subdivides by
// de Casteljau, so replay exercises the other route).
bool verify_max_certificate(const MultiPoly& p, const Rational& threshold,
                            const Certificate& c);
bool verify_nonneg_certificate(const PosExpr& e, const Certificate& c);

}  // namespace hcert

#endif
