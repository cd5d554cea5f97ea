#pragma once

#include <map>
#include <string>
#include <vector>

#include "theta/invariants.hpp"

namespace theta {

// Element of the theta ring: finitely many theta generators with coefficients
// in the truncated class ring.
struct ThetaElement {
    std::map<IntegralPoint, Coefficient> terms;

    void add(const IntegralPoint& p, const Coefficient& c);
    bool is_zero() const { return terms.empty(); }
    static ThetaElement theta(const IntegralPoint& p, size_t class_rank);
    friend bool operator==(const ThetaElement& a, const ThetaElement& b) {
        return a.terms == b.terms;
    }
    // Canonical text form: "N/D t^[a,...] theta{cone:coords} + ...".
    std::string str() const;
};

struct ProductReport {
    IntegralPoint p1, p2;
    struct Contribution {
        Vec a_class;
        IntegralPoint r;
        Rational value;
        std::string provenance;
    };
    std::vector<Contribution> contributions; // includes examined zero candidates
    ThetaElement result;
};

// Structure-constant product of two theta generators.
ProductReport multiply(const Geometry& g, const InvariantTable& table,
                       const IntegralPoint& p1, const IntegralPoint& p2);

// Bilinear extension with coefficient truncation.
ThetaElement multiply_elements(const Geometry& g, const InvariantTable& table,
                               const ThetaElement& x, const ThetaElement& y);

bool check_unit(const Geometry& g, const InvariantTable& table, const IntegralPoint& p);
bool check_commutativity(const Geometry& g, const InvariantTable& table,
                         const IntegralPoint& p1, const IntegralPoint& p2);

// Associativity: direct double sum over intermediate classes/points for each
// output (A, r), cross-checked against the two bilinear foldings.
struct AssociativityReport {
    bool ok = true;
    std::string detail;
};
AssociativityReport check_associativity(const Geometry& g, const InvariantTable& table,
                                        const IntegralPoint& p1, const IntegralPoint& p2,
                                        const IntegralPoint& p3);

// Divisor grading: every contribution satisfies
// <r, D> + A.D = <p1, D> + <p2, D> for each divisor label.
bool check_torus_grading(const Geometry& g, const ProductReport& rep);
// Relative degree grading: deg p1 + deg p2 = deg r + (fibre class).A.
bool check_degree_grading(const Geometry& g, const ProductReport& rep);
// Rees inequality for a nef functional s (coefficients per divisor label):
// <p1,s> + <p2,s> >= <r,s> on every nonzero contribution.
bool check_rees(const Geometry& g, const ProductReport& rep,
                const std::map<std::string, Int>& s);
// Rees algebra generator list {u^d theta_p : <p,s> <= d <= bound}.
std::vector<std::pair<Int, IntegralPoint>> rees_generators(
    const Geometry& g, const std::map<std::string, Int>& s,
    const std::map<std::string, Int>& phi, Int bound);

// ---- presentations ----

using Monomial = std::map<std::string, Int>; // variable name -> exponent >= 1

struct Relation {
    Monomial lead;
    std::vector<std::pair<Coefficient, Monomial>> replacement; // strictly lower degree
};

struct RingPresentation {
    std::vector<std::string> vars; // order fixes rewrite determinism
    std::map<std::string, IntegralPoint> points;
    std::vector<Relation> relations;
    void validate(const Geometry& g) const; // degrees decrease, points in skeleton
};

// Polynomial in the presentation variables over the truncated class ring.
using Poly = std::map<Monomial, Coefficient>;

Int monomial_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& b, const Monomial& a); // b / a, a | b

// Rewrites to normal form; `reversed` flips relation and term scan order
// (used by the confluence check).
Poly normal_form(const Geometry& g, const RingPresentation& pres, Poly poly,
                 bool reversed = false);

// Converts a rewrite-irreducible polynomial to the theta basis via the
// in-cone monomial rule; throws if a monomial has no common cone or the sum
// is ambiguous.
ThetaElement poly_to_theta(const Geometry& g, const RingPresentation& pres, const Poly& poly);

// Expresses a skeleton point as an irreducible monomial in the variables.
Monomial point_to_monomial(const Geometry& g, const RingPresentation& pres,
                           const IntegralPoint& p);

// Product of theta generators through the presentation.
ThetaElement presentation_eval(const Geometry& g, const RingPresentation& pres,
                               const std::vector<IntegralPoint>& points);

// Exhaustive normal-form comparison on all variable monomials up to the degree
// bound; throws with the offending monomial on mismatch.
void confluence_check(const Geometry& g, const RingPresentation& pres, Int degree_bound);

// Invariant table derived from the presentation: all products of nonzero
// skeleton points with phi-values <= bound. The forced parts (A = 0, unit) are
// cross-validated against the rule cascade.
InvariantTable derive_table(const Geometry& g, const RingPresentation& pres,
                            const std::map<std::string, Int>& phi, Int pair_bound);

// Relation finding: monomials in the generator variables up to the degree
// bound, reduced against earlier irreducible monomials by exact linear algebra
// over the truncated class ring.
std::vector<Relation> find_presentation(const Geometry& g, const InvariantTable& table,
                                        const RingPresentation& gens, Int degree_bound);

} // namespace theta
