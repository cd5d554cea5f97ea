#pragma once

#include <optional>
#include <string>
#include <vector>

#include "theta/cone.hpp"
#include "theta/linalg.hpp"

namespace theta {

// Finitely generated submonoid of Z^rank (fine monoid), given by generators.
// If `saturated` is set, membership uses group + cone tests; otherwise a bounded
// nonnegative-combination search.
struct ToricMonoid {
    size_t rank = 0;
    std::vector<Vec> generators; // canonical: lex-sorted, deduplicated, nonzero

    ToricMonoid() = default;
    ToricMonoid(size_t r, std::vector<Vec> gens);

    Cone cone() const;         // cone spanned by the generators
    Mat group_basis() const;   // basis of the group generated (rows)
    size_t group_rank() const;
    bool is_sharp() const;     // no nonzero invertible elements
    bool contains(const Vec& x) const;   // membership in the monoid itself
    bool sat_contains(const Vec& x) const; // membership in the saturation
    // A functional strictly positive on all nonzero monoid elements (sum of
    // facet normals); throws if the monoid is not sharp.
    Vec positive_functional() const;
};

// Saturation M^gp cap cone(M); generators of the result form the Hilbert basis
// (lex-sorted minimal generating set). Requires a sharp monoid.
ToricMonoid saturate(const ToricMonoid& m);

// Independent brute-force route to the same monoid: box enumeration plus
// pairwise-subtraction minimization (used as a test oracle).
std::vector<Vec> hilbert_basis_oracle(const ToricMonoid& m);

// Monoid homomorphism: x -> matrix * x restricted to source.
struct MonoidHom {
    ToricMonoid source, target;
    Mat matrix; // target.rank x source.rank
    Vec apply(const Vec& v) const { return mat_apply(matrix, v); }
    bool well_defined() const; // generators of source map into target
};

// Pushout result: the monoid plus the induced maps from the two factors
// (the quotient presentation fixes the ambient coordinates).
struct PushoutResult {
    ToricMonoid monoid;
    Mat proj1, proj2; // maps from P1-ambient resp. P2-ambient to result ambient
};

// Fine pushout P1 +_Q P2 of h1: Q->P1, h2: Q->P2: the image of P1 + P2 in the
// pushout of the associated groups. Errors if the group pushout has torsion.
PushoutResult fine_pushout(const MonoidHom& h1, const MonoidHom& h2);

// Fine-saturated pushout: saturation of the fine pushout.
PushoutResult fs_pushout(const MonoidHom& h1, const MonoidHom& h2);

// Ideal in a monoid, generated by elements of it.
struct MonoidIdeal {
    ToricMonoid parent;
    std::vector<Vec> generators;
};
MonoidIdeal ideal_from_generators(const ToricMonoid& parent, std::vector<Vec> gens);
bool ideal_membership(const MonoidIdeal& ideal, const Vec& x);

// Image ideal in a pushout: generated by the images of the generators of the
// two ideals under the pushout projections.
MonoidIdeal pushout_ideal(const PushoutResult& push, const MonoidIdeal& i1,
                          const MonoidIdeal& i2);

// Number of monoid elements outside the ideal; throws if infinite
// (the ideal is then not co-Artinian). Requires a sharp saturated parent.
size_t quotient_length(const MonoidIdeal& ideal);
// Same count via an independent traversal order (oracle cross-check).
size_t quotient_length_alt(const MonoidIdeal& ideal);
// Infinite complements reported as a value (nullopt) instead of an error.
std::optional<size_t> quotient_length_or_infinite(const MonoidIdeal& ideal);

// Integrality of theta: P -> Q for free P and saturated Q, via the dual
// criterion: transpose maps every face of the dual cone of Q onto a face of
// the positive orthant. Rejects non-free sources.
bool is_integral(const MonoidHom& theta);

// Equational flatness oracle with bounded search (independent route).
bool is_integral_oracle(const MonoidHom& theta, Int bound);

// Log fibre dimension of the induced map on monoid algebras for a hom
// theta: Q -> P injective on groups: rank P^gp - rank Q^gp.
Int log_fibre_dim(const MonoidHom& theta);

// Sharpened localization of q at the face spanned by the generators indexed by
// `face`: Q -> (F^{-1}Q) / units. Returns the quotient monoid and the
// projection chi on ambient lattices.
struct Localization {
    ToricMonoid quotient;
    Mat chi; // quotient.rank x q.rank
};
Localization localize_at_face(const ToricMonoid& q, const std::vector<size_t>& face);

// Verifies `face` indexes the generator set of an actual face of q's cone.
bool is_face(const ToricMonoid& q, const std::vector<size_t>& face);

// Log structure on a DVR spectrum: sharp fs monoid Q, a face F (generator
// indices), and a functional u on the ambient lattice, strictly positive on the
// nonzero part of F (the local hom F -> N).
struct DvrLogData {
    ToricMonoid q;
    std::vector<size_t> face;
    Vec u;
    bool valid() const;
};

// Existence test for a morphism of DVR log structures: needs phi: Q' -> Q and
// phi_k between the sharpened generic stalks, both local, with the generization
// square commuting and u(phi(x)) = u'(x) on the face F'.
struct DvrMorphismReport {
    bool exists = false;
    std::string reason;
};
DvrMorphismReport dvr_morphism_exists(const DvrLogData& src, const DvrLogData& dst,
                                      const Mat& phi, const Mat& phi_k);

// Stability of the pushout along R = N<ell, delta> -> R_lambda for a rank-2
// monoid Q rationally generated by delta and ell_q - mu*delta. `ell` is the
// image of the generator ell in Q^gp; a, b solve ell = a*ell_q + b*delta.
struct LambdaStabilityReport {
    bool iso_on_reduced = false;
    bool multiplicities_equal = false; // only asserted when a == 1
    Rational a, b;
    size_t length_q = 0, length_push = 0;
    ToricMonoid q_lambda;
};
LambdaStabilityReport lambda_stability(const ToricMonoid& q, const Vec& ell_q,
                                       const Vec& delta, const Vec& ell, Int mu,
                                       Int lambda);

} // namespace theta
