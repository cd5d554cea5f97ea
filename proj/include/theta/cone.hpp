#pragma once

#include <vector>

#include "theta/linalg.hpp"

namespace theta {

// Rational polyhedral cone in Z^dim given by generators. Facet/equation data is
// computed lazily by brute force over small subsets; intended dimensions <= 4-ish.
struct Cone {
    size_t dim = 0;
    std::vector<Vec> gens;

    Cone() = default;
    Cone(size_t d, std::vector<Vec> g);

    // Inequality description relative to the linear span:
    //   span(x): eqs * x = 0,   facets: <n, x> >= 0 for n in normals.
    std::vector<Vec> normals;   // facet normals (>= 0 on the cone)
    std::vector<Vec> equations; // vanish on the span

    bool contains(const Vec& x) const;        // integral point in cone (over Q)
    bool contains(const QVec& x) const;
    size_t cone_dim() const;                  // dim of linear span of gens
    bool pointed() const;                     // lineality space trivial
    std::vector<Vec> extreme_rays() const;    // primitive representatives

    // All faces, each given by the set of generator indices lying on it.
    // Includes the cone itself and the minimal face (lineality; {} if pointed).
    std::vector<std::vector<size_t>> faces() const;

    // Cone spanned by the generators indexed by idx.
    Cone subcone(const std::vector<size_t>& idx) const;

    // Minimal face of this cone containing all the given vectors (they must lie
    // in the cone); returned as generator-index set.
    std::vector<size_t> minimal_face_containing(const std::vector<Vec>& pts) const;
};

// Dual cone {w : <w, g> >= 0 for all generators of c}, as a Cone in the dual space.
Cone dual_cone(const Cone& c);

// Cone from an inequality/equation description (in Z^dim):
//   ineqs * x >= 0 (componentwise), eqs * x = 0.
// Computed by double description brute force; returns generator form.
Cone cone_from_inequalities(size_t dim, const std::vector<Vec>& ineqs,
                            const std::vector<Vec>& eqs);

// Linear map on cones: f(x) = matrix * x, from a cone in Z^src_dim to Z^dst_dim.
struct ConeMap {
    Cone src;
    size_t dst_dim = 0;
    Mat matrix; // dst_dim x src_dim
    Vec apply(const Vec& v) const { return mat_apply(matrix, v); }
    // Image cone (generated by images of src generators).
    Cone image() const;
};

// Fibre product sigma1 x_tau sigma2 = {(x,y) : f1 x = f2 y}, as a cone in
// Z^{d1+d2}, plus the two projections.
struct ConeFibreProduct {
    Cone total;
    ConeMap p1, p2;
};
ConeFibreProduct cone_fibre_product(const ConeMap& f1, const ConeMap& f2);

// Whether f maps every face of its source onto a face of target (target given
// as a cone in the codomain; for projections use the factor cone).
bool face_surjection_check(const ConeMap& f, const Cone& target);

// Hypothesis of the transversality lemma: for every face F2 of f2.src, the
// preimage f1^{-1}(f2(F2)) is a face of f1.src. Both maps land in the same space.
bool transverse_hypothesis(const ConeMap& f1, const ConeMap& f2);

} // namespace theta
