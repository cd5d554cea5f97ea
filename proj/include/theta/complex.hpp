#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/rational.hpp"
#include "theta/linalg.hpp"

namespace theta {

// One stratum of the divisorial stratification: a unimodular simplicial cone
// whose coordinates are indexed by the divisor labels it carries. Parents are
// the strata whose cones contain this one as a face (explicit, to allow
// several top cones with the same label set).
struct Stratum {
    std::string id;
    std::vector<std::string> labels;  // sorted
    std::vector<std::string> parents; // ids of covering strata
};

struct ConeComplex {
    std::vector<std::string> divisors; // all labels
    std::vector<Stratum> strata;       // includes the zero stratum (empty labels)

    const Stratum& stratum(const std::string& id) const;
    bool has_stratum(const std::string& id) const;
    // Transitive face relation: is `a` a face of `b` (a's cone a face of b's)?
    bool is_face_of(const std::string& a, const std::string& b) const;
    // Strata having `a` as a face (including a itself).
    std::vector<std::string> cones_containing(const std::string& a) const;
    // Validates label sets, parent consistency, presence of the zero stratum
    // and of every face; throws on failure.
    void validate() const;
    std::string zero_stratum() const;
};

// Integral point of the complex: canonical form keeps the unique stratum whose
// label set equals the support, with strictly positive coordinates.
struct IntegralPoint {
    std::string cone;                       // stratum id
    std::map<std::string, Int> coords;      // label -> positive coordinate

    bool is_zero() const { return coords.empty(); }
    friend bool operator==(const IntegralPoint& a, const IntegralPoint& b) {
        return a.cone == b.cone && a.coords == b.coords;
    }
    friend bool operator<(const IntegralPoint& a, const IntegralPoint& b) {
        Int sa = 0, sb = 0;
        for (auto& [l, c] : a.coords) sa += c;
        for (auto& [l, c] : b.coords) sb += c;
        if (sa != sb) return sa < sb;
        if (a.cone != b.cone) return a.cone < b.cone;
        return a.coords < b.coords;
    }
    std::string str() const;
};

// Canonicalizes a (possibly zero-padded) coordinate assignment on the cone
// `cone_id` into the minimal face carrying the support. Throws if the support
// does not match a face of the cone, or the face is ambiguous.
IntegralPoint canonical_point(const ConeComplex& cx, const std::string& cone_id,
                              const std::map<std::string, Int>& coords);

// Pairing <p, D_label>: coordinate of p at the label (0 off-support).
Int pairing(const IntegralPoint& p, const std::string& label);

// All sums p+q taken inside the minimal common cones: one entry per minimal
// cone containing both points (so repeated values keep their multiplicity).
std::vector<std::pair<std::string, IntegralPoint>> sums_in_common_cones(
    const ConeComplex& cx, const IntegralPoint& p, const IntegralPoint& q);

// Relative data: multiplicities of the divisors over the base zero, for
// fibrations over a curve germ.
struct RelativeData {
    std::map<std::string, Int> multiplicities; // only over-zero labels appear
};

// Kontsevich-Soibelman-style skeleton: the subcomplex of cones all of whose
// divisor labels are good for the chosen anticanonical coefficients.
struct Skeleton {
    ConeComplex complex;                 // the full complex
    std::map<std::string, bool> good;    // per divisor label
    std::vector<std::string> cones;      // strata ids in the skeleton
    bool contains_point(const IntegralPoint& p) const;
};

// a: coefficients with c1 == sum a_label * D_label (rationals, >= 0).
// Absolute case (no relative data): good <=> a = 0. Relative case: weights
// a/mu on the over-zero labels are normalized by their minimum before the
// a = 0 test on over-zero labels; labels not over zero must have a = 0.
Skeleton ks_skeleton(const ConeComplex& cx, const std::map<std::string, Rational>& a,
                     const std::optional<RelativeData>& rel);

// Degree of a point for relative data: sum over over-zero labels of
// multiplicity * pairing.
Int degree(const RelativeData& rel, const IntegralPoint& p);

// All integral points p of the skeleton with phi(p) <= bound, where phi is a
// per-label positive weighting; sorted canonically.
std::vector<IntegralPoint> enumerate_points(const Skeleton& sk,
                                            const std::map<std::string, Int>& phi,
                                            Int bound);

IntegralPoint zero_point(const ConeComplex& cx);

} // namespace theta
