#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/complex.hpp"
#include "theta/curves.hpp"

namespace theta {

// Everything a product computation needs: the cone complex with its skeleton,
// the curve-class pairings, and the truncation ideal.
struct Geometry {
    ConeComplex complex;
    std::optional<RelativeData> relative;
    Skeleton skeleton;
    CurveClassData classes;
    ClassMonoid pmonoid;
    CoArtinianIdeal ideal;

    void validate() const;
};

// Table of punctured invariants N^A_{p1 p2 r}, keyed on (A, {p1,p2}, r) with
// the point pair unordered. The table stores only the non-forced entries:
// A = 0 entries and entries with a zero input point are rejected at load, as
// are entries violating the pairing constraints or with A.c1 != 0.
enum class TablePolicy { Complete, Strict };

struct InvariantTable {
    struct Key {
        Vec a_class;
        IntegralPoint p1, p2, r; // p1 <= p2 canonically
        friend bool operator<(const Key& x, const Key& y) {
            if (x.a_class != y.a_class) return x.a_class < y.a_class;
            if (!(x.p1 == y.p1)) return x.p1 < y.p1;
            if (!(x.p2 == y.p2)) return x.p2 < y.p2;
            return x.r < y.r;
        }
    };
    TablePolicy policy = TablePolicy::Complete;
    std::map<Key, Rational> entries;

    static Key make_key(const Vec& a_class, const IntegralPoint& p1,
                        const IntegralPoint& p2, const IntegralPoint& r);
    void insert(const Geometry& g, const Vec& a_class, const IntegralPoint& p1,
                const IntegralPoint& p2, const IntegralPoint& r, const Rational& value);
    std::optional<Rational> lookup(const Vec& a_class, const IntegralPoint& p1,
                                   const IntegralPoint& p2, const IntegralPoint& r) const;
};

// Multiplicity-free constant-map invariant: 1 if some cone of the complex
// contains p1, p2 and r with p1 + p2 = r, else 0.
Rational constant_term(const Geometry& g, const IntegralPoint& p1,
                       const IntegralPoint& p2, const IntegralPoint& r);

// Candidate output points of theta_{p1} theta_{p2} in class A: the pairing
// with each divisor is forced, so the support determines the possible strata.
std::vector<IntegralPoint> candidate_outputs(const Geometry& g, const IntegralPoint& p1,
                                             const IntegralPoint& p2, const Vec& a_class);

// Rule cascade: unit rule, constant maps at A = 0, c1 filter, pairing
// constraints, then table lookup.
struct NValue {
    Rational value;
    std::string provenance; // unit | constant | filtered-zero | table
};
NValue get_N(const Geometry& g, const InvariantTable& table, const Vec& a_class,
             const IntegralPoint& p1, const IntegralPoint& p2, const IntegralPoint& r);

} // namespace theta
