#include "theta/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace theta {

void Geometry::validate() const {
    complex.validate();
    classes.validate();
    pmonoid.validate();
    if (classes.n != pmonoid.n) throw std::runtime_error("class rank mismatch");
    if (classes.divisors != complex.divisors)
        throw std::runtime_error("divisor labels of classes and complex disagree");
    if (relative) {
        for (auto& [d, mu] : relative->multiplicities)
            if (std::find(complex.divisors.begin(), complex.divisors.end(), d) ==
                complex.divisors.end())
                throw std::runtime_error("relative multiplicity on unknown divisor " + d);
    }
}

InvariantTable::Key InvariantTable::make_key(const Vec& a_class, const IntegralPoint& p1,
                                             const IntegralPoint& p2, const IntegralPoint& r) {
    Key k;
    k.a_class = a_class;
    if (p2 < p1) { k.p1 = p2; k.p2 = p1; }
    else { k.p1 = p1; k.p2 = p2; }
    k.r = r;
    return k;
}

void InvariantTable::insert(const Geometry& g, const Vec& a_class, const IntegralPoint& p1,
                            const IntegralPoint& p2, const IntegralPoint& r,
                            const Rational& value) {
    if (vec_is_zero(a_class))
        throw std::runtime_error("table entry with zero curve class (constant maps are forced)");
    if (p1.is_zero() || p2.is_zero())
        throw std::runtime_error("table entry with zero input point (unit rule is forced)");
    if (!monoid_contains(g.pmonoid, a_class))
        throw std::runtime_error("table entry class outside the class monoid");
    if (g.classes.c1_pairing(a_class) != 0)
        throw std::runtime_error("table entry with nonzero c1 pairing (vanishes identically)");
    for (auto& pt : {p1, p2})
        if (!g.skeleton.contains_point(pt))
            throw std::runtime_error("table entry input point outside the skeleton");
    if (!g.skeleton.contains_point(r))
        throw std::runtime_error("table entry output point outside the skeleton");
    for (auto& d : g.complex.divisors) {
        Int want = pairing(p1, d) + pairing(p2, d) - g.classes.divisor_pairing(d, a_class);
        if (pairing(r, d) != want)
            throw std::runtime_error("table entry violates the pairing constraints");
    }
    entries[make_key(a_class, p1, p2, r)] = value;
}

std::optional<Rational> InvariantTable::lookup(const Vec& a_class, const IntegralPoint& p1,
                                               const IntegralPoint& p2,
                                               const IntegralPoint& r) const {
    auto it = entries.find(make_key(a_class, p1, p2, r));
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

Rational constant_term(const Geometry& g, const IntegralPoint& p1,
                       const IntegralPoint& p2, const IntegralPoint& r) {
    for (auto& [cone, sum] : sums_in_common_cones(g.complex, p1, p2))
        if (sum == r) return Rational(1);
    return Rational(0);
}

std::vector<IntegralPoint> candidate_outputs(const Geometry& g, const IntegralPoint& p1,
                                             const IntegralPoint& p2, const Vec& a_class) {
    std::map<std::string, Int> t;
    std::vector<std::string> support;
    for (auto& d : g.complex.divisors) {
        Int v = pairing(p1, d) + pairing(p2, d) - g.classes.divisor_pairing(d, a_class);
        if (v < 0) return {};
        if (v > 0) { t[d] = v; support.push_back(d); }
    }
    std::sort(support.begin(), support.end());
    std::vector<IntegralPoint> out;
    if (support.empty()) {
        IntegralPoint z = zero_point(g.complex);
        if (g.skeleton.contains_point(z)) out.push_back(z);
        return out;
    }
    for (auto& cid : g.skeleton.cones) {
        const Stratum& s = g.complex.stratum(cid);
        if (s.labels == support) out.push_back(IntegralPoint{cid, t});
    }
    std::sort(out.begin(), out.end());
    return out;
}

NValue get_N(const Geometry& g, const InvariantTable& table, const Vec& a_class,
             const IntegralPoint& p1, const IntegralPoint& p2, const IntegralPoint& r) {
    // unit rule
    if (p1.is_zero() || p2.is_zero()) {
        const IntegralPoint& other = p1.is_zero() ? p2 : p1;
        bool hit = vec_is_zero(a_class) && r == other;
        return NValue{hit ? Rational(1) : Rational(0), "unit"};
    }
    // constant maps
    if (vec_is_zero(a_class))
        return NValue{constant_term(g, p1, p2, r), "constant"};
    // c1 filter
    if (g.classes.c1_pairing(a_class) != 0)
        return NValue{Rational(0), "filtered-zero"};
    // pairing constraints
    for (auto& d : g.complex.divisors) {
        Int want = pairing(p1, d) + pairing(p2, d) - g.classes.divisor_pairing(d, a_class);
        if (pairing(r, d) != want) return NValue{Rational(0), "filtered-zero"};
    }
    auto v = table.lookup(a_class, p1, p2, r);
    if (v) return NValue{*v, "table"};
    if (table.policy == TablePolicy::Strict)
        throw std::runtime_error("missing invariant table entry (strict policy)");
    return NValue{Rational(0), "table"};
}

} // namespace theta
