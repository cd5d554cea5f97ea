#include "theta/curves.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace theta {

void CurveClassData::validate() const {
    for (auto& d : divisors)
        if (!pairing_rows.count(d)) throw std::runtime_error("missing pairing row for " + d);
    if (c1.size() != n) throw std::runtime_error("c1 vector has wrong length");
    if (flag == C1Flag::LogCalabiYau) {
        Vec expect(n, 0);
        for (auto& d : divisors) {
            auto it = logcy_coeffs.find(d);
            Rational a = (it == logcy_coeffs.end()) ? Rational(0) : it->second;
            if (a < Rational(0)) throw std::runtime_error("log CY coefficient must be >= 0");
            if (!a.is_integer())
                throw std::runtime_error("non-integral log CY combination unsupported here");
            expect = vec_sub(expect, vec_scale(a.num, pairing_rows.at(d)));
        }
        if (expect != c1)
            throw std::runtime_error("c1 is not the stated anticanonical combination");
    }
}

void ClassMonoid::validate() const {
    if (phi.size() != n) throw std::runtime_error("phi has wrong length");
    for (auto& g : generators) {
        if (g.size() != n) throw std::runtime_error("class generator has wrong length");
        if (dot(phi, g) <= 0) throw std::runtime_error("phi not strictly positive on generators");
    }
}

bool monoid_contains(const ClassMonoid& p, const Vec& a_class) {
    if (vec_is_zero(a_class)) return true;
    Int target = dot(p.phi, a_class);
    if (target <= 0) return false;
    // Monoid membership requires membership in the rational cone of the
    // generators; rejecting off-cone vectors here keeps the subtraction
    // search from walking long rays that can never terminate in zero.
    if (!in_cone_span(p.generators, a_class)) return false;
    std::set<Vec> failed;
    std::function<bool(const Vec&)> rec = [&](const Vec& v) -> bool {
        if (vec_is_zero(v)) return true;
        if (dot(p.phi, v) <= 0) return false;
        if (failed.count(v)) return false;
        for (auto& g : p.generators) {
            if (dot(p.phi, g) > dot(p.phi, v)) continue;
            if (rec(vec_sub(v, g))) return true;
        }
        failed.insert(v);
        return false;
    };
    return rec(a_class);
}

bool ideal_contains(const ClassMonoid& p, const CoArtinianIdeal& ideal, const Vec& a_class) {
    if (ideal.threshold) return dot(p.phi, a_class) >= *ideal.threshold;
    for (auto& g : ideal.generators)
        if (monoid_contains(p, vec_sub(a_class, g))) return true;
    return false;
}

std::vector<Vec> complement(const ClassMonoid& p, const CoArtinianIdeal& ideal) {
    p.validate();
    constexpr size_t kCap = 100000;
    std::set<Vec> seen;
    Vec zero(p.n, 0);
    if (ideal_contains(p, ideal, zero))
        return {};
    seen.insert(zero);
    std::vector<Vec> frontier{zero};
    while (!frontier.empty()) {
        Vec v = frontier.back();
        frontier.pop_back();
        for (auto& g : p.generators) {
            Vec w = vec_add(v, g);
            if (seen.count(w)) continue;
            if (ideal_contains(p, ideal, w)) continue;
            seen.insert(w);
            frontier.push_back(w);
            if (seen.size() > kCap)
                throw std::runtime_error("ideal is not co-Artinian (complement cap exceeded)");
        }
    }
    std::vector<Vec> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
        Int pa = dot(p.phi, a), pb = dot(p.phi, b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return out;
}

void Coefficient::add_term(const Vec& a_class, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(a_class);
    if (it == terms.end()) {
        terms[a_class] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Coefficient Coefficient::monomial(Vec a_class, Rational c) {
    Coefficient r;
    r.add_term(a_class, c);
    return r;
}

std::string Coefficient::str(bool with_t) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [a, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (with_t && !vec_is_zero(a)) {
            os << " t^[";
            for (size_t i = 0; i < a.size(); ++i) {
                if (i) os << ",";
                os << a[i];
            }
            os << "]";
        }
    }
    return os.str();
}

Coefficient coef_add(const Coefficient& x, const Coefficient& y) {
    Coefficient r = x;
    for (auto& [a, c] : y.terms) r.add_term(a, c);
    return r;
}

Coefficient coef_neg(const Coefficient& x) {
    Coefficient r;
    for (auto& [a, c] : x.terms) r.terms[a] = -c;
    return r;
}

Coefficient coef_scale(const Rational& c, const Coefficient& x) {
    Coefficient r;
    if (c.is_zero()) return r;
    for (auto& [a, v] : x.terms) r.terms[a] = c * v;
    return r;
}

Coefficient coef_truncate(const ClassMonoid& p, const CoArtinianIdeal& ideal,
                          const Coefficient& x) {
    Coefficient r;
    for (auto& [a, c] : x.terms)
        if (!ideal_contains(p, ideal, a)) r.add_term(a, c);
    return r;
}

Coefficient coef_mul(const ClassMonoid& p, const CoArtinianIdeal& ideal,
                     const Coefficient& x, const Coefficient& y) {
    Coefficient r;
    for (auto& [a, c] : x.terms)
        for (auto& [b, d] : y.terms) {
            Vec s = vec_add(a, b);
            if (ideal_contains(p, ideal, s)) continue;
            r.add_term(s, c * d);
        }
    return r;
}

} // namespace theta
