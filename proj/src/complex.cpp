#include "theta/complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace theta {

const Stratum& ConeComplex::stratum(const std::string& id) const {
    for (auto& s : strata)
        if (s.id == id) return s;
    throw std::invalid_argument("no stratum with id " + id);
}

bool ConeComplex::has_stratum(const std::string& id) const {
    for (auto& s : strata)
        if (s.id == id) return true;
    return false;
}

bool ConeComplex::is_face_of(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    // follow parent links upward from a
    std::set<std::string> seen{a};
    std::vector<std::string> frontier{a};
    while (!frontier.empty()) {
        auto cur = frontier.back();
        frontier.pop_back();
        for (auto& p : stratum(cur).parents) {
            if (p == b) return true;
            if (seen.insert(p).second) frontier.push_back(p);
        }
    }
    return false;
}

std::vector<std::string> ConeComplex::cones_containing(const std::string& a) const {
    std::vector<std::string> out;
    for (auto& s : strata)
        if (is_face_of(a, s.id)) out.push_back(s.id);
    return out;
}

std::string ConeComplex::zero_stratum() const {
    for (auto& s : strata)
        if (s.labels.empty()) return s.id;
    throw std::runtime_error("complex has no zero stratum");
}

void ConeComplex::validate() const {
    std::set<std::string> divs(divisors.begin(), divisors.end());
    if (divs.size() != divisors.size()) throw std::runtime_error("duplicate divisor labels");
    std::set<std::string> ids;
    size_t zero = 0;
    for (auto& s : strata) {
        if (!ids.insert(s.id).second) throw std::runtime_error("duplicate stratum id " + s.id);
        if (!std::is_sorted(s.labels.begin(), s.labels.end()))
            throw std::runtime_error("stratum labels must be sorted: " + s.id);
        std::set<std::string> ls(s.labels.begin(), s.labels.end());
        if (ls.size() != s.labels.size()) throw std::runtime_error("duplicate labels in " + s.id);
        for (auto& l : s.labels)
            if (!divs.count(l)) throw std::runtime_error("unknown label " + l + " in " + s.id);
        if (s.labels.empty()) ++zero;
    }
    if (zero != 1) throw std::runtime_error("complex must have exactly one zero stratum");
    for (auto& s : strata) {
        for (auto& p : s.parents) {
            if (!ids.count(p)) throw std::runtime_error("unknown parent " + p + " of " + s.id);
            const Stratum& par = stratum(p);
            std::set<std::string> pl(par.labels.begin(), par.labels.end());
            for (auto& l : s.labels)
                if (!pl.count(l))
                    throw std::runtime_error("parent " + p + " misses label " + l + " of " + s.id);
            if (par.labels.size() <= s.labels.size())
                throw std::runtime_error("parent " + p + " does not extend " + s.id);
        }
    }
    // each stratum must have, among its faces, a unique face for each label
    // subset realized by its faces -- checked lazily in canonical_point
}

std::string IntegralPoint::str() const {
    std::ostringstream os;
    os << "theta{" << cone << ":";
    bool first = true;
    for (auto& [l, c] : coords) {
        if (!first) os << ",";
        first = false;
        os << l << "=" << c;
    }
    os << "}";
    return os.str();
}

IntegralPoint canonical_point(const ConeComplex& cx, const std::string& cone_id,
                              const std::map<std::string, Int>& coords) {
    const Stratum& s = cx.stratum(cone_id);
    std::set<std::string> labels(s.labels.begin(), s.labels.end());
    std::map<std::string, Int> support;
    for (auto& [l, c] : coords) {
        if (!labels.count(l))
            throw std::invalid_argument("coordinate label " + l + " not on cone " + cone_id);
        if (c < 0) throw std::invalid_argument("negative coordinate for point");
        if (c > 0) support[l] = c;
    }
    std::vector<std::string> supp_labels;
    for (auto& [l, c] : support) supp_labels.push_back(l);
    if (supp_labels.size() == s.labels.size())
        return IntegralPoint{cone_id, support};
    // descend: unique face of cone_id whose labels equal the support
    std::vector<std::string> found;
    for (auto& t : cx.strata) {
        if (t.labels == supp_labels && cx.is_face_of(t.id, cone_id)) found.push_back(t.id);
    }
    if (found.empty())
        throw std::invalid_argument("support does not match a face of " + cone_id);
    if (found.size() > 1)
        throw std::invalid_argument("ambiguous face for support on " + cone_id);
    return IntegralPoint{found[0], support};
}

Int pairing(const IntegralPoint& p, const std::string& label) {
    auto it = p.coords.find(label);
    return it == p.coords.end() ? 0 : it->second;
}

std::vector<std::pair<std::string, IntegralPoint>> sums_in_common_cones(
    const ConeComplex& cx, const IntegralPoint& p, const IntegralPoint& q) {
    auto cp = cx.cones_containing(p.cone);
    auto cq = cx.cones_containing(q.cone);
    std::vector<std::string> common;
    for (auto& c : cp)
        if (std::find(cq.begin(), cq.end(), c) != cq.end()) common.push_back(c);
    // minimal ones under the face relation
    std::vector<std::string> minimal;
    for (auto& c : common) {
        bool min = true;
        for (auto& d : common)
            if (d != c && cx.is_face_of(d, c)) { min = false; break; }
        if (min) minimal.push_back(c);
    }
    std::sort(minimal.begin(), minimal.end());
    std::vector<std::pair<std::string, IntegralPoint>> out;
    for (auto& c : minimal) {
        std::map<std::string, Int> sum = p.coords;
        for (auto& [l, v] : q.coords) sum[l] += v;
        out.push_back({c, canonical_point(cx, c, sum)});
    }
    return out;
}

bool Skeleton::contains_point(const IntegralPoint& p) const {
    return std::find(cones.begin(), cones.end(), p.cone) != cones.end();
}

Skeleton ks_skeleton(const ConeComplex& cx, const std::map<std::string, Rational>& a,
                     const std::optional<RelativeData>& rel) {
    Skeleton sk;
    sk.complex = cx;
    std::map<std::string, Rational> coeff;
    for (auto& d : cx.divisors) {
        auto it = a.find(d);
        Rational v = (it == a.end()) ? Rational(0) : it->second;
        if (v < Rational(0)) throw std::invalid_argument("negative anticanonical coefficient");
        coeff[d] = v;
    }
    if (rel) {
        // normalize: subtract (min weight) * multiplicity on the over-zero labels
        bool any = false;
        Rational wmin(0);
        for (auto& [d, mu] : rel->multiplicities) {
            if (mu < 1) throw std::invalid_argument("relative multiplicity must be >= 1");
            Rational w = coeff.at(d) / Rational(mu);
            if (!any || w < wmin) { wmin = w; any = true; }
        }
        if (!any) throw std::invalid_argument("relative data without over-zero divisors");
        for (auto& [d, mu] : rel->multiplicities) coeff[d] -= wmin * Rational(mu);
    }
    for (auto& d : cx.divisors) sk.good[d] = coeff[d].is_zero();
    for (auto& s : cx.strata) {
        bool ok = true;
        for (auto& l : s.labels)
            if (!sk.good[l]) { ok = false; break; }
        if (ok) sk.cones.push_back(s.id);
    }
    return sk;
}

Int degree(const RelativeData& rel, const IntegralPoint& p) {
    Int d = 0;
    for (auto& [label, mu] : rel.multiplicities)
        d = checked_add(d, checked_mul(mu, pairing(p, label)));
    return d;
}

std::vector<IntegralPoint> enumerate_points(const Skeleton& sk,
                                            const std::map<std::string, Int>& phi,
                                            Int bound) {
    std::vector<IntegralPoint> out;
    for (auto& cid : sk.cones) {
        const Stratum& s = sk.complex.stratum(cid);
        for (auto& l : s.labels) {
            auto it = phi.find(l);
            if (it == phi.end() || it->second <= 0)
                throw std::invalid_argument("phi must be positive on skeleton labels");
        }
        // strictly positive coordinate vectors with phi-value <= bound
        size_t k = s.labels.size();
        if (k == 0) { out.push_back(IntegralPoint{cid, {}}); continue; }
        std::map<std::string, Int> coords;
        std::function<void(size_t, Int)> rec = [&](size_t i, Int budget) {
            if (i == k) {
                out.push_back(IntegralPoint{cid, coords});
                return;
            }
            Int w = phi.at(s.labels[i]);
            for (Int c = 1; checked_mul(w, c) <= budget; ++c) {
                coords[s.labels[i]] = c;
                rec(i + 1, budget - w * c);
            }
            coords.erase(s.labels[i]);
        };
        rec(0, bound);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IntegralPoint zero_point(const ConeComplex& cx) {
    return IntegralPoint{cx.zero_stratum(), {}};
}

} // namespace theta
