#include "theta/ring.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace theta {

void ThetaElement::add(const IntegralPoint& p, const Coefficient& c) {
    if (c.is_zero()) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
        terms[p] = c;
    } else {
        it->second = coef_add(it->second, c);
        if (it->second.is_zero()) terms.erase(it);
    }
}

ThetaElement ThetaElement::theta(const IntegralPoint& p, size_t class_rank) {
    ThetaElement e;
    e.add(p, Coefficient::unit(class_rank));
    return e;
}

std::string ThetaElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, coef] : terms) {
        for (auto& [a, c] : coef.terms) {
            if (!first) os << " + ";
            first = false;
            os << c.str() << " t^[";
            for (size_t i = 0; i < a.size(); ++i) {
                if (i) os << ",";
                os << a[i];
            }
            os << "] " << p.str();
        }
    }
    return os.str();
}

ProductReport multiply(const Geometry& g, const InvariantTable& table,
                       const IntegralPoint& p1, const IntegralPoint& p2) {
    ProductReport rep;
    rep.p1 = p1;
    rep.p2 = p2;
    for (auto& a_class : complement(g.pmonoid, g.ideal)) {
        for (auto& r : candidate_outputs(g, p1, p2, a_class)) {
            NValue nv = get_N(g, table, a_class, p1, p2, r);
            rep.contributions.push_back({a_class, r, nv.value, nv.provenance});
            if (!nv.value.is_zero())
                rep.result.add(r, Coefficient::monomial(a_class, nv.value));
        }
    }
    return rep;
}

ThetaElement multiply_elements(const Geometry& g, const InvariantTable& table,
                               const ThetaElement& x, const ThetaElement& y) {
    ThetaElement out;
    for (auto& [p, cx] : x.terms)
        for (auto& [q, cy] : y.terms) {
            ProductReport rep = multiply(g, table, p, q);
            Coefficient cxy = coef_mul(g.pmonoid, g.ideal, cx, cy);
            for (auto& [r, c] : rep.result.terms)
                out.add(r, coef_mul(g.pmonoid, g.ideal, cxy, c));
        }
    return out;
}

bool check_unit(const Geometry& g, const InvariantTable& table, const IntegralPoint& p) {
    IntegralPoint z = zero_point(g.complex);
    ThetaElement want = ThetaElement::theta(p, g.pmonoid.n);
    return multiply(g, table, z, p).result == want &&
           multiply(g, table, p, z).result == want;
}

bool check_commutativity(const Geometry& g, const InvariantTable& table,
                         const IntegralPoint& p1, const IntegralPoint& p2) {
    return multiply(g, table, p1, p2).result == multiply(g, table, p2, p1).result;
}

AssociativityReport check_associativity(const Geometry& g, const InvariantTable& table,
                                        const IntegralPoint& p1, const IntegralPoint& p2,
                                        const IntegralPoint& p3) {
    AssociativityReport rep;
    auto comp = complement(g.pmonoid, g.ideal);
    using Key = std::pair<Vec, IntegralPoint>;
    std::map<Key, Rational> lhs, rhs;
    auto accumulate = [&](std::map<Key, Rational>& acc, const IntegralPoint& a,
                          const IntegralPoint& b, const IntegralPoint& c, bool left) {
        // left: sum_s N(A1,a,b,s) N(A2,s,c,r); right: N(A1,b,c,s) N(A2,a,s,r)
        for (auto& a1 : comp) {
            auto first = left ? candidate_outputs(g, a, b, a1)
                              : candidate_outputs(g, b, c, a1);
            for (auto& s : first) {
                Rational n1 = left ? get_N(g, table, a1, a, b, s).value
                                   : get_N(g, table, a1, b, c, s).value;
                if (n1.is_zero()) continue;
                for (auto& a2 : comp) {
                    Vec total = vec_add(a1, a2);
                    if (ideal_contains(g.pmonoid, g.ideal, total)) continue;
                    auto second = left ? candidate_outputs(g, s, c, a2)
                                       : candidate_outputs(g, a, s, a2);
                    for (auto& r : second) {
                        Rational n2 = left ? get_N(g, table, a2, s, c, r).value
                                           : get_N(g, table, a2, a, s, r).value;
                        if (n2.is_zero()) continue;
                        auto& slot = acc[{total, r}];
                        slot += n1 * n2;
                        if (slot.is_zero()) acc.erase({total, r});
                    }
                }
            }
        }
    };
    accumulate(lhs, p1, p2, p3, true);
    accumulate(rhs, p1, p2, p3, false);
    if (lhs != rhs) {
        rep.ok = false;
        rep.detail = "double sums disagree for (" + p1.str() + ", " + p2.str() + ", " +
                     p3.str() + ")";
        return rep;
    }
    // cross-check against the bilinear foldings
    ThetaElement t3 = ThetaElement::theta(p3, g.pmonoid.n);
    ThetaElement t1 = ThetaElement::theta(p1, g.pmonoid.n);
    ThetaElement left = multiply_elements(g, table, multiply(g, table, p1, p2).result, t3);
    ThetaElement right = multiply_elements(g, table, t1, multiply(g, table, p2, p3).result);
    if (!(left == right)) {
        rep.ok = false;
        rep.detail = "bilinear foldings disagree for (" + p1.str() + ", " + p2.str() +
                     ", " + p3.str() + ")";
        return rep;
    }
    // the double sum must reproduce the folded element
    ThetaElement folded;
    for (auto& [key, val] : lhs) folded.add(key.second, Coefficient::monomial(key.first, val));
    if (!(folded == left)) {
        rep.ok = false;
        rep.detail = "double sum disagrees with folded product";
    }
    return rep;
}

bool check_torus_grading(const Geometry& g, const ProductReport& rep) {
    for (auto& c : rep.contributions) {
        if (c.value.is_zero()) continue;
        for (auto& d : g.complex.divisors) {
            Int lhs = pairing(c.r, d) + g.classes.divisor_pairing(d, c.a_class);
            Int rhs = pairing(rep.p1, d) + pairing(rep.p2, d);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool check_degree_grading(const Geometry& g, const ProductReport& rep) {
    if (!g.relative) return true;
    for (auto& c : rep.contributions) {
        if (c.value.is_zero()) continue;
        Int fibre = 0;
        for (auto& [d, mu] : g.relative->multiplicities)
            fibre = checked_add(fibre, checked_mul(mu, g.classes.divisor_pairing(d, c.a_class)));
        if (degree(*g.relative, rep.p1) + degree(*g.relative, rep.p2) !=
            degree(*g.relative, c.r) + fibre)
            return false;
    }
    return true;
}

static Int s_pairing(const std::map<std::string, Int>& s, const IntegralPoint& p) {
    Int v = 0;
    for (auto& [d, c] : s) v = checked_add(v, checked_mul(c, pairing(p, d)));
    return v;
}

bool check_rees(const Geometry& g, const ProductReport& rep,
                const std::map<std::string, Int>& s) {
    (void)g;
    for (auto& c : rep.contributions) {
        if (c.value.is_zero()) continue;
        if (s_pairing(s, rep.p1) + s_pairing(s, rep.p2) < s_pairing(s, c.r)) return false;
    }
    return true;
}

std::vector<std::pair<Int, IntegralPoint>> rees_generators(
    const Geometry& g, const std::map<std::string, Int>& s,
    const std::map<std::string, Int>& phi, Int bound) {
    std::vector<std::pair<Int, IntegralPoint>> out;
    for (auto& p : enumerate_points(g.skeleton, phi, bound)) {
        for (Int d = s_pairing(s, p); d <= bound; ++d) out.push_back({d, p});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- presentations ----

Int monomial_degree(const Monomial& m) {
    Int d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (auto& [v, e] : a) {
        auto it = b.find(v);
        if (it == b.end() || it->second < e) return false;
    }
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (auto& [v, e] : b) {
        r[v] += e;
        if (r[v] == 0) r.erase(v);
    }
    return r;
}

Monomial monomial_div(const Monomial& b, const Monomial& a) {
    Monomial r = b;
    for (auto& [v, e] : a) {
        r[v] -= e;
        if (r[v] == 0) r.erase(v);
    }
    return r;
}

void RingPresentation::validate(const Geometry& g) const {
    std::set<std::string> names(vars.begin(), vars.end());
    if (names.size() != vars.size()) throw std::runtime_error("duplicate variable names");
    for (auto& v : vars) {
        auto it = points.find(v);
        if (it == points.end()) throw std::runtime_error("variable " + v + " has no point");
        if (it->second.is_zero()) throw std::runtime_error("variable assigned the zero point");
        if (!g.skeleton.contains_point(it->second))
            throw std::runtime_error("variable point outside the skeleton");
    }
    for (auto& rel : relations) {
        if (rel.lead.empty()) throw std::runtime_error("relation with empty lead monomial");
        for (auto& [v, e] : rel.lead) {
            if (!names.count(v)) throw std::runtime_error("relation uses unknown variable " + v);
            if (e <= 0) throw std::runtime_error("nonpositive exponent in relation lead");
        }
        Int d = monomial_degree(rel.lead);
        for (auto& [c, m] : rel.replacement) {
            for (auto& [v, e] : m)
                if (!names.count(v) || e <= 0)
                    throw std::runtime_error("bad replacement monomial");
            if (monomial_degree(m) >= d)
                throw std::runtime_error("replacement does not decrease degree");
        }
    }
}

Poly normal_form(const Geometry& g, const RingPresentation& pres, Poly poly,
                 bool reversed) {
    auto find_step = [&](const Poly& p, Monomial& mono, size_t& reln) -> bool {
        auto scan = [&](auto begin, auto end) -> bool {
            for (auto it = begin; it != end; ++it) {
                const Monomial& m = it->first;
                if (it->second.is_zero()) continue;
                if (!reversed) {
                    for (size_t k = 0; k < pres.relations.size(); ++k)
                        if (monomial_divides(pres.relations[k].lead, m)) { mono = m; reln = k; return true; }
                } else {
                    for (size_t k = pres.relations.size(); k-- > 0;)
                        if (monomial_divides(pres.relations[k].lead, m)) { mono = m; reln = k; return true; }
                }
            }
            return false;
        };
        if (!reversed) return scan(p.begin(), p.end());
        return scan(p.rbegin(), p.rend());
    };
    Monomial mono;
    size_t reln = 0;
    while (find_step(poly, mono, reln)) {
        Coefficient c = poly[mono];
        poly.erase(mono);
        const Relation& rel = pres.relations[reln];
        Monomial rest = monomial_div(mono, rel.lead);
        for (auto& [rc, rm] : rel.replacement) {
            Monomial nm = monomial_mul(rest, rm);
            Coefficient add = coef_mul(g.pmonoid, g.ideal, c, rc);
            auto it = poly.find(nm);
            if (it == poly.end()) {
                if (!add.is_zero()) poly[nm] = add;
            } else {
                it->second = coef_add(it->second, add);
                if (it->second.is_zero()) poly.erase(it);
            }
        }
    }
    return poly;
}

ThetaElement poly_to_theta(const Geometry& g, const RingPresentation& pres, const Poly& poly) {
    ThetaElement out;
    for (auto& [mono, coef] : poly) {
        if (coef.is_zero()) continue;
        if (mono.empty()) {
            out.add(zero_point(g.complex), coef);
            continue;
        }
        // common cones of all variable points
        std::vector<std::string> common;
        bool first = true;
        for (auto& [v, e] : mono) {
            auto cs = g.complex.cones_containing(pres.points.at(v).cone);
            if (first) { common = cs; first = false; continue; }
            std::vector<std::string> inter;
            for (auto& c : common)
                if (std::find(cs.begin(), cs.end(), c) != cs.end()) inter.push_back(c);
            common = inter;
        }
        if (common.empty())
            throw std::runtime_error("monomial has no common cone (presentation incomplete)");
        std::set<IntegralPoint> sums;
        for (auto& c : common) {
            std::map<std::string, Int> coords;
            for (auto& [v, e] : mono)
                for (auto& [l, x] : pres.points.at(v).coords)
                    coords[l] += checked_mul(e, x);
            sums.insert(canonical_point(g.complex, c, coords));
        }
        if (sums.size() != 1)
            throw std::runtime_error("ambiguous monomial sum across common cones");
        const IntegralPoint& p = *sums.begin();
        if (!g.skeleton.contains_point(p))
            throw std::runtime_error("monomial sum leaves the skeleton");
        out.add(p, coef);
    }
    return out;
}

Monomial point_to_monomial(const Geometry& g, const RingPresentation& pres,
                           const IntegralPoint& p) {
    if (p.is_zero()) return {};
    std::vector<Monomial> solutions;
    for (auto& cid : g.complex.cones_containing(p.cone)) {
        const Stratum& s = g.complex.stratum(cid);
        std::vector<std::string> usable;
        for (auto& v : pres.vars)
            if (g.complex.is_face_of(pres.points.at(v).cone, cid)) usable.push_back(v);
        if (usable.empty()) continue;
        // target coordinates on this cone
        std::map<std::string, Int> target;
        for (auto& l : s.labels) target[l] = pairing(p, l);
        Monomial cur;
        std::function<void(size_t, std::map<std::string, Int>)> rec =
            [&](size_t i, std::map<std::string, Int> rem) {
                bool done = true;
                for (auto& [l, v] : rem)
                    if (v != 0) { done = false; break; }
                if (done) { if (!cur.empty()) solutions.push_back(cur); return; }
                if (i == usable.size()) return;
                const IntegralPoint& vp = pres.points.at(usable[i]);
                // max exponent bounded by remaining coordinates
                Int emax = -1;
                for (auto& [l, c] : vp.coords) {
                    Int have = rem.count(l) ? rem[l] : 0;
                    Int cap = have / c;
                    if (emax < 0 || cap < emax) emax = cap;
                }
                if (emax < 0) emax = 0;
                for (Int e = 0; e <= emax; ++e) {
                    if (e > 0) {
                        bool ok = true;
                        for (auto& [l, c] : vp.coords) {
                            if (!rem.count(l) || rem[l] < c) { ok = false; break; }
                        }
                        if (!ok) break;
                        for (auto& [l, c] : vp.coords) rem[l] -= c;
                        cur[usable[i]] = e;
                    }
                    rec(i + 1, rem);
                }
                cur.erase(usable[i]);
            };
        rec(0, target);
    }
    // deduplicate, keep irreducible, prefer lowest (degree, lex)
    std::set<Monomial> uniq(solutions.begin(), solutions.end());
    std::vector<Monomial> good;
    for (auto& m : uniq) {
        bool red = false;
        for (auto& rel : pres.relations)
            if (monomial_divides(rel.lead, m)) { red = true; break; }
        if (!red) good.push_back(m);
    }
    if (good.empty())
        throw std::runtime_error("no irreducible monomial represents point " + p.str());
    std::sort(good.begin(), good.end(), [](const Monomial& a, const Monomial& b) {
        Int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return good[0];
}

ThetaElement presentation_eval(const Geometry& g, const RingPresentation& pres,
                               const std::vector<IntegralPoint>& points) {
    Monomial m;
    for (auto& p : points) m = monomial_mul(m, point_to_monomial(g, pres, p));
    Poly poly;
    poly[m] = Coefficient::unit(g.pmonoid.n);
    return poly_to_theta(g, pres, normal_form(g, pres, poly));
}

void confluence_check(const Geometry& g, const RingPresentation& pres, Int degree_bound) {
    // all monomials of total degree in [1, bound]
    std::vector<Monomial> all;
    std::function<void(size_t, Int, Monomial&)> rec = [&](size_t i, Int budget, Monomial& cur) {
        if (i == pres.vars.size()) {
            if (!cur.empty()) all.push_back(cur);
            return;
        }
        for (Int e = 0; e <= budget; ++e) {
            if (e > 0) cur[pres.vars[i]] = e;
            rec(i + 1, budget - e, cur);
        }
        cur.erase(pres.vars[i]);
    };
    Monomial cur;
    rec(0, degree_bound, cur);
    for (auto& m : all) {
        Poly poly;
        poly[m] = Coefficient::unit(g.pmonoid.n);
        ThetaElement a = poly_to_theta(g, pres, normal_form(g, pres, poly, false));
        ThetaElement b = poly_to_theta(g, pres, normal_form(g, pres, poly, true));
        if (!(a == b)) {
            std::ostringstream os;
            os << "relations not confluent on monomial";
            for (auto& [v, e] : m) os << " " << v << "^" << e;
            throw std::runtime_error(os.str());
        }
    }
}

InvariantTable derive_table(const Geometry& g, const RingPresentation& pres,
                            const std::map<std::string, Int>& phi, Int pair_bound) {
    InvariantTable table;
    table.policy = TablePolicy::Complete;
    auto pts = enumerate_points(g.skeleton, phi, pair_bound);
    auto phival = [&](const IntegralPoint& p) {
        Int v = 0;
        for (auto& [l, c] : p.coords) v += phi.at(l) * c;
        return v;
    };
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].is_zero()) continue;
        for (size_t j = i; j < pts.size(); ++j) {
            if (pts[j].is_zero()) continue;
            if (phival(pts[i]) + phival(pts[j]) > pair_bound) continue;
            ThetaElement el = presentation_eval(g, pres, {pts[i], pts[j]});
            // validate forced A = 0 part against the constant-map rule
            for (auto& r : candidate_outputs(g, pts[i], pts[j], Vec(g.pmonoid.n, 0))) {
                Rational want = constant_term(g, pts[i], pts[j], r);
                Rational have(0);
                auto it = el.terms.find(r);
                if (it != el.terms.end()) {
                    auto t0 = it->second.terms.find(Vec(g.pmonoid.n, 0));
                    if (t0 != it->second.terms.end()) have = t0->second;
                }
                if (!(want == have))
                    throw std::runtime_error("derived product contradicts the constant-map rule");
            }
            for (auto& [r, coef] : el.terms)
                for (auto& [a, val] : coef.terms) {
                    if (vec_is_zero(a) || val.is_zero()) continue;
                    table.insert(g, a, pts[i], pts[j], r, val);
                }
        }
    }
    return table;
}

std::vector<Relation> find_presentation(const Geometry& g, const InvariantTable& table,
                                        const RingPresentation& gens, Int degree_bound) {
    // monomials up to the bound, sorted by (degree, lex)
    std::vector<Monomial> monos;
    std::function<void(size_t, Int, Monomial&)> rec = [&](size_t i, Int budget, Monomial& cur) {
        if (i == gens.vars.size()) { monos.push_back(cur); return; }
        for (Int e = 0; e <= budget; ++e) {
            if (e > 0) cur[gens.vars[i]] = e;
            rec(i + 1, budget - e, cur);
        }
        cur.erase(gens.vars[i]);
    };
    Monomial cur;
    rec(0, degree_bound, cur);
    std::sort(monos.begin(), monos.end(), [](const Monomial& a, const Monomial& b) {
        Int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    auto value_of = [&](const Monomial& m) {
        ThetaElement v = ThetaElement::theta(zero_point(g.complex), g.pmonoid.n);
        for (auto& [var, e] : m) {
            ThetaElement t = ThetaElement::theta(gens.points.at(var), g.pmonoid.n);
            for (Int k = 0; k < e; ++k) v = multiply_elements(g, table, v, t);
        }
        return v;
    };
    auto comp = complement(g.pmonoid, g.ideal);
    std::vector<Monomial> basis;
    std::vector<ThetaElement> basis_vals;
    std::vector<Relation> relations;
    for (auto& m : monos) {
        bool skip = false;
        for (auto& rel : relations)
            if (monomial_divides(rel.lead, m)) { skip = true; break; }
        if (skip) continue;
        ThetaElement val = value_of(m);
        if (basis.empty()) { basis.push_back(m); basis_vals.push_back(val); continue; }
        // try to express val over basis monomials (strictly smaller degree first)
        auto try_solve = [&](bool strict_degree) -> std::optional<Relation> {
            std::vector<std::pair<size_t, Vec>> cols; // (basis idx, class shift)
            Int dm = monomial_degree(m);
            for (size_t j = 0; j < basis.size(); ++j) {
                Int db = monomial_degree(basis[j]);
                bool earlier = db < dm || (!strict_degree && db == dm && basis[j] < m);
                if (!earlier) continue;
                for (auto& a : comp) cols.push_back({j, a});
            }
            if (cols.empty()) return std::nullopt;
            // collect row index set: (point, class)
            std::set<std::pair<IntegralPoint, Vec>> rows_set;
            auto collect = [&](const ThetaElement& e, const Vec& shift) {
                for (auto& [p, coef] : e.terms)
                    for (auto& [a, c] : coef.terms) {
                        Vec b = vec_add(a, shift);
                        if (!ideal_contains(g.pmonoid, g.ideal, b)) rows_set.insert({p, b});
                    }
            };
            collect(val, Vec(g.pmonoid.n, 0));
            for (auto& [j, a] : cols) collect(basis_vals[j], a);
            std::vector<std::pair<IntegralPoint, Vec>> rows(rows_set.begin(), rows_set.end());
            // rational dense system
            QMat sys(rows.size(), QVec(cols.size() + 1, Rational(0)));
            auto coeff_at = [&](const ThetaElement& e, const IntegralPoint& p, const Vec& a) {
                auto it = e.terms.find(p);
                if (it == e.terms.end()) return Rational(0);
                auto jt = it->second.terms.find(a);
                return jt == it->second.terms.end() ? Rational(0) : jt->second;
            };
            for (size_t r = 0; r < rows.size(); ++r) {
                for (size_t c = 0; c < cols.size(); ++c) {
                    // t^{shift} * basis_vals[j] coefficient at (p, B) is the
                    // basis coefficient at (p, B - shift)
                    Vec need = vec_sub(rows[r].second, cols[c].second);
                    if (!monoid_contains(g.pmonoid, need)) continue;
                    sys[r][c] = coeff_at(basis_vals[cols[c].first], rows[r].first, need);
                }
                sys[r][cols.size()] = coeff_at(val, rows[r].first, rows[r].second);
            }
            // gaussian elimination with the last column augmented
            size_t nrows = rows.size(), ncols = cols.size();
            std::vector<size_t> pivots;
            size_t rr = 0;
            for (size_t c = 0; c < ncols && rr < nrows; ++c) {
                size_t sel = nrows;
                for (size_t i = rr; i < nrows; ++i)
                    if (!sys[i][c].is_zero()) { sel = i; break; }
                if (sel == nrows) continue;
                std::swap(sys[rr], sys[sel]);
                Rational inv = Rational(1) / sys[rr][c];
                for (auto& x : sys[rr]) x *= inv;
                for (size_t i = 0; i < nrows; ++i) {
                    if (i == rr || sys[i][c].is_zero()) continue;
                    Rational f = sys[i][c];
                    for (size_t jx = 0; jx <= ncols; ++jx) sys[i][jx] -= f * sys[rr][jx];
                }
                pivots.push_back(c);
                ++rr;
            }
            for (size_t i = pivots.size(); i < nrows; ++i)
                if (!sys[i][ncols].is_zero()) return std::nullopt;
            QVec x(ncols, Rational(0));
            for (size_t kk = 0; kk < pivots.size(); ++kk) x[pivots[kk]] = sys[kk][ncols];
            Relation rel;
            rel.lead = m;
            for (size_t c = 0; c < ncols; ++c) {
                if (x[c].is_zero()) continue;
                rel.replacement.push_back(
                    {Coefficient::monomial(cols[c].second, x[c]), basis[cols[c].first]});
            }
            return rel;
        };
        auto rel = try_solve(true);
        if (!rel) rel = try_solve(false);
        if (rel) {
            relations.push_back(*rel);
        } else {
            basis.push_back(m);
            basis_vals.push_back(val);
        }
    }
    return relations;
}

} // namespace theta
