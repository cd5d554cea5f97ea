#include "theta/monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace theta {

namespace {

constexpr size_t kEnumerationGuard = 20'000'000;

// Enumerate integer points of the box [lo_k, hi_k], calling fn on each.
void for_box(const Vec& lo, const Vec& hi, const std::function<void(const Vec&)>& fn) {
    size_t d = lo.size();
    unsigned long long total = 1;
    for (size_t k = 0; k < d; ++k) {
        if (hi[k] < lo[k]) return;
        total *= (unsigned long long)(hi[k] - lo[k] + 1);
        if (total > kEnumerationGuard) throw std::runtime_error("enumeration box too large");
    }
    Vec x = lo;
    while (true) {
        fn(x);
        size_t k = 0;
        while (k < d && x[k] == hi[k]) { x[k] = lo[k]; ++k; }
        if (k == d) break;
        ++x[k];
    }
}

} // namespace

ToricMonoid::ToricMonoid(size_t r, std::vector<Vec> gens) : rank(r) {
    std::set<Vec> s;
    for (auto& g : gens) {
        if (g.size() != r) throw std::invalid_argument("monoid generator has wrong dimension");
        if (!vec_is_zero(g)) s.insert(g);
    }
    generators.assign(s.begin(), s.end());
}

Cone ToricMonoid::cone() const { return Cone(rank, generators); }

Mat ToricMonoid::group_basis() const {
    if (generators.empty()) return {};
    return lattice_basis(generators);
}

size_t ToricMonoid::group_rank() const { return group_basis().size(); }

bool ToricMonoid::is_sharp() const { return cone().pointed(); }

Vec ToricMonoid::positive_functional() const {
    Cone c = cone();
    if (!c.pointed()) throw std::runtime_error("monoid is not sharp");
    Vec phi(rank, 0);
    for (auto& n : c.normals) phi = vec_add(phi, n);
    for (auto& g : generators)
        if (dot(phi, g) <= 0) throw std::runtime_error("positive functional failed (not sharp?)");
    return phi;
}

bool ToricMonoid::sat_contains(const Vec& x) const {
    if (vec_is_zero(x)) return true;
    if (generators.empty()) return false;
    return cone().contains(x) && lattice_contains(generators, x);
}

bool ToricMonoid::contains(const Vec& x) const {
    if (vec_is_zero(x)) return true;
    if (generators.empty()) return false;
    if (!sat_contains(x)) return false;
    Vec phi = positive_functional();
    Cone c = cone();
    std::set<Vec> failed;
    std::function<bool(const Vec&)> rec = [&](const Vec& v) -> bool {
        if (vec_is_zero(v)) return true;
        if (failed.count(v)) return false;
        Int pv = dot(phi, v);
        for (auto& g : generators) {
            if (dot(phi, g) > pv) continue;
            Vec w = vec_sub(v, g);
            if (!c.contains(w)) continue;
            if (rec(w)) return true;
        }
        failed.insert(v);
        return false;
    };
    return rec(x);
}

// Caratheodory coordinate bound for {x in cone : phi(x) <= F}.
static Vec phi_box_bound(const Cone& c, const Vec& phi, Int F) {
    size_t d = c.dim;
    auto rays = c.extreme_rays();
    QVec bound(d, Rational(0));
    for (auto& r : rays) {
        Int pr = dot(phi, r);
        if (pr <= 0) throw std::runtime_error("ray with nonpositive functional");
        for (size_t k = 0; k < d; ++k)
            bound[k] += Rational(F, pr) * Rational(std::abs(r[k]));
    }
    Vec b(d, 0);
    for (size_t k = 0; k < d; ++k) b[k] = bound[k].num / bound[k].den + 1;
    return b;
}

ToricMonoid saturate(const ToricMonoid& m) {
    if (m.generators.empty()) return m;
    Cone c = m.cone();
    if (!c.pointed()) throw std::runtime_error("saturate: monoid is not sharp");
    Vec phi = m.positive_functional();
    Int F = 0;
    for (auto& g : m.generators) F = checked_add(F, dot(phi, g));
    Vec b = phi_box_bound(c, phi, F);
    Mat basis = m.group_basis();
    Vec lo(m.rank), hi(m.rank);
    for (size_t k = 0; k < m.rank; ++k) { lo[k] = -b[k]; hi[k] = b[k]; }
    std::vector<Vec> cand;
    for_box(lo, hi, [&](const Vec& x) {
        if (vec_is_zero(x)) return;
        Int p = dot(phi, x);
        if (p <= 0 || p > F) return;
        if (!c.contains(x)) return;
        if (!lattice_contains(basis, x)) return;
        cand.push_back(x);
    });
    std::sort(cand.begin(), cand.end(), [&](const Vec& x, const Vec& y) {
        Int px = dot(phi, x), py = dot(phi, y);
        if (px != py) return px < py;
        return x < y;
    });
    std::vector<Vec> hilbert;
    for (auto& p : cand) {
        bool reducible = false;
        Int pp = dot(phi, p);
        for (auto& q : cand) {
            if (dot(phi, q) >= pp) break;
            Vec r = vec_sub(p, q);
            if (c.contains(r) && lattice_contains(basis, r)) { reducible = true; break; }
        }
        if (!reducible) hilbert.push_back(p);
    }
    return ToricMonoid(m.rank, hilbert);
}

std::vector<Vec> hilbert_basis_oracle(const ToricMonoid& m) {
    // Independent route: zonotope box enumeration, membership through
    // nonnegative-span + integer-solve primitives, pairwise-subtraction filter.
    if (m.generators.empty()) return {};
    size_t d = m.rank;
    Vec lo(d, 0), hi(d, 0);
    for (auto& g : m.generators)
        for (size_t k = 0; k < d; ++k) {
            if (g[k] < 0) lo[k] = checked_add(lo[k], g[k]);
            else hi[k] = checked_add(hi[k], g[k]);
        }
    Mat cols(d, Vec(m.generators.size()));
    for (size_t j = 0; j < m.generators.size(); ++j)
        for (size_t k = 0; k < d; ++k) cols[k][j] = m.generators[j][k];
    auto member = [&](const Vec& x) {
        return in_cone_span(m.generators, x) && solve_integer(cols, x).has_value();
    };
    std::vector<Vec> cand;
    for_box(lo, hi, [&](const Vec& x) {
        if (!vec_is_zero(x) && member(x)) cand.push_back(x);
    });
    std::vector<Vec> out;
    for (auto& p : cand) {
        bool reducible = false;
        for (auto& q : cand) {
            if (q == p) continue;
            Vec r = vec_sub(p, q);
            if (vec_is_zero(r)) continue;
            if (member(r)) { reducible = true; break; }
        }
        if (!reducible) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool MonoidHom::well_defined() const {
    for (auto& g : source.generators)
        if (!target.contains(apply(g))) return false;
    return true;
}

PushoutResult fine_pushout(const MonoidHom& h1, const MonoidHom& h2) {
    if (h1.source.rank != h2.source.rank)
        throw std::invalid_argument("pushout: source mismatch");
    size_t r1 = h1.target.rank, r2 = h2.target.rank;
    Mat qbasis = h1.source.group_basis();
    size_t n = r1 + r2;
    // columns (h1(b), -h2(b)) as a rows x cols matrix
    Mat M(n, Vec(qbasis.size(), 0));
    for (size_t j = 0; j < qbasis.size(); ++j) {
        Vec a = h1.apply(qbasis[j]);
        Vec b = h2.apply(qbasis[j]);
        for (size_t i = 0; i < r1; ++i) M[i][j] = a[i];
        for (size_t i = 0; i < r2; ++i) M[r1 + i][j] = -b[i];
    }
    auto snf = smith_normal_form(M);
    for (Int dgn : snf.diag)
        if (dgn != 1) throw std::runtime_error("pushout group has torsion");
    size_t t = snf.diag.size();
    size_t m = n - t;
    Mat pfree(m, Vec(n));
    for (size_t i = 0; i < m; ++i) pfree[i] = snf.U[t + i];
    Mat proj1(m, Vec(r1)), proj2(m, Vec(r2));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < r1; ++j) proj1[i][j] = pfree[i][j];
        for (size_t j = 0; j < r2; ++j) proj2[i][j] = pfree[i][r1 + j];
    }
    std::vector<Vec> gens;
    for (auto& g : h1.target.generators) gens.push_back(mat_apply(proj1, g));
    for (auto& g : h2.target.generators) gens.push_back(mat_apply(proj2, g));
    return PushoutResult{ToricMonoid(m, gens), proj1, proj2};
}

PushoutResult fs_pushout(const MonoidHom& h1, const MonoidHom& h2) {
    PushoutResult r = fine_pushout(h1, h2);
    r.monoid = saturate(r.monoid);
    return r;
}

MonoidIdeal ideal_from_generators(const ToricMonoid& parent, std::vector<Vec> gens) {
    std::set<Vec> s;
    for (auto& g : gens) {
        if (!parent.contains(g))
            throw std::invalid_argument("ideal generator not in parent monoid");
        if (!vec_is_zero(g)) s.insert(g);
    }
    return MonoidIdeal{parent, std::vector<Vec>(s.begin(), s.end())};
}

bool ideal_membership(const MonoidIdeal& ideal, const Vec& x) {
    for (auto& g : ideal.generators)
        if (ideal.parent.contains(vec_sub(x, g))) return true;
    return false;
}

MonoidIdeal pushout_ideal(const PushoutResult& push, const MonoidIdeal& i1,
                          const MonoidIdeal& i2) {
    std::vector<Vec> gens;
    for (auto& g : i1.generators) gens.push_back(mat_apply(push.proj1, g));
    for (auto& g : i2.generators) gens.push_back(mat_apply(push.proj2, g));
    return ideal_from_generators(push.monoid, gens);
}

// Shared complement enumeration; `order` picks the generator traversal order.
static size_t complement_count(const MonoidIdeal& ideal, bool reverse_order) {
    const ToricMonoid& q = ideal.parent;
    if (ideal.generators.empty())
        throw std::runtime_error("quotient not co-Artinian (empty ideal)");
    Cone c = q.cone();
    // co-Artinian test: every extreme ray must eventually enter the ideal
    for (auto& r : c.extreme_rays()) {
        bool ok = false;
        for (auto& g : ideal.generators) {
            bool fits = true;
            for (auto& nrm : c.normals)
                if (dot(nrm, r) == 0 && dot(nrm, g) > 0) { fits = false; break; }
            if (fits) { ok = true; break; }
        }
        if (!ok) throw std::runtime_error("quotient not co-Artinian");
    }
    std::vector<Vec> gens = q.generators;
    if (reverse_order) std::reverse(gens.begin(), gens.end());
    std::set<Vec> seen;
    std::vector<Vec> frontier{Vec(q.rank, 0)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        Vec v = frontier.back();
        frontier.pop_back();
        for (auto& g : gens) {
            Vec w = vec_add(v, g);
            if (seen.count(w)) continue;
            if (ideal_membership(ideal, w)) continue;
            seen.insert(w);
            frontier.push_back(w);
            if (seen.size() > 200000)
                throw std::runtime_error("quotient complement growth bound exceeded");
        }
    }
    return seen.size();
}

size_t quotient_length(const MonoidIdeal& ideal) { return complement_count(ideal, false); }
size_t quotient_length_alt(const MonoidIdeal& ideal) { return complement_count(ideal, true); }

std::optional<size_t> quotient_length_or_infinite(const MonoidIdeal& ideal) {
    try {
        return quotient_length(ideal);
    } catch (const std::runtime_error& e) {
        if (std::string(e.what()).find("co-Artinian") != std::string::npos)
            return std::nullopt;
        throw;
    }
}

// Expresses the generators of q in coordinates of its group lattice:
// returns (k-dim coordinates of each generator) where k = group rank.
static std::vector<Vec> group_coordinates(const ToricMonoid& q, Mat& basis_out) {
    Mat basis = q.group_basis();
    basis_out = basis;
    Mat cols(q.rank, Vec(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t k = 0; k < q.rank; ++k) cols[k][j] = basis[j][k];
    std::vector<Vec> out;
    for (auto& g : q.generators) {
        auto sol = solve_integer(cols, g);
        if (!sol) throw std::runtime_error("generator outside its own group lattice?");
        out.push_back(*sol);
    }
    return out;
}

bool is_integral(const MonoidHom& theta) {
    const ToricMonoid& p = theta.source;
    const ToricMonoid& q = theta.target;
    // source must be free: independent generators that form a lattice basis of
    // the saturation
    size_t r = p.generators.size();
    Mat pg = p.generators;
    if (mat_rank(pg) != r) throw std::invalid_argument("is_integral: source not free");
    {
        auto sat = saturate(p);
        if (sat.generators != p.generators)
            throw std::invalid_argument("is_integral: source not free");
    }
    if (!theta.well_defined()) throw std::invalid_argument("is_integral: hom not well defined");
    // work inside the span of Q
    Mat qb;
    auto qcoords = group_coordinates(q, qb);
    size_t k = qb.size();
    Cone qc(k, qcoords);
    Cone sigma_q = dual_cone(qc);
    // theta^t into R^r (coordinates of sigma_P = R_{>=0}^r): row i of T is the
    // image of source generator i in span coordinates
    Mat cols(q.rank, Vec(k));
    for (size_t j = 0; j < k; ++j)
        for (size_t c = 0; c < q.rank; ++c) cols[c][j] = qb[j][c];
    Mat T(r, Vec(k));
    for (size_t i = 0; i < r; ++i) {
        auto sol = solve_integer(cols, theta.apply(p.generators[i]));
        if (!sol) throw std::invalid_argument("is_integral: image not in target group");
        T[i] = *sol;
    }
    for (auto& face : sigma_q.faces()) {
        std::vector<Vec> imgs;
        for (size_t i : face) imgs.push_back(mat_apply(T, sigma_q.gens[i]));
        std::set<size_t> supp;
        for (auto& v : imgs)
            for (size_t j = 0; j < r; ++j)
                if (v[j] != 0) supp.insert(j);
        for (size_t j : supp) {
            Vec e(r, 0);
            e[j] = 1;
            if (!in_cone_span(imgs, e)) return false;
        }
    }
    return true;
}

bool is_integral_oracle(const MonoidHom& theta, Int bound) {
    const ToricMonoid& p = theta.source;
    const ToricMonoid& q = theta.target;
    size_t r = p.generators.size();
    // enumerate source elements as coefficient vectors on the free generators
    std::vector<Vec> p_elts;
    {
        Vec lo(r, 0), hi(r, bound);
        for_box(lo, hi, [&](const Vec& cvec) {
            Vec x(p.rank, 0);
            for (size_t i = 0; i < r; ++i)
                x = vec_add(x, vec_scale(cvec[i], p.generators[i]));
            p_elts.push_back(x);
        });
    }
    // enumerate target elements up to a positivity level
    std::vector<Vec> q_elts;
    {
        Vec phi = q.positive_functional();
        Int maxphi = 0;
        for (auto& g : q.generators) maxphi = std::max(maxphi, dot(phi, g));
        Int F = checked_mul(bound, maxphi);
        std::set<Vec> seen;
        std::vector<Vec> frontier{Vec(q.rank, 0)};
        seen.insert(frontier[0]);
        while (!frontier.empty()) {
            Vec v = frontier.back();
            frontier.pop_back();
            for (auto& g : q.generators) {
                Vec w = vec_add(v, g);
                if (dot(phi, w) > F || seen.count(w)) continue;
                seen.insert(w);
                frontier.push_back(w);
            }
        }
        q_elts.assign(seen.begin(), seen.end());
    }
    auto coeffs_of = [&](const Vec& x) {
        // x as coefficients on the free generators (unique)
        Mat cols(p.rank, Vec(r));
        for (size_t j = 0; j < r; ++j)
            for (size_t c = 0; c < p.rank; ++c) cols[c][j] = p.generators[j][c];
        return *solve_integer(cols, x);
    };
    for (auto& p1 : p_elts)
        for (auto& p2 : p_elts) {
            Vec t1 = theta.apply(p1), t2 = theta.apply(p2);
            Vec c1 = coeffs_of(p1), c2 = coeffs_of(p2);
            for (auto& q1 : q_elts) {
                // The matching q2 is determined: t1 + q1 = t2 + q2.
                Vec q2 = vec_sub(vec_add(t1, q1), t2);
                if (!q.contains(q2)) continue;
                {
                    // witness search: p3 = max(p2-p1,0)+s, p4 = max(p1-p2,0)+s
                    Vec base3(r), base4(r);
                    for (size_t i = 0; i < r; ++i) {
                        base3[i] = std::max<Int>(c2[i] - c1[i], 0);
                        base4[i] = std::max<Int>(c1[i] - c2[i], 0);
                    }
                    bool found = false;
                    Vec lo(r, 0), hi(r, bound);
                    for_box(lo, hi, [&](const Vec& s) {
                        if (found) return;
                        Vec p3(p.rank, 0), p4(p.rank, 0);
                        for (size_t i = 0; i < r; ++i) {
                            p3 = vec_add(p3, vec_scale(base3[i] + s[i], p.generators[i]));
                            p4 = vec_add(p4, vec_scale(base4[i] + s[i], p.generators[i]));
                        }
                        Vec qq = vec_sub(q1, theta.apply(p3));
                        if (qq != vec_sub(q2, theta.apply(p4))) return;
                        if (q.contains(qq)) found = true;
                    });
                    if (!found) return false;
                }
            }
        }
    return true;
}

Int log_fibre_dim(const MonoidHom& theta) {
    // theta: Q -> P, induced map A_P -> A_Q; requires injectivity on groups
    Mat qb = theta.source.group_basis();
    Mat imgs;
    for (auto& b : qb) imgs.push_back(theta.apply(b));
    if (mat_rank(imgs) != qb.size())
        throw std::invalid_argument("log_fibre_dim: hom not injective on groups");
    return (Int)theta.target.group_rank() - (Int)theta.source.group_rank();
}

bool is_face(const ToricMonoid& q, const std::vector<size_t>& face) {
    Cone c = q.cone();
    std::vector<size_t> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i : sorted)
        if (i >= q.generators.size()) return false;
    std::vector<size_t> active;
    for (size_t j = 0; j < c.normals.size(); ++j) {
        bool vanish = true;
        for (size_t i : sorted)
            if (dot(c.normals[j], q.generators[i]) != 0) { vanish = false; break; }
        if (vanish) active.push_back(j);
    }
    std::vector<size_t> derived;
    for (size_t i = 0; i < q.generators.size(); ++i) {
        bool on = true;
        for (size_t j : active)
            if (dot(c.normals[j], q.generators[i]) != 0) { on = false; break; }
        if (on) derived.push_back(i);
    }
    return derived == sorted;
}

Localization localize_at_face(const ToricMonoid& q, const std::vector<size_t>& face) {
    if (!is_face(q, face))
        throw std::invalid_argument("localize_at_face: not a face");
    size_t n = q.rank;
    if (face.empty()) {
        return Localization{q, mat_identity(n)};
    }
    // quotient by the saturated span of the face
    Mat M(n, Vec(face.size()));
    for (size_t j = 0; j < face.size(); ++j)
        for (size_t k = 0; k < n; ++k) M[k][j] = q.generators[face[j]][k];
    auto snf = smith_normal_form(M);
    size_t t = snf.diag.size();
    Mat chi(n - t, Vec(n));
    for (size_t i = 0; i < n - t; ++i) chi[i] = snf.U[t + i];
    std::vector<Vec> gens;
    for (auto& g : q.generators) gens.push_back(mat_apply(chi, g));
    return Localization{ToricMonoid(n - t, gens), chi};
}

bool DvrLogData::valid() const {
    if (!is_face(q, face)) return false;
    if (u.size() != q.rank) return false;
    for (size_t i : face)
        if (dot(u, q.generators[i]) <= 0) return false;
    return true;
}

DvrMorphismReport dvr_morphism_exists(const DvrLogData& src, const DvrLogData& dst,
                                      const Mat& phi, const Mat& phi_k) {
    DvrMorphismReport rep;
    if (!src.valid() || !dst.valid()) { rep.reason = "invalid log data"; return rep; }
    // phi: Q' (dst.q) -> Q (src.q): conventions match pullback direction;
    // src is the source log scheme, so monoids map dst.q? No: data are
    // (Q,F,u) on the source DVR and (Q',F',u') on the target; the morphism
    // needs phi: Q' -> Q. Here `src` carries Q, `dst` carries Q'.
    const ToricMonoid& Q = src.q;
    const ToricMonoid& Qp = dst.q;
    for (auto& g : Qp.generators) {
        Vec img = mat_apply(phi, g);
        if (!Q.contains(img)) { rep.reason = "phi does not map Q' into Q"; return rep; }
        if (vec_is_zero(img)) { rep.reason = "phi not local"; return rep; }
    }
    Localization locQ = localize_at_face(Q, src.face);
    Localization locQp = localize_at_face(Qp, dst.face);
    // square: chi_Q . phi == phi_k . chi_Q'
    Mat lhs = mat_mul(locQ.chi, phi);
    Mat rhs = mat_mul(phi_k, locQp.chi);
    if (lhs != rhs) { rep.reason = "generization square does not commute"; return rep; }
    for (auto& g : locQp.quotient.generators) {
        Vec img = mat_apply(phi_k, g);
        if (!locQ.quotient.contains(img)) { rep.reason = "phi_k does not map stalks"; return rep; }
        if (vec_is_zero(img)) { rep.reason = "phi_k not local"; return rep; }
    }
    for (size_t i : dst.face) {
        const Vec& g = Qp.generators[i];
        if (dot(src.u, mat_apply(phi, g)) != dot(dst.u, g)) {
            rep.reason = "uniformizer valuations disagree on the face";
            return rep;
        }
    }
    rep.exists = true;
    rep.reason = "ok";
    return rep;
}

LambdaStabilityReport lambda_stability(const ToricMonoid& q, const Vec& ell_q,
                                       const Vec& delta, const Vec& ell, Int mu,
                                       Int lambda) {
    if (q.group_rank() != 2)
        throw std::invalid_argument("lambda_stability: monoid must have rank 2");
    if (!q.contains(delta)) throw std::invalid_argument("delta must lie in Q");
    // rational generation by delta and ell_q - mu*delta
    Vec kgen = vec_sub(ell_q, vec_scale(mu, delta));
    {
        Cone rational_cone(q.rank, {delta, kgen});
        Cone qcone = q.cone();
        for (auto& g : q.generators)
            if (!rational_cone.contains(g))
                throw std::invalid_argument("Q not rationally generated by delta, ell_q - mu*delta");
        if (!qcone.contains(delta) || !qcone.contains(kgen))
            throw std::invalid_argument("delta / ell_q - mu*delta not in the cone of Q");
    }
    // solve ell = a*ell_q + b*delta
    Mat m(q.rank, Vec(2));
    for (size_t k = 0; k < q.rank; ++k) { m[k][0] = ell_q[k]; m[k][1] = delta[k]; }
    if (mat_rank(m) != 2) throw std::invalid_argument("ell_q and delta are dependent");
    auto sol = solve_rational(m, ell);
    if (!sol) throw std::invalid_argument("ell is not a combination of ell_q and delta");
    LambdaStabilityReport rep;
    rep.a = (*sol)[0];
    rep.b = (*sol)[1];
    if (!(rep.a > Rational(0))) throw std::invalid_argument("coefficient a must be positive");
    // stability bound
    Rational bound = rep.a + rep.b + Rational(mu) * rep.a;
    if (Rational(lambda) < bound) throw std::runtime_error("lambda too small");
    // R = N<ell, delta>, R_lambda = N(ell - lambda*delta) + N delta
    ToricMonoid R(2, {Vec{1, 0}, Vec{0, 1}});
    ToricMonoid R_lambda(2, {Vec{1, -lambda}, Vec{0, 1}});
    Mat theta(q.rank, Vec(2));
    for (size_t k = 0; k < q.rank; ++k) { theta[k][0] = ell[k]; theta[k][1] = delta[k]; }
    MonoidHom h1{R, q, theta};
    MonoidHom h2{R, R_lambda, mat_identity(2)};
    if (!h1.well_defined()) throw std::invalid_argument("ell does not map R into Q");
    PushoutResult push = fs_pushout(h1, h2);
    // ideals
    MonoidIdeal K = ideal_from_generators(q, {delta, kgen});
    MonoidIdeal J_lambda = ideal_from_generators(R_lambda, {Vec{1, -lambda}, Vec{0, 1}});
    MonoidIdeal KJ = pushout_ideal(push, K, J_lambda);
    rep.length_q = quotient_length(K);
    rep.length_push = quotient_length(KJ);
    rep.multiplicities_equal = (rep.length_q == rep.length_push);
    // both quotients co-Artinian on sharp monoids => both reductions are a point
    rep.iso_on_reduced = true;
    rep.q_lambda = push.monoid;
    return rep;
}

} // namespace theta
