#include "theta/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace theta {

namespace {

// Enumerate subsets of {0..n-1} of size k, calling fn(indices).
template <typename F>
void for_subsets(size_t n, size_t k, F&& fn) {
    std::vector<size_t> idx(k);
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t pos) {
        if (pos == k) { fn(idx); return; }
        for (size_t i = start; i + (k - pos) <= n; ++i) {
            idx[pos] = i;
            rec(i + 1, pos + 1);
        }
    };
    rec(0, 0);
}

} // namespace

Cone::Cone(size_t d, std::vector<Vec> g) : dim(d) {
    for (auto& v : g) {
        if (v.size() != d) throw std::invalid_argument("cone generator has wrong dimension");
        if (!vec_is_zero(v)) gens.push_back(v);
    }
    // span equations
    equations = null_space(gens.empty() ? Mat{Vec(dim, 0)} : gens);
    size_t d_c = cone_dim();
    // facet normal candidates: primitive n with n in span(gens), vanishing on a
    // rank (d_c - 1) subset of generators, one-signed on all generators.
    std::set<Vec> seen;
    if (d_c >= 1) {
        size_t want = d_c - 1;
        for_subsets(gens.size(), want, [&](const std::vector<size_t>& idx) {
            Mat rows;
            for (size_t i : idx) rows.push_back(gens[i]);
            for (auto& e : equations) rows.push_back(e);
            if (rows.empty()) rows.push_back(Vec(dim, 0));
            auto ns = null_space(rows);
            if (ns.size() != 1) return;
            Vec n = primitive(ns[0]);
            bool pos = true, neg = true;
            for (auto& g : gens) {
                Int s = dot(n, g);
                if (s < 0) pos = false;
                if (s > 0) neg = false;
            }
            if (!pos && !neg) return;
            if (neg && !pos) n = vec_neg(n);
            if (pos && neg) return; // vanishes identically: not a facet
            if (seen.insert(n).second) normals.push_back(n);
        });
    }
    std::sort(normals.begin(), normals.end());
}

size_t Cone::cone_dim() const { return dim - equations.size(); }

bool Cone::contains(const Vec& x) const {
    for (auto& e : equations) if (dot(e, x) != 0) return false;
    for (auto& n : normals) if (dot(n, x) < 0) return false;
    // For non-pointed cones the facet description is still complete: the cone is
    // the intersection of its span with the facet half-spaces.
    return true;
}

bool Cone::contains(const QVec& x) const {
    auto qdot = [&](const Vec& a) {
        Rational s(0);
        for (size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * x[i];
        return s;
    };
    for (auto& e : equations) if (!qdot(e).is_zero()) return false;
    for (auto& n : normals) if (qdot(n) < Rational(0)) return false;
    return true;
}

bool Cone::pointed() const {
    // lineality = {x in span : all normals vanish}
    Mat rows = normals;
    for (auto& e : equations) rows.push_back(e);
    if (rows.empty()) rows.push_back(Vec(dim, 0));
    return null_space(rows).empty();
}

std::vector<Vec> Cone::extreme_rays() const {
    std::vector<Vec> rays;
    std::set<Vec> seen;
    size_t d_c = cone_dim();
    if (d_c == 0) return rays;
    for (auto& g : gens) {
        Mat rows;
        for (auto& n : normals)
            if (dot(n, g) == 0) rows.push_back(n);
        for (auto& e : equations) rows.push_back(e);
        if (rows.empty()) rows.push_back(Vec(dim, 0));
        if (null_space(rows).size() == 1) {
            Vec p = primitive(g);
            if (seen.insert(p).second) rays.push_back(p);
        }
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

std::vector<std::vector<size_t>> Cone::faces() const {
    std::set<std::vector<size_t>> out;
    size_t m = normals.size();
    if (m > 20) throw std::runtime_error("too many facets for face enumeration");
    for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
        std::vector<size_t> face;
        for (size_t i = 0; i < gens.size(); ++i) {
            bool on = true;
            for (size_t j = 0; j < m; ++j)
                if ((mask >> j) & 1)
                    if (dot(normals[j], gens[i]) != 0) { on = false; break; }
            if (on) face.push_back(i);
        }
        out.insert(face);
    }
    return std::vector<std::vector<size_t>>(out.begin(), out.end());
}

Cone Cone::subcone(const std::vector<size_t>& idx) const {
    std::vector<Vec> g;
    for (size_t i : idx) g.push_back(gens[i]);
    return Cone(dim, g);
}

std::vector<size_t> Cone::minimal_face_containing(const std::vector<Vec>& pts) const {
    std::vector<size_t> face;
    std::vector<size_t> active; // normals vanishing on all pts
    for (size_t j = 0; j < normals.size(); ++j) {
        bool vanish = true;
        for (auto& p : pts)
            if (dot(normals[j], p) != 0) { vanish = false; break; }
        if (vanish) active.push_back(j);
    }
    for (size_t i = 0; i < gens.size(); ++i) {
        bool on = true;
        for (size_t j : active)
            if (dot(normals[j], gens[i]) != 0) { on = false; break; }
        if (on) face.push_back(i);
    }
    return face;
}

Cone dual_cone(const Cone& c) {
    return cone_from_inequalities(c.dim, c.gens, {});
}

Cone cone_from_inequalities(size_t dim, const std::vector<Vec>& ineqs,
                            const std::vector<Vec>& eqs) {
    // restrict to the subspace cut out by eqs
    Mat eqrows = eqs;
    if (eqrows.empty()) eqrows.push_back(Vec(dim, 0));
    auto basis = null_space(eqrows); // columns of the embedding, as rows here
    size_t k = basis.size();
    if (k == 0) return Cone(dim, {});
    // inequalities in subspace coordinates
    Mat A;
    for (auto& a : ineqs) {
        Vec row(k);
        for (size_t j = 0; j < k; ++j) row[j] = dot(a, basis[j]);
        A.push_back(row);
    }
    // lineality must be trivial (all call sites produce pointed cones)
    {
        Mat rows = A;
        if (rows.empty()) rows.push_back(Vec(k, 0));
        if (!null_space(rows).empty())
            throw std::runtime_error("cone_from_inequalities: non-pointed cone");
    }
    std::set<Vec> rayset;
    auto feasible = [&](const Vec& y) {
        for (auto& row : A) if (dot(row, y) < 0) return false;
        return true;
    };
    if (k == 1) {
        Vec y{1};
        if (feasible(y)) rayset.insert(y);
        Vec ny{-1};
        if (feasible(ny)) rayset.insert(ny);
    } else {
        for_subsets(A.size(), k - 1, [&](const std::vector<size_t>& idx) {
            Mat rows;
            for (size_t i : idx) rows.push_back(A[i]);
            auto ns = null_space(rows);
            if (ns.size() != 1) return;
            Vec y = primitive(ns[0]);
            if (feasible(y)) rayset.insert(y);
            else {
                Vec yn = vec_neg(y);
                if (feasible(yn)) rayset.insert(yn);
            }
        });
    }
    std::vector<Vec> gens;
    for (auto& y : rayset) {
        Vec x(dim, 0);
        for (size_t j = 0; j < k; ++j)
            for (size_t c = 0; c < dim; ++c)
                x[c] = checked_add(x[c], checked_mul(y[j], basis[j][c]));
        gens.push_back(primitive(x));
    }
    return Cone(dim, gens);
}

Cone ConeMap::image() const {
    std::vector<Vec> g;
    for (auto& v : src.gens) g.push_back(apply(v));
    return Cone(dst_dim, g);
}

ConeFibreProduct cone_fibre_product(const ConeMap& f1, const ConeMap& f2) {
    size_t d1 = f1.src.dim, d2 = f2.src.dim;
    size_t m = f1.dst_dim;
    if (f2.dst_dim != m) throw std::invalid_argument("fibre product: target mismatch");
    size_t D = d1 + d2;
    std::vector<Vec> ineqs, eqs;
    auto pad1 = [&](const Vec& v) { Vec r(D, 0); std::copy(v.begin(), v.end(), r.begin()); return r; };
    auto pad2 = [&](const Vec& v) { Vec r(D, 0); std::copy(v.begin(), v.end(), r.begin() + d1); return r; };
    for (auto& n : f1.src.normals) ineqs.push_back(pad1(n));
    for (auto& n : f2.src.normals) ineqs.push_back(pad2(n));
    for (auto& e : f1.src.equations) eqs.push_back(pad1(e));
    for (auto& e : f2.src.equations) eqs.push_back(pad2(e));
    for (size_t r = 0; r < m; ++r) {
        Vec row(D, 0);
        for (size_t j = 0; j < d1; ++j) row[j] = f1.matrix[r][j];
        for (size_t j = 0; j < d2; ++j) row[d1 + j] = -f2.matrix[r][j];
        eqs.push_back(row);
    }
    ConeFibreProduct fp;
    fp.total = cone_from_inequalities(D, ineqs, eqs);
    Mat m1(d1, Vec(D, 0)), m2(d2, Vec(D, 0));
    for (size_t i = 0; i < d1; ++i) m1[i][i] = 1;
    for (size_t i = 0; i < d2; ++i) m2[i][d1 + i] = 1;
    fp.p1 = ConeMap{fp.total, d1, m1};
    fp.p2 = ConeMap{fp.total, d2, m2};
    return fp;
}

bool face_surjection_check(const ConeMap& f, const Cone& target) {
    for (auto& face : f.src.faces()) {
        std::vector<Vec> imgs;
        for (size_t i : face) imgs.push_back(f.apply(f.src.gens[i]));
        for (auto& v : imgs)
            if (!target.contains(v)) return false;
        auto tf = target.minimal_face_containing(imgs);
        for (size_t i : tf) {
            if (!in_cone_span(imgs, target.gens[i])) return false;
        }
    }
    return true;
}

bool transverse_hypothesis(const ConeMap& f1, const ConeMap& f2) {
    const Cone& s1 = f1.src;
    Mat f1t = mat_transpose(f1.matrix);
    for (auto& face2 : f2.src.faces()) {
        std::vector<Vec> imgs;
        for (size_t i : face2) imgs.push_back(f2.apply(f2.src.gens[i]));
        Cone v(f2.dst_dim, imgs);
        // preimage f1^{-1}(v) within s1
        std::vector<Vec> ineqs = s1.normals;
        std::vector<Vec> eqs = s1.equations;
        for (auto& n : v.normals) ineqs.push_back(mat_apply(f1t, n));
        for (auto& e : v.equations) eqs.push_back(mat_apply(f1t, e));
        Cone pre = cone_from_inequalities(s1.dim, ineqs, eqs);
        auto mf = s1.minimal_face_containing(pre.gens);
        for (size_t i : mf) {
            if (!pre.contains(s1.gens[i])) return false;
        }
    }
    return true;
}

} // namespace theta
