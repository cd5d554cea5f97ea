#include "theta/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace theta {

Vec primitive(Vec v, bool sign_fix) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1) for (Int& x : v) x /= g;
    if (sign_fix) {
        for (Int x : v) {
            if (x > 0) break;
            if (x < 0) { for (Int& y : v) y = -y; break; }
        }
    }
    return v;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    Vec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    Mat r(n, Vec(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j)
            if (a[i][j] != 0)
                for (size_t c = 0; c < p; ++c)
                    r[i][c] = checked_add(r[i][c], checked_mul(a[i][j], b[j][c]));
    return r;
}

Mat mat_transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat r(m[0].size(), Vec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

Mat mat_identity(size_t n) {
    Mat r(n, Vec(n, 0));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

static QMat to_qmat(const Mat& m) {
    QMat q(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        q[i].reserve(m[i].size());
        for (Int x : m[i]) q[i].push_back(Rational(x));
    }
    return q;
}

// Row-reduces q in place; returns pivot columns. aug = number of trailing
// augmented columns excluded from pivoting.
static std::vector<size_t> rref(QMat& q, size_t aug = 0) {
    std::vector<size_t> pivots;
    if (q.empty()) return pivots;
    size_t rows = q.size(), cols = q[0].size() - aug;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!q[i][c].is_zero()) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(q[r], q[sel]);
        Rational inv = Rational(1) / q[r][c];
        for (auto& x : q[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || q[i][c].is_zero()) continue;
            Rational f = q[i][c];
            for (size_t j = 0; j < q[i].size(); ++j) q[i][j] -= f * q[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t mat_rank(const Mat& m) {
    QMat q = to_qmat(m);
    return rref(q).size();
}

std::optional<QVec> solve_rational(const Mat& m, const QVec& b) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    QMat q(rows);
    for (size_t i = 0; i < rows; ++i) {
        q[i].reserve(cols + 1);
        for (Int x : m[i]) q[i].push_back(Rational(x));
        q[i].push_back(b[i]);
    }
    auto pivots = rref(q, 1);
    // consistency
    for (size_t i = pivots.size(); i < rows; ++i)
        if (!q[i][cols].is_zero()) return std::nullopt;
    QVec x(cols, Rational(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = q[k][cols];
    return x;
}

std::optional<QVec> solve_rational(const Mat& m, const Vec& b) {
    QVec qb;
    qb.reserve(b.size());
    for (Int x : b) qb.push_back(Rational(x));
    return solve_rational(m, qb);
}

std::vector<Vec> null_space(const Mat& m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    if (cols == 0) return {};
    QMat q = to_qmat(m);
    auto pivots = rref(q);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        QVec x(cols, Rational(0));
        x[free_c] = Rational(1);
        for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = -q[k][free_c];
        // clear denominators
        Int lcm = 1;
        for (auto& v : x) lcm = checked_mul(lcm / std::gcd(lcm, v.den), v.den);
        Vec iv(cols);
        for (size_t j = 0; j < cols; ++j) iv[j] = checked_mul(x[j].num, lcm / x[j].den);
        basis.push_back(primitive(iv));
    }
    return basis;
}

// ---- integer lattice routines (Hermite-style row reduction) ----

// Row-reduces rows over Z in place (Hermite-ish, not normalized to HNF shape,
// but deterministic), dropping zero rows. Returns independent rows.
static Mat z_row_reduce(Mat rows) {
    size_t cols = 0;
    for (auto& r : rows) cols = std::max(cols, r.size());
    Mat out;
    size_t start = 0;
    for (size_t c = 0; c < cols; ++c) {
        // gcd-reduce column c among rows[start..]
        while (true) {
            size_t best = rows.size();
            for (size_t i = start; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() ||
                    std::abs(rows[i][c]) < std::abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[start], rows[best]);
            bool done = true;
            for (size_t i = start + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Int qq = rows[i][c] / rows[start][c];
                for (size_t j = 0; j < cols; ++j)
                    rows[i][j] = checked_add(rows[i][j], checked_mul(-qq, rows[start][j]));
                if (rows[i][c] != 0) done = false;
            }
            if (done) { ++start; break; }
        }
    }
    for (auto& r : rows) if (!vec_is_zero(r)) out.push_back(r);
    return out;
}

Mat lattice_basis(const Mat& rows) { return z_row_reduce(rows); }

bool lattice_contains(const Mat& rows, const Vec& v) {
    if (vec_is_zero(v)) return true;
    Mat basis = z_row_reduce(rows);
    // Solve sum c_i basis_i = v over Z by forward substitution on the echelon form.
    Vec rem = v;
    size_t cols = v.size();
    for (auto& b : basis) {
        size_t lead = 0;
        while (lead < cols && b[lead] == 0) ++lead;
        if (lead == cols) continue;
        if (rem[lead] % b[lead] == 0) {
            Int c = rem[lead] / b[lead];
            for (size_t j = 0; j < cols; ++j) rem[j] = checked_add(rem[j], checked_mul(-c, b[j]));
        }
        // echelon form may not be triangular in the HNF sense (entries above pivots
        // unreduced); rem[lead] not divisible => not in lattice
        if (rem[lead] != 0) return false;
    }
    return vec_is_zero(rem);
}

std::optional<Vec> solve_integer(const Mat& m, const Vec& b) {
    // Solve m x = b over Z using the Smith decomposition of m.
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    if (rows == 0) return Vec(cols, 0);
    // Work with augmented column operations: keep track of V implicitly by
    // solving via rational solution + lattice of null space. Simpler: rational
    // solution must exist; then adjust by null lattice to integrality via
    // enumeration is unsound. Use SNF directly on m.
    // SNF: U m V = D. m x = b  =>  D (V^-1 x) = U b. Solve y from D y = U b,
    // x = V y.
    // We compute both transforms with a dedicated routine below.
    struct Snf {
        Mat a, u, v;
    } s;
    s.a = m;
    s.u = mat_identity(rows);
    s.v = mat_identity(cols);
    size_t t = 0;
    auto swap_rows = [&](size_t i, size_t j) { std::swap(s.a[i], s.a[j]); std::swap(s.u[i], s.u[j]); };
    auto swap_cols = [&](size_t i, size_t j) {
        for (auto& r : s.a) std::swap(r[i], r[j]);
        for (auto& r : s.v) std::swap(r[i], r[j]);
    };
    auto addmul_row = [&](size_t dst, size_t src, Int c) {
        for (size_t j = 0; j < cols; ++j) s.a[dst][j] = checked_add(s.a[dst][j], checked_mul(c, s.a[src][j]));
        for (size_t j = 0; j < rows; ++j) s.u[dst][j] = checked_add(s.u[dst][j], checked_mul(c, s.u[src][j]));
    };
    auto addmul_col = [&](size_t dst, size_t src, Int c) {
        for (auto& r : s.a) r[dst] = checked_add(r[dst], checked_mul(c, r[src]));
        for (auto& r : s.v) r[dst] = checked_add(r[dst], checked_mul(c, r[src]));
    };
    while (t < rows && t < cols) {
        // find smallest nonzero pivot in the remaining block
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (s.a[i][j] != 0 &&
                    (pi == rows || std::abs(s.a[i][j]) < std::abs(s.a[pi][pj]))) { pi = i; pj = j; }
        if (pi == rows) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i)
            if (s.a[i][t] != 0) { addmul_row(i, t, -(s.a[i][t] / s.a[t][t])); if (s.a[i][t] != 0) clean = false; }
        for (size_t j = t + 1; j < cols; ++j)
            if (s.a[t][j] != 0) { addmul_col(j, t, -(s.a[t][j] / s.a[t][t])); if (s.a[t][j] != 0) clean = false; }
        if (clean) ++t;
    }
    Vec ub = mat_apply(s.u, b);
    Vec y(cols, 0);
    for (size_t i = 0; i < rows; ++i) {
        Int d = (i < cols) ? s.a[i][i] : 0;
        if (d != 0) {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_apply(s.v, y);
}

SmithResult smith_normal_form(const Mat& m) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    Mat a = m;
    Mat u = mat_identity(rows);
    size_t t = 0;
    auto addmul_row = [&](size_t dst, size_t src, Int c) {
        for (size_t j = 0; j < cols; ++j) a[dst][j] = checked_add(a[dst][j], checked_mul(c, a[src][j]));
        for (size_t j = 0; j < rows; ++j) u[dst][j] = checked_add(u[dst][j], checked_mul(c, u[src][j]));
    };
    Mat v = mat_identity(cols);
    auto addmul_col = [&](size_t dst, size_t src, Int c) {
        for (auto& r : a) r[dst] = checked_add(r[dst], checked_mul(c, r[src]));
        for (auto& r : v) r[dst] = checked_add(r[dst], checked_mul(c, r[src]));
    };
    while (t < rows && t < cols) {
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pi == rows || std::abs(a[i][j]) < std::abs(a[pi][pj]))) { pi = i; pj = j; }
        if (pi == rows) break;
        std::swap(a[t], a[pi]); std::swap(u[t], u[pi]);
        for (auto& r : a) std::swap(r[t], r[pj]);
        for (auto& r : v) std::swap(r[t], r[pj]);
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i)
            if (a[i][t] != 0) { addmul_row(i, t, -(a[i][t] / a[t][t])); if (a[i][t] != 0) clean = false; }
        for (size_t j = t + 1; j < cols; ++j)
            if (a[t][j] != 0) { addmul_col(j, t, -(a[t][j] / a[t][t])); if (a[t][j] != 0) clean = false; }
        if (clean) ++t;
    }
    // Note: we do not enforce the divisibility chain d1 | d2 | ...: callers only
    // need the unit/nonunit split and the free quotient coordinates.
    SmithResult res;
    for (size_t i = 0; i < t; ++i) res.diag.push_back(a[i][i] < 0 ? -a[i][i] : a[i][i]);
    res.U = u;
    return res;
}

bool in_cone_span(const std::vector<Vec>& gens, const Vec& target) {
    if (vec_is_zero(target)) return true;
    size_t d = target.size();
    // Caratheodory: target is in the cone iff it is a nonnegative combination of
    // some linearly independent subset of size <= d.
    std::vector<Vec> nz;
    for (auto& g : gens) if (!vec_is_zero(g)) nz.push_back(g);
    size_t n = nz.size();
    std::vector<size_t> idx;
    // enumerate subsets of size up to d (n is small in all call sites)
    std::vector<size_t> stack;
    // iterative subset enumeration
    std::function<bool(size_t)> rec = [&](size_t start) -> bool {
        if (!stack.empty()) {
            // build matrix with chosen gens as columns
            Mat m(d, Vec(stack.size()));
            for (size_t c = 0; c < stack.size(); ++c)
                for (size_t r = 0; r < d; ++r) m[r][c] = nz[stack[c]][r];
            auto sol = solve_rational(m, target);
            if (sol) {
                bool ok = true;
                for (auto& x : *sol) if (x < Rational(0)) { ok = false; break; }
                if (ok) return true;
            }
        }
        if (stack.size() == std::min(n, d)) return false;
        for (size_t i = start; i < n; ++i) {
            stack.push_back(i);
            if (rec(i + 1)) return true;
            stack.pop_back();
        }
        return false;
    };
    return rec(0);
}

} // namespace theta
