#pragma once

#include <optional>
#include <vector>

#include "theta/rational.hpp"

namespace theta {

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>; // row-major
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}
inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], -b[i]);
    return r;
}
inline Vec vec_scale(Int c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
    return r;
}
inline Vec vec_neg(const Vec& a) { return vec_scale(-1, a); }
inline bool vec_is_zero(const Vec& a) {
    for (Int x : a) if (x != 0) return false;
    return true;
}
inline Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}
// Divides out the gcd of the entries; first nonzero entry made positive when sign_fix.
Vec primitive(Vec v, bool sign_fix = false);

// Matrix as linear map: rows x cols, (mat_apply)(v) for v of length cols.
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& m);
Mat mat_identity(size_t n);

// Rank over Q via fraction-free elimination.
size_t mat_rank(const Mat& m);

// Solves m * x = b over Q; returns one solution or nullopt if inconsistent.
std::optional<QVec> solve_rational(const Mat& m, const QVec& b);
std::optional<QVec> solve_rational(const Mat& m, const Vec& b);

// Basis of the rational null space {x : m x = 0}, cleared to primitive integer vectors.
std::vector<Vec> null_space(const Mat& m);

// Solves m * x = b over Z (m integer, b integer); nullopt if no integral solution.
std::optional<Vec> solve_integer(const Mat& m, const Vec& b);

// Lattice spanned by the given vectors (as rows): returns a row basis
// (Hermite-style, deterministic).
Mat lattice_basis(const Mat& rows);

// Membership of v in the lattice spanned by rows.
bool lattice_contains(const Mat& rows, const Vec& v);

// Integer diagonalization: returns the nonzero diagonal entries of U*m*V = D
// and the left transform U. The entries are NOT reduced to the divisibility
// chain of the Smith form; callers rely only on the unit/nonunit split and on
// the rank (torsion detection, unimodularity tests).
struct SmithResult {
    std::vector<Int> diag; // nonzero invariant factors
    Mat U;                 // unimodular, rows give coordinates: (U*m) has the diagonal in the first rows
};
SmithResult smith_normal_form(const Mat& m);

// Nonnegative rational solution of sum x_i cols_i = b with all x_i >= 0
// (exact; Caratheodory enumeration, intended for small dimensions).
bool in_cone_span(const std::vector<Vec>& gens, const Vec& target);

} // namespace theta
