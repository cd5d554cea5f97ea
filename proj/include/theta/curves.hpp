#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/linalg.hpp"
#include "theta/rational.hpp"

namespace theta {

// Numerical curve-class data: pairings of the divisor labels with a basis of
// the curve class group, the first-Chern pairing, and positivity flags.
enum class C1Flag { Nef, AntiNef, LogCalabiYau };

struct CurveClassData {
    size_t n = 0;                                // rank of the class group
    std::vector<std::string> divisors;           // labels, fixed order
    std::map<std::string, Vec> pairing_rows;     // label -> (D . A_j)_j
    Vec c1;                                      // (c1 . A_j)_j
    C1Flag flag = C1Flag::LogCalabiYau;
    std::map<std::string, Rational> logcy_coeffs; // a_label when flag == LogCalabiYau

    Int c1_pairing(const Vec& a_class) const { return dot(c1, a_class); }
    Int divisor_pairing(const std::string& label, const Vec& a_class) const {
        return dot(pairing_rows.at(label), a_class);
    }
    // For the log Calabi-Yau flag: c1 must equal -sum a_label * row_label with
    // the stored nonnegative coefficients. Throws on inconsistency.
    void validate() const;
};

// Monoid of effective curve classes inside Z^n, with a strictly positive
// integral functional phi used to grade enumerations.
struct ClassMonoid {
    size_t n = 0;
    std::vector<Vec> generators;
    Vec phi;
    void validate() const; // phi strictly positive on every generator

    Int grade(const Vec& a_class) const { return dot(phi, a_class); }
};

// Co-Artinian monomial ideal: either explicit generators, or the threshold
// ideal {A : phi(A) >= k}.
struct CoArtinianIdeal {
    std::vector<Vec> generators;   // used when threshold is empty
    std::optional<Int> threshold;  // k for the phi-threshold form
};

// Monoid elements outside the ideal, sorted by (phi, lex). Throws if the
// complement grows past the safety cap (ideal not co-Artinian).
std::vector<Vec> complement(const ClassMonoid& p, const CoArtinianIdeal& ideal);

bool ideal_contains(const ClassMonoid& p, const CoArtinianIdeal& ideal, const Vec& a_class);
bool monoid_contains(const ClassMonoid& p, const Vec& a_class);

// Element of the truncated coefficient ring S_I = Q[P]/I: a finite map from
// classes (in the complement of I) to rationals.
struct Coefficient {
    std::map<Vec, Rational> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        return a.terms == b.terms;
    }
    void add_term(const Vec& a_class, const Rational& c);
    static Coefficient unit(size_t n) { return monomial(Vec(n, 0), Rational(1)); }
    static Coefficient monomial(Vec a_class, Rational c);
    std::string str(bool with_t = true) const;
};

Coefficient coef_add(const Coefficient& x, const Coefficient& y);
Coefficient coef_neg(const Coefficient& x);
Coefficient coef_scale(const Rational& c, const Coefficient& x);
// Product truncated into the ideal.
Coefficient coef_mul(const ClassMonoid& p, const CoArtinianIdeal& ideal,
                     const Coefficient& x, const Coefficient& y);
Coefficient coef_truncate(const ClassMonoid& p, const CoArtinianIdeal& ideal,
                          const Coefficient& x);

} // namespace theta
