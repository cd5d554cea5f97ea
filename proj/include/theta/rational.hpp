#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace theta {

using Int = long long;

inline Int checked_mul(Int a, Int b) {
    __int128 r = (__int128)a * b;
    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("integer overflow in mul");
    return (Int)r;
}

inline Int checked_add(Int a, Int b) {
    __int128 r = (__int128)a + b;
    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("integer overflow in add");
    return (Int)r;
}

// Exact rational on int64, always normalized with positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    Rational() = default;
    Rational(Int n) : num(n), den(1) {}
    Rational(Int n, Int d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        Int g = std::gcd(a.den, b.den);
        Int ad = a.den / g, bd = b.den / g;
        return Rational(checked_add(checked_mul(a.num, bd), checked_mul(b.num, ad)),
                        checked_mul(a.den, bd));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num, b.den); }
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        Int g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        Int g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational(checked_mul(a.num / g1, b.num / g2),
                        checked_mul(a.den / g2, b.den / g1));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return a * Rational(b.den, b.num);
    }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // Parses "n" or "n/d".
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
};

} // namespace theta
