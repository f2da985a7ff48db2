#ifndef EISQ_RATIONAL_HPP
#define EISQ_RATIONAL_HPP

#include <cstdint>
#include <numeric>

#include "eisq/error.hpp"

namespace eisq {

// Small exact fraction type backing the exact-arithmetic omega identities.
// Intermediates go through __int128; overflow raises an error instead of
// wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) fail("domain", "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return double(num) / double(den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(__int128(a.num) * b.den + __int128(b.num) * a.den,
                    __int128(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(__int128(a.num) * b.den - __int128(b.num) * a.den,
                    __int128(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(__int128(a.num) * b.num, __int128(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) fail("domain", "rational division by zero");
        return make(__int128(a.num) * b.den, __int128(a.den) * b.num);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

private:
    static Rational make(__int128 n, __int128 d) {
        if (d == 0) fail("domain", "rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        // gcd reduce in 128 bits before range checking
        __int128 x = an, y = d;
        while (y) { __int128 t = x % y; x = y; y = t; }
        if (x > 1) { n /= x; d /= x; }
        constexpr __int128 lim = __int128(INT64_MAX);
        if (n > lim || n < -lim || d > lim) fail("overflow", "rational overflow");
        Rational r;
        r.num = std::int64_t(n);
        r.den = std::int64_t(d);
        return r;
    }
};

} // namespace eisq

#endif
