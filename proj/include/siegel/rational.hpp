#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <optional>
#include <string>

#include "siegel/errors.hpp"

namespace siegel {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_of(long num, long den = 1) { return Rational(num, den); }

// Exact complex number with rational real and imaginary parts. The polynomial
// algebra keeps everything in this field; geometry uses std::complex<double>.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() : re(0), im(0) {}
    ComplexRational(Rational r) : re(std::move(r)), im(0) {}
    ComplexRational(long r) : re(r), im(0) {}
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexRational unit_i() { return ComplexRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ComplexRational conj() const { return {re, Rational(-im)}; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {Rational(a.re + b.re), Rational(a.im + b.im)};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {Rational(a.re - b.re), Rational(a.im - b.im)};
    }
    friend ComplexRational operator-(const ComplexRational& a) {
        return {Rational(-a.re), Rational(-a.im)};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re)};
    }
    friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw ParameterError("ComplexRational: division by zero");
        return {Rational((a.re * b.re + a.im * b.im) / n), Rational((a.im * b.re - a.re * b.im) / n)};
    }
    ComplexRational& operator+=(const ComplexRational& b) { *this = *this + b; return *this; }
    ComplexRational& operator-=(const ComplexRational& b) { *this = *this - b; return *this; }
    ComplexRational& operator*=(const ComplexRational& b) { *this = *this * b; return *this; }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

inline Rational abs_sq(const ComplexRational& a) { return Rational(a.re * a.re + a.im * a.im); }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned j = 2; j <= n; ++j) f *= j;
    return f;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw ParameterError("pow_rational: 0 to negative power");
        return Rational(0);
    }
    Rational b = e < 0 ? Rational(1) / base : base;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline ComplexRational pow_crational(const ComplexRational& base, unsigned long e) {
    ComplexRational acc(Rational(1));
    ComplexRational b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

// Exact k-th root of a nonnegative integer, if it is a perfect power.
inline std::optional<BigInt> exact_int_root(const BigInt& a, unsigned k) {
    if (a < 0) return std::nullopt;
    if (a == 0 || a == 1 || k == 1) return a;
    BigInt lo = 0, hi = a;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        BigInt p = 1;
        bool over = false;
        for (unsigned j = 0; j < k; ++j) {
            p *= mid;
            if (p > a) { over = true; break; }
        }
        if (over) hi = mid - 1; else lo = mid;
    }
    BigInt p = 1;
    for (unsigned j = 0; j < k; ++j) p *= lo;
    if (p == a) return lo;
    return std::nullopt;
}

// base^e as an exact rational, when representable (base > 0, or integer e).
// Needed for the dilation weight R^{-s} of the exact group action.
inline std::optional<Rational> exact_pow(const Rational& base, const Rational& e) {
    BigInt p = numerator(e), q = denominator(e); // q > 0
    if (base == 1 || p == 0) return Rational(1);
    if (base == 0) return p > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    if (base < 0 && q != 1) return std::nullopt;
    // root first, then integer power
    Rational root = base;
    if (q != 1) {
        auto rn = exact_int_root(numerator(base), static_cast<unsigned>(q));
        auto rd = exact_int_root(denominator(base), static_cast<unsigned>(q));
        if (!rn || !rd) return std::nullopt;
        root = Rational(*rn, *rd);
    }
    if (p < -static_cast<long>(1e9) || p > static_cast<long>(1e9))
        return std::nullopt;
    return pow_rational(root, p.convert_to<long>());
}

inline std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p/q" or plain integers. Throws ParameterError on malformed input.
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParameterError("rational_from_string: zero denominator");
        return Rational(num, den);
    } catch (const std::exception& ex) {
        throw ParameterError(std::string("rational_from_string: cannot parse '") + s + "'");
    }
}

} // namespace siegel
