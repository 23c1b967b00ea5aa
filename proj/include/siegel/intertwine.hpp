#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "siegel/act_poly.hpp"
#include "siegel/calculus.hpp"
#include "siegel/parabolic.hpp"
#include "siegel/rational.hpp"

namespace siegel {

// d_2^k as an exact operator on polynomials; numeric_d2k (calculus.hpp)
// covers evaluables via Cauchy circles of radius min(rho(p)/2, 1).
struct DerivativeOperator {
    unsigned k = 1;
    ParabolicPolynomial operator()(const ParabolicPolynomial& p) const { return p.dz(k); }
};

// Symbolic check of U_{s+2k}(a) d_2^k P = d_2^k (U_s(a) P): both sides are
// computed exactly and compared as polynomials. The weights R^{-s} and
// R^{-(s+2k)} must both be exact rationals (ExactnessError otherwise); when
// R = 1 the check is independent of s altogether. The ExactAction overload
// reuses one substitution cache across a sweep.
inline bool check_affine_intertwine(ExactAction& action, const Rational& s, unsigned k,
                                    const ParabolicPolynomial& p) {
    ParabolicPolynomial lhs = action.apply(p.dz(k), Rational(s + 2 * static_cast<long>(k)));
    ParabolicPolynomial rhs = action.apply(p, s).dz(k);
    return lhs == rhs;
}

inline bool check_affine_intertwine(const ExactAffine& a, const Rational& s, unsigned k,
                                    const ParabolicPolynomial& p) {
    ExactAction action(a);
    return check_affine_intertwine(action, s, k, p);
}

// Laurent polynomial in one variable with exact coefficients; just enough
// algebra for the n = 0 inversion intertwining, where the fixed lift
//   U~_{s'}(iota) z^h = (-1)^h z^{-s'-h}
// leaves the polynomial ring.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long e, ComplexRational c) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[e] = std::move(c);
        return p;
    }

    const std::map<long, ComplexRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly derivative(unsigned order = 1) const {
        LaurentPoly out = *this;
        for (unsigned j = 0; j < order; ++j) {
            LaurentPoly next;
            for (const auto& [e, c] : out.terms_) {
                if (e == 0) continue;
                ComplexRational nc = ComplexRational(Rational(e)) * c;
                if (!nc.is_zero()) next.terms_[e - 1] = nc;
            }
            out = std::move(next);
        }
        return out;
    }

    // f(z) -> z^{-sp} f(-1/z), integer sp (the fixed iota lift at weight sp).
    LaurentPoly iota_lift(long sp) const {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) {
            ComplexRational nc = (e % 2 == 0) ? c : -c; // (-1)^e
            long ne = -sp - e;
            auto it = out.terms_.find(ne);
            if (it == out.terms_.end())
                out.terms_[ne] = nc;
            else {
                it->second += nc;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
        return out;
    }

    friend LaurentPoly operator*(const ComplexRational& c, const LaurentPoly& p) {
        LaurentPoly out;
        if (c.is_zero()) return out;
        for (const auto& [e, t] : p.terms_) out.terms_[e] = c * t;
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [e, c] : b.terms_) {
            auto it = out.terms_.find(e);
            if (it == out.terms_.end())
                out.terms_[e] = -c;
            else {
                it->second -= c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
        return out;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<long, ComplexRational> terms_;
};

struct InversionIntertwineReport {
    bool consistent = true;
    ComplexRational constant;          // c(s): LHS = c(s) * RHS for all h
    std::vector<long> failing_h;
    std::vector<std::pair<long, bool>> per_h; // (h, exact equality after factoring)
};

// n = 0: [U~_s(iota) z^h]^{(1-s)} = c(s) U~_{2-s}(iota) [z^h]^{(1-s)} for all
// h <= h_max, with a single constant c(s) per s (lift-dependent; the shipped
// lift gives c(s) = 1). Exact rational arithmetic throughout.
inline InversionIntertwineReport check_inversion_intertwine(long s, long h_max) {
    if (s > 0) throw ParameterError("check_inversion_intertwine: requires s <= 0 integer");
    InversionIntertwineReport rep;
    const unsigned order = static_cast<unsigned>(1 - s);
    bool have_constant = false;
    for (long h = 0; h <= h_max; ++h) {
        LaurentPoly zh = LaurentPoly::monomial(h, ComplexRational(Rational(1)));
        LaurentPoly lhs = zh.iota_lift(s).derivative(order);
        LaurentPoly rhs = zh.derivative(order).iota_lift(2 - s);
        bool lz = lhs.is_zero(), rz = rhs.is_zero();
        if (lz != rz) {
            rep.consistent = false;
            rep.failing_h.push_back(h);
            rep.per_h.emplace_back(h, false);
            continue;
        }
        if (lz) {
            rep.per_h.emplace_back(h, true);
            continue;
        }
        if (!have_constant) {
            // both sides are single monomials z^{-h-1}; read c(s) off the first
            const auto& [el, cl] = *lhs.terms().begin();
            const auto& [er, cr] = *rhs.terms().begin();
            if (el != er || lhs.terms().size() != 1 || rhs.terms().size() != 1) {
                rep.consistent = false;
                rep.failing_h.push_back(h);
                rep.per_h.emplace_back(h, false);
                continue;
            }
            rep.constant = cl / cr;
            have_constant = true;
        }
        bool ok = (lhs - rep.constant * rhs).is_zero();
        if (!ok) {
            rep.consistent = false;
            rep.failing_h.push_back(h);
        }
        rep.per_h.emplace_back(h, ok);
    }
    return rep;
}

// Polynomial in the weight parameter s with rational coefficients; the
// symbolic carrier for the derivative-kernel constant.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }
    static RationalPolynomial constant(Rational c) { return RationalPolynomial({std::move(c)}); }
    // the linear factor (c0 + c1 s)
    static RationalPolynomial linear(Rational c0, Rational c1) {
        return RationalPolynomial({std::move(c0), std::move(c1)});
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& s) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
        return acc;
    }
    double eval(double s) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + to_double(*it);
        return acc;
    }

    // substitute s -> s + shift
    RationalPolynomial shifted(const Rational& shift) const {
        RationalPolynomial acc;
        RationalPolynomial base = linear(shift, Rational(1));
        RationalPolynomial power = constant(Rational(1));
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            acc = acc + constant(coeffs_[j]) * power;
            power = power * base;
        }
        return acc;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t j = 0; j < a.coeffs_.size(); ++j) c[j] += a.coeffs_[j];
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[j] += b.coeffs_[j];
        return RationalPolynomial(std::move(c));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPolynomial(std::move(c));
    }
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// gamma(s,k) with (d_2^k tensor conj(d_2)^k) B^{-s} = gamma(s,k) B^{-s-2k},
// derived by symbolically differentiating the kernel family: every d_2 in the
// first slot multiplies by (-s-j)/(2i) and shifts the exponent, every
// conjugate-slot derivative by -(-s-k-j)/(2i)... the two (2i)-factors per
// derivative pair multiply to 1/4, leaving an exact polynomial in s:
//   gamma(s,k) = 4^{-k} prod_{j=0}^{2k-1} (s+j).
// Derived, not transcribed: factor strings for this constant are easy to
// miscount by one, so the differentiation loop below is the authority and
// the numeric cross-check pins it at random pairs.
inline RationalPolynomial derivative_kernel_coefficient_poly(unsigned k) {
    RationalPolynomial acc = RationalPolynomial::constant(Rational(1));
    Rational quarter(1, 4);
    // first-slot derivatives: exponent -s - j, factor (-s-j) * (1/(2i));
    // conjugate-slot derivatives: factor (-s-k-j) * (-1/(2i)). Pairing the
    // 1/(2i) with -1/(2i) gives +1/4 per derivative order.
    for (unsigned j = 0; j < k; ++j)
        acc = acc * RationalPolynomial::linear(Rational(-static_cast<long>(j)), Rational(-1));
    for (unsigned j = 0; j < k; ++j)
        acc = acc * RationalPolynomial::linear(Rational(-static_cast<long>(k + j)), Rational(-1));
    for (unsigned j = 0; j < k; ++j) acc = acc * RationalPolynomial::constant(quarter);
    return acc;
}

inline double derivative_kernel_coefficient(double s, unsigned k) {
    return derivative_kernel_coefficient_poly(k).eval(s);
}

} // namespace siegel
