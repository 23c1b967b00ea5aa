#pragma once

#include "siegel/parabolic.hpp"
#include "siegel/rational.hpp"

namespace siegel {

// Fisher inner product <p|q>_F = p(grad) q*, conjugate-linear in q. Distinct
// monomials are orthogonal with <w^alpha|w^alpha>_F = alpha!.
inline ComplexRational fisher_inner(const BallPolynomial& p, const BallPolynomial& q) {
    if (p.n() != q.n()) throw DimensionMismatch("fisher_inner: dimension mismatch");
    ComplexRational acc;
    for (const auto& [e, cp] : p.poly().terms()) {
        ComplexRational cq = q.poly().coefficient(e);
        if (cq.is_zero()) continue;
        BigInt fact = 1;
        for (auto a : e) fact *= factorial(a);
        acc += ComplexRational(Rational(fact)) * cp * cq.conj();
    }
    return acc;
}

inline Rational fisher_norm_sq(const BallPolynomial& p) {
    ComplexRational v = fisher_inner(p, p);
    return v.re; // imaginary part is identically zero
}

// Rotation-invariant Fisher norm on the coefficient polynomials p_j in
// P_j(C^n): same monomial formula on the zeta variables alone. This is the
// fixed choice of the per-degree norms in the direct-sum seminorm.
inline Rational fisher_norm_sq_zeta(const ParabolicPolynomial& p) {
    Rational acc(0);
    for (const auto& [e, c] : p.poly().terms()) {
        if (e.back() != 0)
            throw ParameterError("fisher_norm_sq_zeta: expects a zeta-only polynomial");
        BigInt fact = 1;
        for (std::size_t j = 0; j + 1 < e.size(); ++j) fact *= factorial(e[j]);
        acc += Rational(fact) * abs_sq(c);
    }
    return acc;
}

} // namespace siegel
