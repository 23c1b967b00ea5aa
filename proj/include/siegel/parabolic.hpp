#pragma once

#include <utility>
#include <vector>

#include "siegel/points.hpp"
#include "siegel/polynomial.hpp"

namespace siegel {

// Holomorphic polynomial on C^n x C in the variables (zeta_1..zeta_n, z),
// graded by the parabolic degree |alpha| + 2m (deg zeta_i = 1, deg z = 2,
// matching the dilations R.(zeta, z) = (R zeta, R^2 z)).
class ParabolicPolynomial {
  public:
    explicit ParabolicPolynomial(int n = 0) : n_(n), poly_(n + 1) {}
    ParabolicPolynomial(int n, ExactPoly p) : n_(n), poly_(std::move(p)) {
        if (poly_.nvars() != n + 1)
            throw DimensionMismatch("ParabolicPolynomial: expects n+1 variables");
    }

    static ParabolicPolynomial constant(int n, ComplexRational c) {
        return {n, ExactPoly::constant(n + 1, std::move(c))};
    }
    static ParabolicPolynomial zeta(int n, int j) {
        return {n, ExactPoly::variable(n + 1, j)};
    }
    static ParabolicPolynomial z(int n) { return {n, ExactPoly::variable(n + 1, n)}; }
    // zeta^alpha z^m
    static ParabolicPolynomial monomial(int n, Exponents alpha, std::uint32_t m,
                                        ComplexRational c = ComplexRational(Rational(1))) {
        if (static_cast<int>(alpha.size()) != n)
            throw DimensionMismatch("ParabolicPolynomial::monomial: |alpha| arity");
        Exponents e = std::move(alpha);
        e.push_back(m);
        return {n, ExactPoly::monomial(n + 1, std::move(e), std::move(c))};
    }

    int n() const { return n_; }
    const ExactPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    static long zeta_degree_of(const Exponents& e) {
        long d = 0;
        for (std::size_t j = 0; j + 1 < e.size(); ++j) d += e[j];
        return d;
    }
    static long parabolic_degree_of(const Exponents& e) {
        return zeta_degree_of(e) + 2L * e.back();
    }

    long parabolic_degree() const {
        long best = -1;
        for (const auto& [e, c] : poly_.terms())
            best = std::max(best, parabolic_degree_of(e));
        return best;
    }

    ParabolicPolynomial dz(unsigned order = 1) const {
        return {n_, poly_.derivative(n_, order)};
    }

    Complex eval(const SiegelPoint& p) const {
        std::vector<Complex> xs(p.zeta());
        xs.push_back(p.z());
        return poly_.eval(xs);
    }

    friend ParabolicPolynomial operator+(const ParabolicPolynomial& a, const ParabolicPolynomial& b) {
        return {a.n_, a.poly_ + b.poly_};
    }
    friend ParabolicPolynomial operator-(const ParabolicPolynomial& a, const ParabolicPolynomial& b) {
        return {a.n_, a.poly_ - b.poly_};
    }
    friend ParabolicPolynomial operator*(const ParabolicPolynomial& a, const ParabolicPolynomial& b) {
        return {a.n_, a.poly_ * b.poly_};
    }
    friend ParabolicPolynomial operator*(const ComplexRational& c, const ParabolicPolynomial& a) {
        return {a.n_, c * a.poly_};
    }
    friend bool operator==(const ParabolicPolynomial& a, const ParabolicPolynomial& b) {
        return a.n_ == b.n_ && a.poly_ == b.poly_;
    }

  private:
    int n_;
    ExactPoly poly_;
};

// P = sum_k P_k with P_k parabolically homogeneous of degree k; exact,
// returned in increasing degree, zero parts omitted.
inline std::vector<std::pair<long, ParabolicPolynomial>> homogeneous_parts(
    const ParabolicPolynomial& p) {
    std::map<long, ExactPoly> parts;
    for (const auto& [e, c] : p.poly().terms()) {
        long d = ParabolicPolynomial::parabolic_degree_of(e);
        auto [it, fresh] = parts.try_emplace(d, ExactPoly(p.n() + 1));
        it->second.add_term(e, c);
    }
    std::vector<std::pair<long, ParabolicPolynomial>> out;
    out.reserve(parts.size());
    for (auto& [d, q] : parts) out.emplace_back(d, ParabolicPolynomial(p.n(), std::move(q)));
    return out;
}

// pi_k: keeps exactly the terms of zeta-degree k (the circle-average
// projector (1/k!) d_1^k f(0,z) zeta^k restricted to polynomials).
// pi_k pi_j = delta_{kj} pi_k and sum_k pi_k = id, exactly.
inline ParabolicPolynomial pi_k(const ParabolicPolynomial& p, long k) {
    ExactPoly out(p.n() + 1);
    for (const auto& [e, c] : p.poly().terms())
        if (ParabolicPolynomial::zeta_degree_of(e) == k) out.add_term(e, c);
    return {p.n(), std::move(out)};
}

// Polynomial on C^{n+1} (ball side), ordinary total-degree grading.
class BallPolynomial {
  public:
    explicit BallPolynomial(int n = 0) : n_(n), poly_(n + 1) {}
    BallPolynomial(int n, ExactPoly p) : n_(n), poly_(std::move(p)) {
        if (poly_.nvars() != n + 1)
            throw DimensionMismatch("BallPolynomial: expects n+1 variables");
    }

    static BallPolynomial constant(int n, ComplexRational c) {
        return {n, ExactPoly::constant(n + 1, std::move(c))};
    }
    static BallPolynomial coordinate(int n, int j) {
        return {n, ExactPoly::variable(n + 1, j)};
    }
    static BallPolynomial monomial(int n, Exponents alpha,
                                   ComplexRational c = ComplexRational(Rational(1))) {
        return {n, ExactPoly::monomial(n + 1, std::move(alpha), std::move(c))};
    }

    int n() const { return n_; }
    const ExactPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    long degree() const { return poly_.total_degree(); }

    Complex eval(const BallPoint& w) const { return poly_.eval(w.w()); }

    // homogeneous component of ordinary degree k
    BallPolynomial component(long k) const {
        ExactPoly out(n_ + 1);
        for (const auto& [e, c] : poly_.terms()) {
            long d = 0;
            for (auto x : e) d += x;
            if (d == k) out.add_term(e, c);
        }
        return {n_, std::move(out)};
    }

    friend BallPolynomial operator+(const BallPolynomial& a, const BallPolynomial& b) {
        return {a.n_, a.poly_ + b.poly_};
    }
    friend BallPolynomial operator-(const BallPolynomial& a, const BallPolynomial& b) {
        return {a.n_, a.poly_ - b.poly_};
    }
    friend BallPolynomial operator*(const BallPolynomial& a, const BallPolynomial& b) {
        return {a.n_, a.poly_ * b.poly_};
    }
    friend BallPolynomial operator*(const ComplexRational& c, const BallPolynomial& a) {
        return {a.n_, c * a.poly_};
    }
    friend bool operator==(const BallPolynomial& a, const BallPolynomial& b) {
        return a.n_ == b.n_ && a.poly_ == b.poly_;
    }

  private:
    int n_;
    ExactPoly poly_;
};

} // namespace siegel
