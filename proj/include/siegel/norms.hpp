#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "siegel/calculus.hpp"
#include "siegel/descriptor.hpp"
#include "siegel/errors.hpp"
#include "siegel/fisher.hpp"
#include "siegel/kernels.hpp"
#include "siegel/parabolic.hpp"
#include "siegel/quadrature.hpp"
#include "siegel/transfer.hpp"

namespace siegel {

struct NormReport {
    enum class Method { SERIES, QUADRATURE, GRAM };
    Method method = Method::SERIES;
    bool infinite = false;
    double value = 0.0;
    std::vector<std::pair<long, double>> per_degree;
};

inline double rising_factorial(double s, long k) {
    double acc = 1.0;
    for (long j = 0; j < k; ++j) acc *= s + static_cast<double>(j);
    return acc;
}

// ||f||^2_{C_s A_s} = 2^{-2s/(n+2)} sum_k ||f_k||_F^2 / (s)^k, s >= 0.
// At s = 0 the space is the constants: any nonzero f_k with k >= 1 makes the
// norm INFINITE.
inline NormReport ball_norm_as(const BallPolynomial& f, double s) {
    if (s < 0.0) throw ParameterError("ball_norm_as: requires s >= 0");
    NormReport rep;
    rep.method = NormReport::Method::SERIES;
    const int n = f.n();
    const double prefactor = std::pow(2.0, -2.0 * s / (n + 2));
    long top = std::max<long>(f.degree(), 0);
    for (long k = 0; k <= top; ++k) {
        Rational fk = fisher_norm_sq(f.component(k));
        if (fk == 0) continue;
        if (s == 0.0 && k >= 1) {
            rep.infinite = true;
            rep.per_degree.emplace_back(k, std::numeric_limits<double>::infinity());
            continue;
        }
        double contribution = prefactor * to_double(fk) / rising_factorial(s, k);
        rep.per_degree.emplace_back(k, contribution);
        rep.value += contribution;
    }
    if (rep.infinite) rep.value = std::numeric_limits<double>::infinity();
    return rep;
}

// ||f||^2_{C_s ~A_{s,1-s}} = 2^{-2(2-s)/(n+2)} sum_{k >= 1-s}
//   ||f_k||_F^2 / ((-s)! (k+s-1)!),  s in -N. Degrees below 1-s are the
// seminorm's null space P^{1-s}(C^{n+1}).
inline NormReport ball_seminorm_tilde(const BallPolynomial& f, long s) {
    if (s > 0) throw ParameterError("ball_seminorm_tilde: requires s <= 0 integer");
    NormReport rep;
    rep.method = NormReport::Method::SERIES;
    const int n = f.n();
    const double prefactor = std::pow(2.0, -2.0 * (2.0 - static_cast<double>(s)) / (n + 2));
    const double neg_s_fact = to_double(Rational(factorial(static_cast<unsigned>(-s))));
    long top = std::max<long>(f.degree(), 0);
    for (long k = 1 - s; k <= top; ++k) {
        Rational fk = fisher_norm_sq(f.component(k));
        if (fk == 0) continue;
        double denom = neg_s_fact * to_double(Rational(factorial(static_cast<unsigned>(k + s - 1))));
        double contribution = prefactor * to_double(fk) / denom;
        rep.per_degree.emplace_back(k, contribution);
        rep.value += contribution;
    }
    return rep;
}

// c'_s = 2^{-2s/(n+2)} (s-1)(s-2)...(s-n-1) / pi^{n+1}, s > n+1.
inline double ball_bergman_constant(double s, int n) {
    if (s <= n + 1) throw ParameterError("ball_bergman_constant: requires s > n+1");
    double prod = 1.0;
    for (int j = 1; j <= n + 1; ++j) prod *= s - j;
    return std::pow(2.0, -2.0 * s / (n + 2)) * prod / std::pow(kPi, n + 1);
}

// c'_s int_B |f|^2 (1-|w|^2)^{s-n-2} dV via exact angular integration of the
// monomial cross terms (they vanish) and Gauss-Jacobi radial quadrature in
// u = r^2 with weight (1-u)^{s-n-2}:
//   int_B w^a conj(w^a) (1-|w|^2)^{s-N-1} dV
//     = [2 pi^N a!/(|a|+N-1)!] * (1/2) int_0^1 u^{|a|+N-1} (1-u)^{s-N-1} du,
// N = n+1. Polynomial integrands make the rule exact at machine precision;
// the value converges to ball_norm_as(f, s).
inline NormReport bergman_quadrature_norm(const BallPolynomial& f, double s,
                                          std::size_t resolution = 0) {
    const int n = f.n();
    const int N = n + 1;
    if (s <= n + 1) throw ParameterError("bergman_quadrature_norm: requires s > n+1");
    NormReport rep;
    rep.method = NormReport::Method::QUADRATURE;
    long deg = std::max<long>(f.degree(), 0);
    std::size_t points = std::max<std::size_t>(16, static_cast<std::size_t>(deg) + 4);
    points = std::max(points, resolution);
    QuadratureRule rule = gauss_jacobi_01(points, s - N - 1);

    const double cs = ball_bergman_constant(s, n);
    std::map<long, double> by_degree;
    for (const auto& [e, c] : f.poly().terms()) {
        long a = 0;
        for (auto x : e) a += x;
        BigInt fact = 1;
        for (auto x : e) fact *= factorial(x);
        double angular = 2.0 * std::pow(kPi, N) * to_double(Rational(fact)) /
                         to_double(Rational(factorial(static_cast<unsigned>(a + N - 1))));
        double radial = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j)
            radial += rule.weights[j] * std::pow(rule.nodes[j], static_cast<double>(a + N - 1));
        double csq = std::norm(c.to_complex());
        by_degree[a] += cs * csq * angular * 0.5 * radial;
    }
    for (const auto& [k, v] : by_degree) {
        rep.per_degree.emplace_back(k, v);
        rep.value += v;
    }
    return rep;
}

// --- half-space seminorms -------------------------------------------------

// Evaluable holomorphic function on the upper half-plane (n = 0 route).
struct DiscFunction {
    std::function<Complex(Complex)> f;
};

// Finite kernel span standing for the k-th derivative directly:
// d_2^k f = sum_j coeffs_j B^{-(s+2k)}_{nodes_j}.
struct KernelSpanFunction {
    std::vector<SiegelPoint> nodes;
    std::vector<Complex> coeffs;
};

using HalfspaceFunction = std::variant<ParabolicPolynomial, DiscFunction, KernelSpanFunction>;

namespace detail {

// Series norm at level s' from numerically recovered Taylor data (disc side).
inline NormReport series_from_taylor(const std::vector<Complex>& coeffs, double s_prime) {
    NormReport rep;
    rep.method = NormReport::Method::SERIES;
    const double prefactor = std::pow(2.0, -2.0 * s_prime / 2.0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == Complex(0.0, 0.0)) continue; // zeroed as noise upstream
        double fisher = std::norm(coeffs[k]) * to_double(Rational(factorial(static_cast<unsigned>(k))));
        if (s_prime == 0.0 && k >= 1) {
            rep.infinite = true;
            continue;
        }
        double contribution = prefactor * fisher / rising_factorial(s_prime, static_cast<long>(k));
        rep.per_degree.emplace_back(static_cast<long>(k), contribution);
        rep.value += contribution;
    }
    if (rep.infinite) rep.value = std::numeric_limits<double>::infinity();
    return rep;
}

} // namespace detail

// Seminorm of A_{s,k} = {f : d_2^k f in A_{s+2k}}, through the Cayley
// transfer of d_2^k f at level s' = s + 2k.
//  - Polynomials: d_2^k is symbolic. The transfer of a nonzero polynomial has
//    a boundary pole whose ball series diverges, so the seminorm is 0 (when
//    d_2^k f = 0), |const|^2 (s' = 0, constant derivative), or INFINITE.
//  - DiscFunction (n = 0): Cauchy-circle d_2^k, transfer to the disc, Taylor
//    recovery, Pochhammer series.
//  - KernelSpanFunction: exact span norm c* G c.
inline NormReport halfspace_seminorm_ask(const HalfspaceFunction& f, double s, unsigned k) {
    const double s_prime = s + 2.0 * k;
    if (s_prime < 0.0) throw ParameterError("halfspace_seminorm_ask: requires s + 2k >= 0");

    if (std::holds_alternative<ParabolicPolynomial>(f)) {
        const auto& p = std::get<ParabolicPolynomial>(f);
        ParabolicPolynomial d = p.dz(k);
        NormReport rep;
        rep.method = NormReport::Method::SERIES;
        if (d.is_zero()) return rep;
        if (d.poly().is_constant() && s_prime == 0.0) {
            double c2 = std::norm(d.poly().constant_term().to_complex());
            rep.value = c2;
            rep.per_degree.emplace_back(0, c2);
            return rep;
        }
        rep.infinite = true;
        rep.value = std::numeric_limits<double>::infinity();
        return rep;
    }

    if (std::holds_alternative<DiscFunction>(f)) {
        const auto& disc = std::get<DiscFunction>(f);
        HolomorphicFn on_point = [&](const SiegelPoint& p) { return disc.f(p.z()); };
        HolomorphicFn derivative = [&](const SiegelPoint& p) {
            return k == 0 ? on_point(p) : numeric_d2k(on_point, k, p);
        };
        auto on_disc = [&](Complex w) {
            return transfer_to_ball(derivative, s_prime, BallPoint({w}));
        };
        std::vector<Complex> coeffs = disc_taylor_coefficients(on_disc, 48);
        return detail::series_from_taylor(coeffs, s_prime);
    }

    const auto& span = std::get<KernelSpanFunction>(f);
    if (span.nodes.size() != span.coeffs.size() || span.nodes.empty())
        throw NotRepresentable("halfspace_seminorm_ask: empty or mismatched kernel span");
    NormReport rep;
    rep.method = NormReport::Method::GRAM;
    Complex acc = 0.0;
    for (std::size_t i = 0; i < span.nodes.size(); ++i)
        for (std::size_t j = 0; j < span.nodes.size(); ++j)
            acc += span.coeffs[i] * std::conj(span.coeffs[j]) *
                   eval_b(-s_prime, span.nodes[j], span.nodes[i]);
    rep.value = acc.real();
    return rep;
}

// --- tilde membership (s in -N, n >= 1) ------------------------------------

struct TildeComponent {
    long k = 0;                  // zeta degree
    long h_index = 0;            // (1 - s - k)_+
    ParabolicPolynomial component;
    Rational contribution;       // Fisher mass outside the null space
};

struct TildeReport {
    bool member = true;          // automatic for polynomials
    Rational seminorm_sq;
    std::vector<TildeComponent> components;
    double seminorm_sq_double() const { return to_double(seminorm_sq); }
};

// For a polynomial f the membership condition pi_k f in
// P_k(C^n) x A_{s+k,(1-s-k)_+}(C_+) is a finiteness statement and holds
// automatically; the report carries the per-k data and the direct-sum
// seminorm: the Fisher mass of the monomial components outside the null
// space P^{1-s}(C^{n+1}) (terms zeta^alpha z^m with m >= (1-s-|alpha|)_+).
inline TildeReport tilde_membership(const ParabolicPolynomial& f, long s) {
    if (s > 0) throw ParameterError("tilde_membership: requires s <= 0 integer");
    if (f.n() < 1) throw ParameterError("tilde_membership: requires n >= 1");
    TildeReport rep;
    long top = std::max<long>(f.parabolic_degree(), 0);
    for (long k = 0; k <= top; ++k) {
        ParabolicPolynomial pk = pi_k(f, k);
        if (pk.is_zero()) continue;
        TildeComponent comp;
        comp.k = k;
        comp.h_index = std::max<long>(1 - s - k, 0);
        comp.component = pk;
        // split by z-power; coefficient polynomials in zeta carry the mass
        std::map<std::uint32_t, ExactPoly> by_m;
        for (const auto& [e, c] : pk.poly().terms()) {
            Exponents ze = e;
            std::uint32_t m = ze.back();
            ze.back() = 0;
            auto [it, fresh] = by_m.try_emplace(m, ExactPoly(f.n() + 1));
            it->second.add_term(std::move(ze), c);
        }
        for (const auto& [m, coefpoly] : by_m) {
            if (static_cast<long>(m) < comp.h_index) continue;
            comp.contribution += fisher_norm_sq_zeta(ParabolicPolynomial(f.n(), coefpoly));
        }
        rep.seminorm_sq += comp.contribution;
        rep.components.push_back(std::move(comp));
    }
    return rep;
}

} // namespace siegel
