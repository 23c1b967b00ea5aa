#pragma once

#include <cmath>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/hermitian_eig.hpp"

namespace siegel {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    double integrate(const std::vector<double>& values) const {
        double acc = 0.0;
        for (std::size_t j = 0; j < nodes.size(); ++j) acc += weights[j] * values[j];
        return acc;
    }
};

// Gauss-Jacobi rule on [0,1] for the weight (1-u)^a, a > -1, via
// Golub-Welsch on the (a,0) Jacobi recurrence. Exact for polynomial
// integrands of degree <= 2*points - 1. With b = 0 the zeroth moment is
// 2^{a+1}/(a+1), so no Gamma evaluations are needed.
inline QuadratureRule gauss_jacobi_01(std::size_t points, double a) {
    if (!(a > -1.0)) throw ParameterError("gauss_jacobi_01: weight exponent must exceed -1");
    if (points == 0) throw ParameterError("gauss_jacobi_01: needs at least one node");
    const double b = 0.0;
    std::vector<double> diag(points), off(points > 1 ? points - 1 : 0);
    for (std::size_t k = 0; k < points; ++k) {
        double kk = static_cast<double>(k);
        double denom = (2.0 * kk + a + b) * (2.0 * kk + a + b + 2.0);
        diag[k] = denom == 0.0 ? (b - a) / (a + b + 2.0) : (b * b - a * a) / denom;
    }
    for (std::size_t k = 1; k < points; ++k) {
        double kk = static_cast<double>(k);
        double num = 4.0 * kk * (kk + a) * (kk + b) * (kk + a + b);
        double den = (2.0 * kk + a + b) * (2.0 * kk + a + b) * (2.0 * kk + a + b + 1.0) *
                     (2.0 * kk + a + b - 1.0);
        off[k - 1] = std::sqrt(num / den);
    }
    TridiagEig eig = tridiagonal_eig(diag, off);
    double mu0 = std::pow(2.0, a + 1.0) / (a + 1.0); // int_{-1}^{1} (1-x)^a dx

    QuadratureRule rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    for (std::size_t k = 0; k < points; ++k) {
        rule.nodes[k] = 0.5 * (1.0 + eig.values[k]);
        double w = mu0 * eig.first_components[k] * eig.first_components[k];
        rule.weights[k] = w * std::pow(2.0, -(a + 1.0)); // map [-1,1] -> [0,1]
    }
    return rule;
}

} // namespace siegel
