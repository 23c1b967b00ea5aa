#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "siegel/phase.hpp"
#include "siegel/points.hpp"
#include "siegel/word.hpp"

namespace siegel {

// k-th derivative in the z-slice by the Cauchy integral on a circle of
// radius min(rho(p)/2, 1), which stays inside the domain; trapezoid with
// max(32, 8k) nodes, spectrally accurate for holomorphic f. The cap keeps the
// circle away from the integrand's singularities when rho(p) is large.
inline Complex numeric_d2k(const HolomorphicFn& f, unsigned k, const SiegelPoint& p) {
    const double r = std::min(p.rho() / 2.0, 1.0);
    const std::size_t nodes = std::max<std::size_t>(32, 8 * static_cast<std::size_t>(k));
    Complex acc = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(nodes);
        Complex w = p.z() + std::polar(r, th);
        acc += f(SiegelPoint(p.zeta(), w)) * std::polar(1.0, -static_cast<double>(k) * th);
    }
    double kfact = 1.0;
    for (unsigned j = 2; j <= k; ++j) kfact *= j;
    return acc * kfact / (static_cast<double>(nodes) * std::pow(r, static_cast<double>(k)));
}

// Taylor coefficients c_0..c_{count-1} of a holomorphic function on the disc,
// recovered from trapezoid sums on |w| = radius. Recovery amplifies sampling
// noise by radius^{-k}, so trailing coefficients below the relative noise
// floor are zeroed; consumers weighting by k! depend on that.
inline std::vector<Complex> disc_taylor_coefficients(const std::function<Complex(Complex)>& g,
                                                     std::size_t count, double radius = 0.8,
                                                     std::size_t nodes = 512) {
    std::vector<Complex> samples(nodes);
    double scale = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(nodes);
        samples[j] = g(std::polar(radius, th));
        scale = std::max(scale, std::abs(samples[j]));
    }
    std::vector<Complex> coeffs(count);
    for (std::size_t k = 0; k < count; ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < nodes; ++j) {
            double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(nodes);
            acc += samples[j] * std::polar(1.0, -static_cast<double>(k) * th);
        }
        double rk = std::pow(radius, static_cast<double>(k));
        Complex c = acc / (static_cast<double>(nodes) * rk);
        if (std::abs(c) * rk <= 1e-12 * std::max(scale, 1e-300)) c = 0.0;
        coeffs[k] = c;
    }
    return coeffs;
}

// Complex Jacobian determinant of a holomorphic map C^d -> C^d by Cauchy
// differentiation of each partial on small circles, then LU determinant.
inline Complex numeric_complex_jacobian(
    const std::function<std::vector<Complex>(const std::vector<Complex>&)>& map,
    const std::vector<Complex>& at, double radius = 1e-2, std::size_t nodes = 32) {
    const std::size_t d = at.size();
    std::vector<std::vector<Complex>> jac(d, std::vector<Complex>(d, 0.0));
    for (std::size_t v = 0; v < d; ++v) {
        for (std::size_t j = 0; j < nodes; ++j) {
            double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(nodes);
            std::vector<Complex> x = at;
            x[v] += std::polar(radius, th);
            std::vector<Complex> y = map(x);
            for (std::size_t r = 0; r < d; ++r)
                jac[r][v] += y[r] * std::polar(1.0, -th);
        }
        for (std::size_t r = 0; r < d; ++r) jac[r][v] /= static_cast<double>(nodes) * radius;
    }
    // determinant by Gaussian elimination with partial pivoting
    Complex det = 1.0;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < d; ++r)
            if (std::abs(jac[r][c]) > std::abs(jac[piv][c])) piv = r;
        if (piv != c) {
            std::swap(jac[piv], jac[c]);
            det = -det;
        }
        if (std::abs(jac[c][c]) == 0.0) return 0.0;
        det *= jac[c][c];
        for (std::size_t r = c + 1; r < d; ++r) {
            Complex f = jac[r][c] / jac[c][c];
            for (std::size_t cc = c; cc < d; ++cc) jac[r][cc] -= f * jac[c][cc];
        }
    }
    return det;
}

} // namespace siegel
