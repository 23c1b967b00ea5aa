#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "siegel/affine.hpp"
#include "siegel/points.hpp"
#include "siegel/rng.hpp"
#include "siegel/word.hpp"

namespace siegel {

inline SiegelPoint random_interior_point(SplitMix64& rng, int n) {
    std::vector<Complex> zeta(static_cast<std::size_t>(n));
    for (auto& c : zeta) c = Complex(rng.gaussian(), rng.gaussian());
    double re_z = rng.gaussian();
    double r = std::pow(10.0, rng.uniform(-1.0, 1.0));
    double zsq = norm_sq(zeta);
    return SiegelPoint(std::move(zeta), Complex(re_z, r + zsq));
}

// Rejection sampling in the cube, kept within radius_max of the ball.
inline BallPoint random_ball_point(SplitMix64& rng, int n, double radius_max = 0.8) {
    std::vector<Complex> w(static_cast<std::size_t>(n) + 1);
    for (;;) {
        double nsq = 0.0;
        for (auto& c : w) {
            c = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            nsq += std::norm(c);
        }
        if (std::sqrt(nsq) <= radius_max) break;
    }
    return BallPoint(std::move(w));
}

// Haar-ish unitary by Gram-Schmidt on a Gaussian matrix; exactly unitary to
// machine precision, deterministic from the generator state.
inline CMatrix random_unitary(SplitMix64& rng, int n) {
    CMatrix u(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(n)));
    for (auto& row : u)
        for (auto& c : row) c = Complex(rng.gaussian(), rng.gaussian());
    // orthonormalize columns
    for (int c = 0; c < n; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            Complex proj = 0.0;
            for (int r = 0; r < n; ++r) proj += std::conj(u[r][prev]) * u[r][c];
            for (int r = 0; r < n; ++r) u[r][c] -= proj * u[r][prev];
        }
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) nrm += std::norm(u[r][c]);
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r) u[r][c] /= nrm;
        // second pass for orthogonality at 1e-12 scale
        for (int prev = 0; prev < c; ++prev) {
            Complex proj = 0.0;
            for (int r = 0; r < n; ++r) proj += std::conj(u[r][prev]) * u[r][c];
            for (int r = 0; r < n; ++r) u[r][c] -= proj * u[r][prev];
        }
        nrm = 0.0;
        for (int r = 0; r < n; ++r) nrm += std::norm(u[r][c]);
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r) u[r][c] /= nrm;
    }
    return u;
}

inline AffineAutomorphism random_affine(SplitMix64& rng, int n) {
    std::vector<Complex> zeta0(static_cast<std::size_t>(n));
    for (auto& c : zeta0) c = 0.7 * Complex(rng.gaussian(), rng.gaussian());
    double x0 = rng.gaussian();
    double r = std::exp(rng.uniform(-0.7, 0.7));
    CMatrix u = n > 0 ? random_unitary(rng, n) : identity_matrix(0);
    return AffineAutomorphism(std::move(zeta0), x0, r, std::move(u));
}

// Word with affine and INV letters mixed; at least one letter.
inline GroupWord random_word(SplitMix64& rng, int n, std::size_t max_len = 5,
                             bool allow_inversion = true) {
    std::size_t len = 1 + static_cast<std::size_t>(rng.next() % max_len);
    std::vector<Letter> letters;
    letters.reserve(len);
    for (std::size_t j = 0; j < len; ++j) {
        if (allow_inversion && rng.uniform01() < 0.4)
            letters.emplace_back(Inversion{});
        else
            letters.emplace_back(random_affine(rng, n));
    }
    return GroupWord(std::move(letters));
}

inline std::vector<std::pair<SiegelPoint, SiegelPoint>> random_pairs(SplitMix64& rng, int n,
                                                                     std::size_t count) {
    std::vector<std::pair<SiegelPoint, SiegelPoint>> pairs;
    pairs.reserve(count);
    for (std::size_t j = 0; j < count; ++j)
        pairs.emplace_back(random_interior_point(rng, n), random_interior_point(rng, n));
    return pairs;
}

inline std::vector<std::pair<BallPoint, BallPoint>> random_ball_pairs(SplitMix64& rng, int n,
                                                                      std::size_t count) {
    std::vector<std::pair<BallPoint, BallPoint>> pairs;
    pairs.reserve(count);
    for (std::size_t j = 0; j < count; ++j)
        pairs.emplace_back(random_ball_point(rng, n), random_ball_point(rng, n));
    return pairs;
}

} // namespace siegel
