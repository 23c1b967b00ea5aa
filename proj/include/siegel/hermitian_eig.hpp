#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "siegel/affine.hpp" // CMatrix helpers
#include "siegel/errors.hpp"

namespace siegel {

// Dense Hermitian eigensolver by cyclic Jacobi sweeps with complex rotations.
// Intended for the tiny Gram matrices of this library (N <= 16-ish); no
// external dependency on purpose.
//
// Each pivot (p,q) is annihilated by the unitary
//   G = [[c, -s e^{i phi}], [s e^{-i phi}, c]],  A <- G^* A G,
// where phi = arg A_pq and (c,s) is the classical real Jacobi rotation for
// the phase-stripped 2x2 block.
struct HermitianEig {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // columns are eigenvectors, vectors[r][k]
};

inline HermitianEig hermitian_eig(CMatrix a, bool want_vectors = true, double tol = 1e-14,
                                  int max_sweeps = 60) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DimensionMismatch("hermitian_eig: matrix not square");

    CMatrix v;
    if (want_vectors) v = identity_matrix(static_cast<int>(n));

    double scale = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) scale = std::max(scale, std::abs(a[r][c]));
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p][q]));
        if (off <= tol * scale) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p][q];
                const double m = std::abs(apq);
                if (m <= tol * scale * 1e-2) continue;
                const Complex eip = apq / m; // e^{i phi}
                const double app = a[p][p].real();
                const double aqq = a[q][q].real();
                // annihilating root of t^2 - 2 tau t - 1 = 0 with smaller magnitude
                const double tau = (aqq - app) / (2.0 * m);
                const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // column update: col_p <- c*col_p + s*conj(eip)*col_q,
                //                col_q <- -s*eip*col_p + c*col_q  (A <- A G)
                for (std::size_t r = 0; r < n; ++r) {
                    const Complex arp = a[r][p], arq = a[r][q];
                    a[r][p] = c * arp + s * std::conj(eip) * arq;
                    a[r][q] = -s * eip * arp + c * arq;
                }
                // row update: A <- G^* A
                for (std::size_t cidx = 0; cidx < n; ++cidx) {
                    const Complex apr = a[p][cidx], aqr = a[q][cidx];
                    a[p][cidx] = c * apr + s * eip * aqr;
                    a[q][cidx] = -s * std::conj(eip) * apr + c * aqr;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                a[p][p] = Complex(a[p][p].real(), 0.0);
                a[q][q] = Complex(a[q][q].real(), 0.0);

                if (want_vectors) {
                    for (std::size_t r = 0; r < n; ++r) {
                        const Complex vrp = v[r][p], vrq = v[r][q];
                        v[r][p] = c * vrp + s * std::conj(eip) * vrq;
                        v[r][q] = -s * eip * vrp + c * vrq;
                    }
                }
            }
        }
    }

    HermitianEig out;
    out.values.resize(n);
    std::vector<std::size_t> order(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a[j][j].real();
        order[j] = j;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a[x][x].real() < a[y][y].real(); });
    std::vector<double> sorted(n);
    for (std::size_t j = 0; j < n; ++j) sorted[j] = a[order[j]][order[j]].real();
    out.values = std::move(sorted);
    if (want_vectors) {
        out.vectors = CMatrix(n, std::vector<Complex>(n, 0.0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r) out.vectors[r][j] = v[r][order[j]];
    }
    return out;
}

inline double min_eigenvalue(const CMatrix& a) {
    return hermitian_eig(a, /*want_vectors=*/false).values.front();
}

// Spectral condition number of a Hermitian positive (semi)definite matrix.
inline double condition_number(const HermitianEig& eig) {
    double lo = eig.values.front(), hi = eig.values.back();
    if (lo <= 0.0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

// Solves A x = b through the spectral decomposition. Caller checks
// conditioning beforehand where it matters.
inline std::vector<Complex> hermitian_solve(const HermitianEig& eig, const std::vector<Complex>& b) {
    const std::size_t n = b.size();
    std::vector<Complex> x(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < n; ++r) proj += std::conj(eig.vectors[r][k]) * b[r];
        proj /= eig.values[k];
        for (std::size_t r = 0; r < n; ++r) x[r] += proj * eig.vectors[r][k];
    }
    return x;
}

// Symmetric tridiagonal eigensolve (Golub-Welsch needs values plus first
// components). Reuses the Hermitian routine; sizes here are < 40.
struct TridiagEig {
    std::vector<double> values;
    std::vector<double> first_components;
};

inline TridiagEig tridiagonal_eig(const std::vector<double>& diag, const std::vector<double>& offdiag) {
    const std::size_t n = diag.size();
    CMatrix a(n, std::vector<Complex>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) a[j][j] = diag[j];
    for (std::size_t j = 0; j + 1 < n; ++j) {
        a[j][j + 1] = offdiag[j];
        a[j + 1][j] = offdiag[j];
    }
    HermitianEig eig = hermitian_eig(std::move(a));
    TridiagEig out;
    out.values = eig.values;
    out.first_components.resize(n);
    for (std::size_t k = 0; k < n; ++k) out.first_components[k] = eig.vectors[0][k].real();
    return out;
}

} // namespace siegel
