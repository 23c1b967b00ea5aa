#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/hermitian_eig.hpp"
#include "siegel/phase.hpp"
#include "siegel/points.hpp"
#include "siegel/word.hpp"

namespace siegel {

// base(p, q) = (z - conj(z'))/(2i) - <zeta|zeta'>.
// Re base >= (rho(p)+rho(q))/2 > 0 on interior pairs, so principal powers of
// it never cross the cut. Throws PositivityViolation when that fails on a
// supposedly interior pair (bad input).
inline Complex kernel_base(const SiegelPoint& p, const SiegelPoint& q) {
    if (p.n() != q.n()) throw DimensionMismatch("kernel_base: dimension mismatch");
    Complex b = (p.z() - std::conj(q.z())) / Complex(0.0, 2.0) - herm(p.zeta(), q.zeta());
    if (b.real() <= 0.0 && !p.is_boundary() && !q.is_boundary())
        throw PositivityViolation("kernel_base: Re <= 0 on interior pair");
    return b;
}

// B^s(p, q) = base(p, q)^s, principal branch.
inline Complex eval_b(double s, const SiegelPoint& p, const SiegelPoint& q) {
    return cpow(kernel_base(p, q), s);
}

// Normalizing constant of the weighted Bergman kernel:
// c_s = (2s+n)(2s+n-1)...(2s) / (4 pi^{n+1}), n+1 factors.
inline double bergman_constant(double s, int n) {
    if (s <= 0.0) throw ParameterError("bergman_constant: requires s > 0");
    double prod = 1.0;
    for (int j = 0; j <= n; ++j) prod *= 2.0 * s + j;
    return prod / (4.0 * std::pow(kPi, n + 1));
}

// Weighted Bergman kernel K_s = c_s * base^{-(n+1+2s)}, s > 0.
inline Complex eval_k(double s, const SiegelPoint& p, const SiegelPoint& q) {
    if (s <= 0.0) throw ParameterError("eval_k: requires s > 0");
    int n = p.n();
    return bergman_constant(s, n) * eval_b(-(n + 1 + 2.0 * s), p, q);
}

// Transferred kernel on the ball: 2^{2s/(n+2)} (1 - <w|w'>)^{-s}.
inline Complex eval_ball(double s, const BallPoint& w, const BallPoint& wp) {
    if (w.n() != wp.n()) throw DimensionMismatch("eval_ball: dimension mismatch");
    Complex inner = herm(w.w(), wp.w());
    return std::pow(2.0, 2.0 * s / (w.n() + 2)) * cpow(1.0 - inner, -s);
}

enum class KernelKind { B_POWER, BERGMAN_K, BALL_POWER };

// Kernel family selector. B_POWER with parameter s evaluates B^{-s} (the
// candidate reproducing kernel of A_s; PSD exactly on the Wallach ray s >= 0),
// BERGMAN_K evaluates K_s (s > 0), BALL_POWER the transferred ball kernel.
struct KernelSpec {
    KernelKind kind = KernelKind::B_POWER;
    double s = 1.0;
    int n = 0;

    void validate() const {
        if (kind == KernelKind::BERGMAN_K && s <= 0.0)
            throw ParameterError("KernelSpec: BERGMAN_K needs s > 0");
        if (n < 0 || n > 8) throw ParameterError("KernelSpec: supported range 0 <= n <= 8");
    }
};

struct GramReport {
    double s = 0.0;
    CMatrix matrix;
    double min_eigenvalue = 0.0;
    double norm_inf = 0.0;
    bool psd = false;
};

inline double matrix_norm_inf(const CMatrix& g) {
    double worst = 0.0;
    for (const auto& row : g) {
        double acc = 0.0;
        for (const auto& x : row) acc += std::abs(x);
        worst = std::max(worst, acc);
    }
    return worst;
}

inline double default_psd_tolerance() { return 1e-10; }

template <typename Point, typename Kernel>
GramReport gram_matrix(const Kernel& k, const std::vector<Point>& points, double s_label = 0.0,
                       double tol = default_psd_tolerance()) {
    if (points.empty()) throw ParameterError("gram_matrix: needs at least one point");
    const std::size_t n = points.size();
    CMatrix g(n, std::vector<Complex>(n, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c <= r; ++c) {
            Complex v = k(points[r], points[c]);
            g[r][c] = v;
            g[c][r] = std::conj(v);
        }
        g[r][r] = Complex(g[r][r].real(), 0.0);
    }
    // Hermitian-symmetry sanity before the eigensolve
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (std::abs(g[r][c] - std::conj(g[c][r])) > 1e-12 * std::max(1.0, std::abs(g[r][c])))
                throw PositivityViolation("gram_matrix: kernel not Hermitian");

    GramReport rep;
    rep.s = s_label;
    rep.norm_inf = matrix_norm_inf(g);
    rep.min_eigenvalue = min_eigenvalue(g);
    rep.matrix = std::move(g);
    rep.psd = rep.min_eigenvalue >= -tol * std::max(1.0, rep.norm_inf);
    return rep;
}

inline GramReport gram(const KernelSpec& spec, const std::vector<SiegelPoint>& points,
                       double tol = default_psd_tolerance()) {
    spec.validate();
    if (spec.kind == KernelKind::BALL_POWER)
        throw ParameterError("gram: BALL_POWER takes ball points");
    if (spec.kind == KernelKind::B_POWER)
        return gram_matrix(
            [&](const SiegelPoint& a, const SiegelPoint& b) { return eval_b(-spec.s, a, b); },
            points, spec.s, tol);
    return gram_matrix(
        [&](const SiegelPoint& a, const SiegelPoint& b) { return eval_k(spec.s, a, b); }, points,
        spec.s, tol);
}

inline GramReport gram(const KernelSpec& spec, const std::vector<BallPoint>& points,
                       double tol = default_psd_tolerance()) {
    spec.validate();
    if (spec.kind != KernelKind::BALL_POWER)
        throw ParameterError("gram: half-space kernels take Siegel points");
    return gram_matrix(
        [&](const BallPoint& a, const BallPoint& b) { return eval_ball(spec.s, a, b); }, points,
        spec.s, tol);
}

struct InvarianceReport {
    double max_rel_error = 0.0;
    std::size_t worst_pair = 0;
    double iota_square_error = 0.0; // convention check, see below
    bool pass(double tol) const {
        return std::max(max_rel_error, iota_square_error) <= tol;
    }
};

// Verifies the invariance identity "U_s tensor conj(U_s) fixes B^{-s}" along a word:
//   B^{-s}(w^{-1}p, w^{-1}q) cocycle(w^{-1},s,p) conj(cocycle(w^{-1},s,q)) = B^{-s}(p,q).
//
// Constant per-letter phases cancel in the two-slot product, so the identity
// alone cannot pin the branch convention. The report therefore also measures
// the weighted square of the word against its reference phase: the cocycle of
// w^{-1}.w (identity on points) must equal iota_square_phase_reference once
// per INV letter. A perturbed convention shows up there.
inline InvarianceReport verify_kernel_invariance(
    const GroupWord& w, double s, const std::vector<std::pair<SiegelPoint, SiegelPoint>>& pairs,
    const PhaseConvention& conv = default_phase_convention()) {
    InvarianceReport rep;
    GroupWord winv = w.inverse();
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const auto& [p, q] = pairs[j];
        Complex lhs = eval_b(-s, winv.apply(p), winv.apply(q)) * winv.cocycle(s, p, conv) *
                      std::conj(winv.cocycle(s, q, conv));
        Complex rhs = eval_b(-s, p, q);
        double err = std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs));
        if (err > rep.max_rel_error) {
            rep.max_rel_error = err;
            rep.worst_pair = j;
        }
    }
    if (!pairs.empty()) {
        int n_iota = 0;
        for (const auto& l : w.letters())
            if (std::holds_alternative<Inversion>(l)) ++n_iota;
        const SiegelPoint& p0 = pairs.front().first;
        Complex measured = winv.concat(w).cocycle(s, p0, conv);
        Complex reference = 1.0;
        for (int j = 0; j < n_iota; ++j)
            reference *= PhaseConvention::iota_square_phase_reference(p0.n(), s);
        rep.iota_square_error = std::abs(measured - reference);
    }
    return rep;
}

struct TransferKernelReport {
    double max_rel_error = 0.0;
    std::size_t worst_pair = 0;
};

// Checks the Cayley transfer of B^{-s}: with
//   c_factor(w) = (2i)^{s/(n+2)} / (1 - z_w)^s,
//   B^{-s}(C w, C w') c_factor(w) conj(c_factor(w')) = 2^{2s/(n+2)} (1-<w|w'>)^{-s}.
inline TransferKernelReport cayley_transfer_kernel_check(
    double s, const std::vector<std::pair<BallPoint, BallPoint>>& pairs,
    const PhaseConvention& conv = default_phase_convention()) {
    TransferKernelReport rep;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const auto& [w, wp] = pairs[j];
        int n = w.n();
        Complex cf_w = conv.two_i_pow(s / (n + 2)) / cpow(1.0 - w.last(), s);
        Complex cf_wp = conv.two_i_pow(s / (n + 2)) / cpow(1.0 - wp.last(), s);
        Complex lhs = eval_b(-s, cayley(w), cayley(wp)) * cf_w * std::conj(cf_wp);
        Complex rhs = eval_ball(s, w, wp);
        double err = std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs));
        if (err > rep.max_rel_error) {
            rep.max_rel_error = err;
            rep.worst_pair = j;
        }
    }
    return rep;
}

// Finite-span reproducing check for K_s. f = sum a_j K_s(., q_j); the best
// approximation h of K_s(., target) in the span satisfies <f|h> = f(target),
// so the relative residual measures the Gram solve. Throws IllConditioned if
// cond(G) > 1e12 (clustered nodes).
inline double reproducing_check(double s, const std::vector<SiegelPoint>& nodes,
                                const std::vector<Complex>& coeffs, const SiegelPoint& target) {
    if (s <= 0.0) throw ParameterError("reproducing_check: requires s > 0");
    if (nodes.size() != coeffs.size() || nodes.empty())
        throw ParameterError("reproducing_check: nodes/coeffs mismatch");
    const std::size_t m = nodes.size();
    CMatrix g(m, std::vector<Complex>(m, 0.0));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) g[r][c] = eval_k(s, nodes[r], nodes[c]);
    HermitianEig eig = hermitian_eig(g);
    if (!(condition_number(eig) <= 1e12))
        throw IllConditioned("reproducing_check: Gram condition number > 1e12");

    std::vector<Complex> b(m);
    for (std::size_t r = 0; r < m; ++r) b[r] = eval_k(s, nodes[r], target);
    std::vector<Complex> c = hermitian_solve(eig, b);

    Complex f_target = 0.0;
    for (std::size_t j = 0; j < m; ++j) f_target += coeffs[j] * eval_k(s, target, nodes[j]);

    // <f|h> = sum_{j,k} a_j conj(c_k) G_{kj}
    Complex inner = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        Complex col = 0.0;
        for (std::size_t k = 0; k < m; ++k) col += std::conj(c[k]) * g[k][j];
        inner += coeffs[j] * col;
    }
    return std::abs(f_target - inner) / std::max(1e-300, std::abs(f_target));
}

} // namespace siegel
