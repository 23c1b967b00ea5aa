#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "siegel/calculus.hpp"
#include "siegel/kernels.hpp"
#include "siegel/phase.hpp"
#include "siegel/points.hpp"
#include "siegel/word.hpp"

namespace siegel {

using BallFn = std::function<Complex(const BallPoint&)>;

// Weighted transfer C_s f (w) = f(C w) (2i)^{s/(n+2)} / (1-z_w)^s, mapping
// Hol(U_{n+1}) to Hol(B_{n+1}); principal branch of (1-z)^s is safe since
// Re(1-z) > 0 on the ball.
inline Complex transfer_to_ball(const HolomorphicFn& f, double s, const BallPoint& w,
                                const PhaseConvention& conv = default_phase_convention()) {
    int n = w.n();
    return f(cayley(w)) * conv.two_i_pow(s / (n + 2)) / cpow(1.0 - w.last(), s);
}

// Inverse transfer: C_s^{-1} g (p) = g(C^{-1} p) (2i)^{s(n+1)/(n+2)} / (z+i)^s;
// Im(z + i) > 0 keeps the principal branch off the cut.
inline Complex transfer_to_halfspace(const BallFn& g, double s, const SiegelPoint& p,
                                     const PhaseConvention& conv = default_phase_convention()) {
    int n = p.n();
    return g(cayley_inverse(p)) * conv.two_i_pow(s * (n + 1) / (n + 2)) /
           cpow(p.z() + Complex(0.0, 1.0), s);
}

// The ball automorphism conjugate to a half-space word: phi = C^{-1} o w o C.
inline BallPoint conjugated_ball_map(const GroupWord& w, const BallPoint& x) {
    return cayley_inverse(w.apply(cayley(x)));
}

struct ConjugatedActionReport {
    double max_modulus_error = 0.0; // |path A| vs |path B|
    double ratio_spread = 0.0;      // constancy of path A / path B across points
    Complex ratio = 1.0;            // the shared unimodular constant
};

// Checks the conjugated ball-side action U^ball_s(phi) = C_s U_s(w) C_s^{-1}
// for phi = C^{-1} o w o C. Path A transfers to the half-space, acts along
// the word, and transfers back. Path B composes with phi^{-1} directly and
// multiplies by (J phi^{-1})^{s/(n+2)}, where the Jacobian is differentiated
// numerically and its fractional power is branch-continued along the sample
// sequence (the principal branch alone would jump by an (n+2)-th root of
// unity whenever arg J crosses the cut between points, which is exactly the
// covering ambiguity the word lift resolves). The two paths must agree in
// modulus, and their ratio must be a single unimodular constant per word.
// Consecutive sample points should be close enough that arg J moves by less
// than pi between them.
inline ConjugatedActionReport conjugated_action_check(
    const GroupWord& w, double s, const BallFn& g, const std::vector<BallPoint>& points,
    const PhaseConvention& conv = default_phase_convention()) {
    ConjugatedActionReport rep;
    GroupWord winv = w.inverse();

    HolomorphicFn halfspace_g = [&](const SiegelPoint& p) {
        return transfer_to_halfspace(g, s, p, conv);
    };
    auto phi_inverse_map = [&](const std::vector<Complex>& coords) {
        BallPoint x{std::vector<Complex>(coords)};
        return conjugated_ball_map(winv, x).w();
    };

    // Jacobians first, with sequentially unwrapped arguments
    std::vector<double> jac_abs(points.size()), jac_arg(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        Complex jac = numeric_complex_jacobian(phi_inverse_map, points[j].w(), 5e-3);
        jac_abs[j] = std::abs(jac);
        double arg = std::arg(jac);
        if (j > 0) {
            while (arg - jac_arg[j - 1] > kPi) arg -= 2.0 * kPi;
            while (arg - jac_arg[j - 1] < -kPi) arg += 2.0 * kPi;
        }
        jac_arg[j] = arg;
    }

    bool have_ratio = false;
    for (std::size_t j = 0; j < points.size(); ++j) {
        const BallPoint& x = points[j];
        int n = x.n();
        HolomorphicFn acted = [&](const SiegelPoint& p) { return act_u(w, s, halfspace_g, p, conv); };
        Complex a_val = transfer_to_ball(acted, s, x, conv);

        BallPoint phix = conjugated_ball_map(winv, x);
        double e = s / (n + 2);
        Complex jac_pow = std::polar(std::pow(jac_abs[j], e), e * jac_arg[j]);
        Complex b_val = g(phix) * jac_pow;

        double mod_err =
            std::abs(std::abs(a_val) - std::abs(b_val)) / std::max(1e-300, std::abs(b_val));
        rep.max_modulus_error = std::max(rep.max_modulus_error, mod_err);

        if (std::abs(b_val) > 1e-12) {
            Complex ratio = a_val / b_val;
            if (!have_ratio) {
                rep.ratio = ratio;
                have_ratio = true;
            } else {
                rep.ratio_spread = std::max(rep.ratio_spread, std::abs(ratio - rep.ratio));
            }
        }
    }
    return rep;
}

} // namespace siegel
