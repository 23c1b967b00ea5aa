// Acceptance suite: runs every primary criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "siegel/annihilator.hpp"
#include "siegel/enumerate.hpp"
#include "siegel/intertwine.hpp"
#include "siegel/norms.hpp"
#include "siegel/sampling.hpp"
#include "siegel/scan.hpp"
#include "siegel/transfer.hpp"

using namespace siegel;

namespace {

ComplexRational cr(long re, long im = 0) { return {Rational(re), Rational(im)}; }

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

struct Criterion {
    int id;
    const char* label;
    double budget_seconds;
    std::function<bool(std::string&)> run;
};

// --- 1: Wallach threshold ---------------------------------------------------

bool cholesky_psd(const CMatrix& g, double ridge) {
    std::size_t n = g.size();
    CMatrix l(n, std::vector<Complex>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        Complex diag = g[j][j] + ridge;
        for (std::size_t k = 0; k < j; ++k) diag -= l[j][k] * std::conj(l[j][k]);
        if (diag.real() <= 0.0) return false;
        l[j][j] = std::sqrt(diag.real());
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex v = g[i][j];
            for (std::size_t k = 0; k < j; ++k) v -= l[i][k] * std::conj(l[j][k]);
            l[i][j] = v / l[j][j];
        }
    }
    return true;
}

bool criterion_wallach(std::string& note) {
    const std::vector<double> grid{-1.0, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0, 2.0};
    bool ok = true;
    for (int n : {0, 1, 2}) {
        auto rows = wallach_scan(n, grid, 200, 12, 42, 1e-10);
        for (const auto& row : rows) {
            if (row.s >= 0.0 && !row.psd) {
                note = "psd failed at n=" + std::to_string(n) + " s=" + std::to_string(row.s);
                ok = false;
            }
            if (row.s < 0.0 && !(row.min_eigenvalue < -1e-6)) {
                note = "no negative witness at n=" + std::to_string(n) +
                       " s=" + std::to_string(row.s);
                ok = false;
            }
        }
    }
    // deterministic witness at (n=0, s=-1): Gram [[1,3/2],[3/2,2]], det -1/4
    GramReport wit = gram(KernelSpec{KernelKind::B_POWER, -1.0, 0}, witness_cloud(0));
    double det = wit.matrix[0][0].real() * wit.matrix[1][1].real() -
                 std::norm(wit.matrix[0][1]);
    if (std::abs(wit.matrix[0][0] - 1.0) > 1e-14 || std::abs(wit.matrix[0][1] - 1.5) > 1e-14 ||
        std::abs(wit.matrix[1][1] - 2.0) > 1e-14 || std::abs(det + 0.25) > 1e-12) {
        note = "witness Gram mismatch";
        ok = false;
    }
    // Cholesky oracle for the PSD side at (n=0, s=1)
    SplitMix64 rng(derive_seed(42, 9000));
    for (int trial = 0; trial < 10; ++trial) {
        auto cloud = random_cloud(rng, 0, 10);
        GramReport rep = gram(KernelSpec{KernelKind::B_POWER, 1.0, 0}, cloud);
        if (!cholesky_psd(rep.matrix, 1e-10 * std::max(1.0, rep.norm_inf))) {
            note = "Cholesky oracle rejected a B^{-1} Gram";
            ok = false;
        }
    }
    return ok;
}

// --- 2: kernel invariance along words ----------------------------------------

bool criterion_invariance(std::string& note, const PhaseConvention& conv, double tol) {
    double worst = 0.0;
    for (int n : {0, 1}) {
        SplitMix64 rng(derive_seed(42, 100 + static_cast<std::uint64_t>(n)));
        for (int trial = 0; trial < 200; ++trial) {
            GroupWord w = random_word(rng, n);
            auto pairs = random_pairs(rng, n, 3);
            for (double s : {0.3, 1.0, 2.5}) {
                auto rep = verify_kernel_invariance(w, s, pairs, conv);
                worst = std::max(worst, std::max(rep.max_rel_error, rep.iota_square_error));
            }
        }
    }
    note = "max rel error " + sci(worst);
    return worst <= tol;
}

// --- 3: Cayley kernel transfer -----------------------------------------------

bool criterion_transfer(std::string& note) {
    double worst = 0.0;
    for (int n : {0, 1}) {
        SplitMix64 rng(derive_seed(42, 300 + static_cast<std::uint64_t>(n)));
        auto pairs = random_ball_pairs(rng, n, 100);
        for (double s : {0.0, 1.0, -2.0})
            worst = std::max(worst, cayley_transfer_kernel_check(s, pairs).max_rel_error);
    }
    note = "max rel error " + sci(worst);
    return worst <= 1e-10;
}

// --- 4: norm-formula cross-validation -----------------------------------------

bool criterion_norms(std::string& note) {
    bool ok = true;
    double worst = 0.0;
    for (double s : {2.0, 3.0}) {
        for (long d = 0; d <= 6; ++d) {
            BallPolynomial f = BallPolynomial::monomial(0, {static_cast<std::uint32_t>(d)});
            double series = ball_norm_as(f, s).value;
            double quad = bergman_quadrature_norm(f, s).value;
            worst = std::max(worst, std::abs(series - quad) / series);
        }
    }
    if (worst > 1e-8) ok = false;
    // worked value ||w||^2 = 1/8 at s = 2, both routes
    BallPolynomial w = BallPolynomial::coordinate(0, 0);
    double series = ball_norm_as(w, 2.0).value;
    double quad = bergman_quadrature_norm(w, 2.0).value;
    if (std::abs(series - 0.125) > 1e-14 || std::abs(quad - 0.125) > 1e-10) ok = false;
    note = "series/quadrature max rel " + sci(worst);
    return ok;
}

// --- 5: affine intertwining, exact -------------------------------------------

std::vector<ExactAffine> fifty_exact_maps(int n) {
    std::vector<ExactAffine> maps = default_generator_sample(n);
    if (n >= 2) {
        // rational rotation block [[3/5, -4/5],[4/5, 3/5]] on the first two slots
        ExactMatrix rot = exact_identity(n);
        rot[0][0] = cr(3) / cr(5);
        rot[0][1] = cr(-4) / cr(5);
        rot[1][0] = cr(4) / cr(5);
        rot[1][1] = cr(3) / cr(5);
        maps.push_back(ExactAffine::rotation(rot));
    }
    // deterministic compositions until 50 maps
    SplitMix64 rng(derive_seed(42, 500 + static_cast<std::uint64_t>(n)));
    std::size_t base = maps.size();
    while (maps.size() < 50) {
        const ExactAffine& a = maps[rng.next() % base];
        const ExactAffine& b = maps[rng.next() % base];
        maps.push_back(exact_compose(a, b));
    }
    return maps;
}

bool criterion_affine_intertwine(std::string& note) {
    for (int n : {0, 1, 2}) {
        MonomialFrame frame(n, 8);
        auto maps = fifty_exact_maps(n);
        std::size_t map_index = 0;
        for (auto& m : maps) {
            ExactAction action(m);
            // integer weights are exact for every rational R; R = 1 letters
            // additionally get a non-integer weight (the s-free case)
            std::vector<Rational> weights{Rational(0), Rational(-2), Rational(1), Rational(3)};
            if (m.dilation_factor() == 1) weights.push_back(Rational(7, 3));
            const Rational& s = weights[map_index % weights.size()];
            ++map_index;
            for (const auto& e : frame.monomials()) {
                ParabolicPolynomial p(n, ExactPoly::monomial(n + 1, e, cr(1)));
                for (unsigned k = 1; k <= 3; ++k) {
                    if (!check_affine_intertwine(action, s, k, p)) {
                        note = "failed at n=" + std::to_string(n);
                        return false;
                    }
                }
            }
        }
    }
    note = "exact over 50 maps, deg <= 8, k <= 3, n in {0,1,2}";
    return true;
}

// --- 6: inversion intertwining ------------------------------------------------

bool criterion_inversion(std::string& note) {
    for (long s : {0L, -1L, -2L, -3L}) {
        auto rep = check_inversion_intertwine(s, 6);
        if (!rep.consistent) {
            note = "inconsistent at s=" + std::to_string(s);
            return false;
        }
    }
    note = "single unimodular constant per s in {0,-1,-2,-3}, h <= 6";
    return true;
}

// --- 7: derivative-kernel coefficient -----------------------------------------

bool criterion_gamma(std::string& note) {
    if (!(derivative_kernel_coefficient_poly(1) ==
          RationalPolynomial({Rational(0), Rational(1, 4), Rational(1, 4)}))) {
        note = "gamma(s,1) != s(s+1)/4";
        return false;
    }
    for (unsigned k1 = 0; k1 <= 4; ++k1)
        for (unsigned k2 = 0; k1 + k2 <= 4; ++k2) {
            auto lhs = derivative_kernel_coefficient_poly(k1 + k2);
            auto rhs = derivative_kernel_coefficient_poly(k1) *
                       derivative_kernel_coefficient_poly(k2).shifted(Rational(2 * k1));
            if (!(lhs == rhs)) {
                note = "composition law failed";
                return false;
            }
        }
    // numeric agreement at 20 random pairs
    SplitMix64 rng(derive_seed(42, 700));
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.next() % 2);
        double s = (trial % 2) ? 1.0 : 2.5;
        double gamma = derivative_kernel_coefficient(s, 1);
        SiegelPoint p = random_interior_point(rng, n);
        SiegelPoint q = random_interior_point(rng, n);
        HolomorphicFn outer = [&](const SiegelPoint& pp) {
            HolomorphicFn inner_conj = [&](const SiegelPoint& qq) {
                return std::conj(eval_b(-s, pp, qq));
            };
            return std::conj(numeric_d2k(inner_conj, 1, q));
        };
        Complex lhs = numeric_d2k(outer, 1, p);
        Complex rhs = gamma * eval_b(-s - 2.0, p, q);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1e-300, std::abs(rhs)));
    }
    note = "numeric agreement " + sci(worst);
    return worst <= 1e-9;
}

// --- 8: invariant-subspace lattice ---------------------------------------------

bool criterion_lattice(std::string& note) {
    auto gens = default_generator_sample(1);
    for (std::uint32_t k = 0; k <= 5; ++k) {
        for (std::uint32_t h = 0; k + h <= 5; ++h) {
            long bound = std::max<long>(static_cast<long>(k) + 2L * h - 2, 0);
            auto span = brute_force_orbit_span(1, k, h, bound, gens);
            if (!span_equals_descriptor(span, orbit_descriptor(k, h))) {
                note = "span mismatch at (k,h)=(" + std::to_string(k) + "," + std::to_string(h) + ")";
                return false;
            }
        }
    }
    auto res = enumerate_invariant_truncations(0, 4);
    if (res.descriptors.size() != 5) {
        note = "n=0 enumeration size " + std::to_string(res.descriptors.size());
        return false;
    }
    for (std::uint32_t kk = 0; kk <= 4; ++kk)
        if (!(res.descriptors[kk] == SubspaceDescriptor{{kk}, kk})) {
            note = "n=0 enumeration mismatch";
            return false;
        }
    note = "orbit spans = descriptor sets for k+h <= 5; n=0 classification = {P^0..P^4}";
    return true;
}

// --- 9: projector algebra and annihilators --------------------------------------

bool criterion_projectors(std::string& note) {
    SplitMix64 rng(derive_seed(42, 900));
    // projector algebra, exact, degree <= 10
    for (int trial = 0; trial < 10; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 2);
        ExactPoly pe(n + 1);
        for (int t = 0; t < 8; ++t) {
            Exponents e(static_cast<std::size_t>(n) + 1, 0);
            long budget = 10;
            for (int j = 0; j < n; ++j) {
                e[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rng.next() % (budget + 1));
                budget -= e[static_cast<std::size_t>(j)];
            }
            e.back() = static_cast<std::uint32_t>(rng.next() % (budget / 2 + 1));
            pe.add_term(e, ComplexRational(Rational(static_cast<long>(rng.next() % 9) - 4),
                                           Rational(static_cast<long>(rng.next() % 9) - 4)));
        }
        ParabolicPolynomial p(n, pe);
        ParabolicPolynomial sum(n);
        for (long k = 0; k <= 10; ++k) {
            ParabolicPolynomial pk = pi_k(p, k);
            sum = sum + pk;
            for (long j = 0; j <= 10; ++j) {
                ParabolicPolynomial pj = pi_k(pk, j);
                if (j == k ? !(pj == pk) : !pj.is_zero()) {
                    note = "projector algebra failed";
                    return false;
                }
            }
        }
        if (!(sum == p)) {
            note = "projector sum != id";
            return false;
        }
    }

    // annihilator-dimension duality for 5 descriptors at degree bound 6
    std::vector<SubspaceDescriptor> ds{{{2, 1}, 0}, {{1, 1}, 0}, {{3, 2, 2}, 2}, {{}, 0}, {{}, 1}};
    for (const auto& d : ds) {
        for (long degree = 0; degree <= 6; ++degree) {
            MonomialFrame frame(1, degree);
            std::size_t dim_p = 0, dim_member = 0;
            for (const auto& e : frame.monomials()) {
                if (ParabolicPolynomial::parabolic_degree_of(e) != degree) continue;
                ++dim_p;
                std::size_t k = static_cast<std::size_t>(ParabolicPolynomial::zeta_degree_of(e));
                if (e.back() < d.h(k)) ++dim_member;
            }
            if (dim_member + annihilator_basis(1, d, degree).size() != dim_p) {
                note = "annihilator duality failed";
                return false;
            }
        }
    }

    // circle-average quadrature matches symbolic pi_k to 1e-12 at 20 points
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng.next() % 2);
        ExactPoly pe(n + 1);
        for (int t = 0; t < 5; ++t) {
            Exponents e(static_cast<std::size_t>(n) + 1, 0);
            long budget = 6;
            for (int j = 0; j < n; ++j) {
                e[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(rng.next() % (budget + 1));
                budget -= e[static_cast<std::size_t>(j)];
            }
            e.back() = static_cast<std::uint32_t>(rng.next() % (budget / 2 + 1));
            pe.add_term(e, ComplexRational(Rational(static_cast<long>(rng.next() % 9) - 4),
                                           Rational(1, 2)));
        }
        ParabolicPolynomial p(n, pe);
        long deg = std::max<long>(p.parabolic_degree(), 1);
        SiegelPoint pt = random_interior_point(rng, n);
        for (long k = 0; k <= 3; ++k) {
            std::size_t N = static_cast<std::size_t>(4 * (k + deg) + 4);
            Complex acc = 0.0;
            for (std::size_t j = 0; j < N; ++j) {
                double th = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(N);
                std::vector<Complex> xs(pt.zeta());
                for (auto& c : xs) c *= std::polar(1.0, -th);
                xs.push_back(pt.z());
                acc += std::polar(1.0, k * th) * p.poly().eval(xs);
            }
            acc /= static_cast<double>(N);
            Complex sym = pi_k(p, k).eval(pt);
            worst = std::max(worst, std::abs(acc - sym) / std::max(1.0, std::abs(sym)));
        }
    }
    if (worst > 1e-12) {
        note = "quadrature cross-check " + sci(worst);
        return false;
    }
    note = "projectors exact; duality holds; quadrature max err " + sci(worst);
    return true;
}

// --- 10: negative controls -------------------------------------------------------

bool criterion_negative_controls(std::string& note) {
    // (a) perturbing the iota phase by e^{0.1i} must fail criterion 2's check
    PhaseConvention bad;
    bad.iota_phase_perturbation = 0.1;
    std::string sub;
    if (criterion_invariance(sub, bad, 1e-9)) {
        note = "perturbed phase convention went undetected";
        return false;
    }
    // (b) descriptor (1,2,...) is rejected
    if (validate_descriptor(SubspaceDescriptor{{1, 2}, 2}).valid) {
        note = "(1,2,...) accepted";
        return false;
    }
    // (c) s = 0 nonconstant ball norm reports INFINITE
    if (!ball_norm_as(BallPolynomial::coordinate(0, 0), 0.0).infinite) {
        note = "s=0 nonconstant norm not INFINITE";
        return false;
    }
    note = "perturbed phase detected; bad step rejected; s=0 branch INFINITE";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "Wallach threshold scan", 30.0, [](std::string& s) { return criterion_wallach(s); }},
        {2, "kernel invariance along words", 10.0,
         [](std::string& s) { return criterion_invariance(s, default_phase_convention(), 1e-9); }},
        {3, "Cayley kernel transfer", 5.0, [](std::string& s) { return criterion_transfer(s); }},
        {4, "norm-formula cross-validation", 5.0, [](std::string& s) { return criterion_norms(s); }},
        {5, "affine intertwining (exact)", 30.0,
         [](std::string& s) { return criterion_affine_intertwine(s); }},
        {6, "inversion intertwining", 5.0, [](std::string& s) { return criterion_inversion(s); }},
        {7, "derivative-kernel coefficient", 30.0, [](std::string& s) { return criterion_gamma(s); }},
        {8, "invariant-subspace lattice", 60.0, [](std::string& s) { return criterion_lattice(s); }},
        {9, "projector algebra and annihilators", 30.0,
         [](std::string& s) { return criterion_projectors(s); }},
        {10, "negative controls", 30.0,
         [](std::string& s) { return criterion_negative_controls(s); }},
    };

    bool all_ok = true;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& ex) {
            detail = std::string("exception: ") + ex.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            ok = false;
            detail += " [over " + std::to_string(c.budget_seconds) + "s budget]";
        }
        std::printf("criterion %2d [%-36s] %s (%.2fs)%s%s\n", c.id, c.label,
                    ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : " -- ", detail.c_str());
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
