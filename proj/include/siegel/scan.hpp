#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "siegel/kernels.hpp"
#include "siegel/rng.hpp"

namespace siegel {

inline unsigned thread_budget() {
    if (const char* env = std::getenv("SIEGEL_RKHS_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Deterministic work distribution: task i writes slot i, so the output is
// independent of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    unsigned threads = std::min<std::size_t>(thread_budget(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

// Random interior cloud: Gaussian zeta, Gaussian Re z, log-uniform
// rho in [1e-2, 1e2]. Fully determined by the generator state.
inline std::vector<SiegelPoint> random_cloud(SplitMix64& rng, int n, std::size_t size) {
    std::vector<SiegelPoint> pts;
    pts.reserve(size);
    for (std::size_t j = 0; j < size; ++j) {
        std::vector<Complex> zeta(static_cast<std::size_t>(n));
        for (auto& c : zeta) c = Complex(rng.gaussian(), rng.gaussian());
        double re_z = rng.gaussian();
        double r = std::pow(10.0, rng.uniform(-2.0, 2.0));
        double zsq = norm_sq(zeta);
        pts.emplace_back(std::move(zeta), Complex(re_z, r + zsq));
    }
    return pts;
}

// Fixed two-point witness {(0,i),(0,2i)}; its B^{+1} Gram is
// [[1,3/2],[3/2,2]] with determinant -1/4, the deterministic negative
// certificate at s = -1.
inline std::vector<SiegelPoint> witness_cloud(int n) {
    std::vector<Complex> zero(static_cast<std::size_t>(n), 0.0);
    return {SiegelPoint(zero, Complex(0.0, 1.0)), SiegelPoint(zero, Complex(0.0, 2.0))};
}

struct WallachRow {
    double s = 0.0;
    double min_eigenvalue = 0.0; // worst over trials
    double norm_inf_at_min = 1.0;
    std::size_t witness_trial = 0;
    std::vector<SiegelPoint> witness_points;
    bool psd = false;
};

// Finite-section positivity scan of B^{-s} over random clouds. Trial 0 is the
// fixed witness cloud; trials >= 1 draw random clouds with per-task seeds, so
// the scan is reproducible for a given seed regardless of thread count.
// Finite clouds certify non-positivity only; psd = true is evidence for the
// Wallach ray, not proof.
inline std::vector<WallachRow> wallach_scan(int n, const std::vector<double>& s_grid,
                                            std::size_t trials, std::size_t cloud_size,
                                            std::uint64_t seed,
                                            double tol = default_psd_tolerance()) {
    if (cloud_size > 16) throw ParameterError("wallach_scan: cloud_size <= 16");
    if (trials < 1) throw ParameterError("wallach_scan: trials >= 1");
    if (n < 0 || n > 8) throw ParameterError("wallach_scan: 0 <= n <= 8");

    struct Cell {
        double min_eig = 0.0;
        double norm_inf = 1.0;
    };
    std::vector<Cell> cells(s_grid.size() * trials);

    parallel_for(cells.size(), [&](std::size_t task) {
        std::size_t si = task / trials;
        std::size_t trial = task % trials;
        std::vector<SiegelPoint> cloud;
        if (trial == 0) {
            cloud = witness_cloud(n);
        } else {
            SplitMix64 rng(derive_seed(seed, trial));
            cloud = random_cloud(rng, n, cloud_size);
        }
        KernelSpec spec{KernelKind::B_POWER, s_grid[si], n};
        GramReport rep = gram(spec, cloud, tol);
        cells[task] = {rep.min_eigenvalue, rep.norm_inf};
    });

    std::vector<WallachRow> rows;
    rows.reserve(s_grid.size());
    for (std::size_t si = 0; si < s_grid.size(); ++si) {
        WallachRow row;
        row.s = s_grid[si];
        row.min_eigenvalue = cells[si * trials].min_eig;
        row.norm_inf_at_min = cells[si * trials].norm_inf;
        row.witness_trial = 0;
        for (std::size_t trial = 1; trial < trials; ++trial) {
            const Cell& c = cells[si * trials + trial];
            if (c.min_eig < row.min_eigenvalue) {
                row.min_eigenvalue = c.min_eig;
                row.norm_inf_at_min = c.norm_inf;
                row.witness_trial = trial;
            }
        }
        if (row.witness_trial == 0) {
            row.witness_points = witness_cloud(n);
        } else {
            SplitMix64 rng(derive_seed(seed, row.witness_trial));
            row.witness_points = random_cloud(rng, n, cloud_size);
        }
        row.psd = row.min_eigenvalue >= -tol * std::max(1.0, row.norm_inf_at_min);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace siegel
