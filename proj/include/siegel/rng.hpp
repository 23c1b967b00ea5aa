#pragma once

#include <cmath>
#include <cstdint>

namespace siegel {

// Portable seeded generator used by every randomized suite. The update is the
// splitmix64 step (Steele-Lea-Vigna constants); reports are reproducible from
// (command, config, seed) across platforms, so the exact update matters and is
// documented in the README for cross-language reimplementation.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1), 53 mantissa bits
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller, cosine branch only: each deviate consumes exactly two
    // uniforms, which keeps the stream position independent of call pairing.
    double gaussian() {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::uint64_t state() const { return state_; }

  private:
    std::uint64_t state_;
};

// Per-task seed derivation for parallel scans: mixes the run seed with the
// task index through the splitmix finalizer so results do not depend on
// scheduling order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task_index) {
    std::uint64_t z = seed ^ (0xd1b54a32d192ed03ULL * (task_index + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace siegel
