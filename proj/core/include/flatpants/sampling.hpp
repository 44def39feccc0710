#ifndef FLATPANTS_SAMPLING_HPP
#define FLATPANTS_SAMPLING_HPP

#include <array>
#include <cstdint>
#include <random>

#include "flatpants/params.hpp"

namespace flatpants {

/// Deterministic uniform source: mt19937_64 with the 53-bit mantissa trick,
/// so sequences are reproducible across platforms for a fixed seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int index(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }

  private:
    std::mt19937_64 engine_;
};

namespace detail {

inline std::array<double, 3> sample_triangle_lengths(Rng& rng, double lo, double hi, double slack) {
    for (;;) {
        std::array<double, 3> l = {rng.uniform(lo, hi), rng.uniform(lo, hi), rng.uniform(lo, hi)};
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
            ok = l[i] + slack <= l[(i + 1) % 3] + l[(i + 2) % 3];
        if (ok) return l;
    }
}

}  // namespace detail

/// Valid parameters with interior singularity, away from every wall:
/// lengths in [0.5, 2] with strict triangle slack, radii in [0.3, 2].
inline LengthRadiusParams sample_lr(Rng& rng) {
    LengthRadiusParams p;
    p.l = detail::sample_triangle_lengths(rng, 0.5, 2.0, 0.02);
    for (double& r : p.r) r = rng.uniform(0.3, 2.0);
    return p;
}

/// Like sample_lr but with tighter ranges, keeping sample graphs small for
/// mesh-based checks.
inline LengthRadiusParams sample_lr_compact(Rng& rng) {
    LengthRadiusParams p;
    p.l = detail::sample_triangle_lengths(rng, 0.8, 1.6, 0.05);
    for (double& r : p.r) r = rng.uniform(0.4, 1.2);
    return p;
}

/// Valid parameters with the singularity on boundary component `zero_at`.
inline LengthRadiusParams sample_lr_with_zero(Rng& rng, int zero_at) {
    LengthRadiusParams p = sample_lr(rng);
    p.r[zero_at % 3] = 0.0;
    return p;
}

/// Valid distance parameters (the image of sample_lr under the conversion).
inline DistanceParams sample_la(Rng& rng) { return lr_to_la(sample_lr(rng)); }

}  // namespace flatpants

#endif
