#pragma once

#include <cmath>
#include <cstdint>

namespace apg {

// Counter-based splittable stream: every (seed, stream) pair yields an
// independent splitmix64 sequence, so per-path streams are reproducible
// regardless of scheduling order.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        Rng r(0);
        r.state_ = mix(mix(seed + 0x632be59bd9b4e019ull) ^ mix(stream_id + 0x9e3779b97f4a7c15ull));
        return r;
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform on (0,1)
    double u01() {
        const std::uint64_t x = next_u64() >> 11;          // 53 bits
        return (static_cast<double>(x) + 0.5) * 0x1.0p-53; // in (0,1)
    }

    double exponential() { return -std::log(u01()); }

    // Box-Muller pair, one value cached
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = u01(), u2 = u01();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586476925286766559 * u2;
        cached_ = rad * std::sin(ang);
        have_cached_ = true;
        return rad * std::cos(ang);
    }

    long poisson(double mean) {
        if (!(mean > 0.0)) return 0;
        if (mean < 30.0) return poisson_inversion(mean);
        return poisson_ptrs(mean);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    long poisson_inversion(double mean) {
        const double limit = std::exp(-mean);
        long k = 0;
        double prod = u01();
        while (prod > limit) {
            ++k;
            prod *= u01();
        }
        return k;
    }

    // Hormann's PTRS transformed-rejection sampler
    long poisson_ptrs(double mean) {
        const double slam = std::sqrt(mean), llam = std::log(mean);
        const double b = 0.931 + 2.53 * slam;
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double vr = 0.9277 - 3.6224 / (b - 2.0);
        for (;;) {
            const double u = u01() - 0.5;
            const double v = u01();
            const double us = 0.5 - std::abs(u);
            const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= vr) return static_cast<long>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
                kf * llam - mean - std::lgamma(kf + 1.0))
                return static_cast<long>(kf);
        }
    }

    std::uint64_t state_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace apg
