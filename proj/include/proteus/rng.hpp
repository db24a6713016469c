#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace proteus {

// splitmix64 finalizer; decorrelates consecutive seeds.
inline std::uint64_t hash64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives the seed for substream `index` of `base_seed`.
inline std::uint64_t mix_seed(std::uint64_t base_seed, std::uint64_t index) {
    return hash64(base_seed ^ hash64(index + 1));
}

// Standard-normal sampler over mt19937_64 via Box-Muller.
// Draw sequence depends only on the seed, not on the platform's
// std::normal_distribution implementation.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1], u2 in [0,1)
        const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // Uniform draw from [0, n). Rejection-free for our purposes is not
    // required; rejection keeps the distribution exact.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    double next_unit() {  // [0,1)
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace proteus
