#pragma once

#include <cmath>
#include <cstdint>

namespace orbitope {

/// splitmix64 stream with a hand-rolled Box-Muller normal. Self-contained so
/// sampled data is reproducible independent of the standard library's
/// distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    /// Derives an independent stream for (seed, index) pairs.
    static Rng for_index(uint64_t seed, uint64_t index) {
        Rng mix(seed ^ (0x94d049bb133111ebull * (index + 1)));
        mix.next_u64();
        return Rng(mix.next_u64());
    }

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in (0, 1).
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * M_PI * u2);
    }

private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace orbitope
