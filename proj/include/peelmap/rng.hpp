#pragma once

#include <cmath>
#include <cstdint>

namespace peelmap {

// Seedable, splittable generator (splitmix64 core). Splitting derives an
// independent child stream from the parent state and a spawn counter, so a
// lazily evaluated hole fill consumes its own stream and cannot perturb the
// parent's sequence.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : state_(mix(seed ^ 0x9e3779b97f4a7c15ull)) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Uniform in [0,1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in {0,...,n-1} without modulo bias.
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= threshold) return x % n;
        }
    }

    Rng split() {
        std::uint64_t child_seed = mix(state_ ^ mix(0xb5ad4eceda1ce2a9ull + (++spawned_)));
        return Rng(child_seed);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
    std::uint64_t spawned_ = 0;
};

}  // namespace peelmap
