#pragma once

#include <cmath>
#include <cstdint>

namespace vecopt {

// Deterministic 64-bit generator (splitmix64). Kept self-contained so that
// sampled sequences are stable across standard library versions; std
// distributions are implementation-defined and would break the byte-exact
// reproducibility contract.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    uint64_t below(uint64_t n) { return n ? next_u64() % n : 0; }

    // Derive an independent stream, e.g. one per iteration or region.
    static uint64_t derive(uint64_t seed, uint64_t salt) {
        Rng r(seed ^ (0x632be59bd9b4e019ULL * (salt + 1)));
        return r.next_u64();
    }

private:
    uint64_t state_;
};

}  // namespace vecopt
