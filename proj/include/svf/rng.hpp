#pragma once

#include <cstdint>

namespace svf {

// splitmix64: tiny, portable, identical output everywhere. Seeded suites
// derive one stream per instance as Rng(seed, index).
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}
    Rng(std::uint64_t seed, std::uint64_t index) : state(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long int_in(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

}  // namespace svf
