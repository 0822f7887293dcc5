#pragma once

#include <cstdint>

namespace cubemap {

// splitmix64 stream. All sampling in the library goes through this instead of
// <random> distributions, whose output differs between standard libraries;
// identical seeds must give identical reports everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) via multiply-high; n >= 1.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Independent stream for sample #index of a run seeded with `seed`.
inline Rng rng_for_index(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0xd1342543de82ef95ULL * (index + 1)));
    r.next_u64();
    return r;
}

} // namespace cubemap
