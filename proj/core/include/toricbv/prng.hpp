#pragma once

#include <cstdint>

namespace toricbv {

// SplitMix64. Hand-rolled so that seeded sampling is bit-identical across
// platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); bound must be positive. The modulo
    // bias is irrelevant at the sample counts used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

}  // namespace toricbv
