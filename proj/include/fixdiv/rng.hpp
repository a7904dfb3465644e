// SplitMix64: the sampled-mode and test-instance generator.  Hand-rolled so
// that a seed produces the same stream on every platform.

#pragma once

#include <cstdint>

namespace fixdiv {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [lo, hi]; bias is irrelevant for sampling duty.
    long long range(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

private:
    std::uint64_t state_;
};

}  // namespace fixdiv
