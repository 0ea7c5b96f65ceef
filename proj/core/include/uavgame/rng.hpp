#pragma once

#include <cstdint>

namespace uavgame {

/// splitmix64: the documented generator behind every randomized path in this
/// project. Chosen so traces are reproducible across implementations from a
/// single recorded 64-bit seed; split() derives independent child streams.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Independent child stream for worker `index`.
    SplitMix64 split(std::uint64_t index) {
        SplitMix64 fork(next() ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        return fork;
    }

  private:
    std::uint64_t state_;
};

}  // namespace uavgame
