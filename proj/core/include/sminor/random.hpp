#pragma once

#include <cstdint>

namespace sminor {

/// Counter-based SplitMix64 stream.
///
/// The i-th draw (i = 0, 1, ...) of the stream with seed s is
/// mix64(s + (i + 1) * 0x9E3779B97F4A7C15). Independent substreams are keyed by
/// substream_seed(s, index) = mix64(s ^ mix64(index + 0xD1B54A32D192ED03)).
class SplitMix64 {
public:
    static constexpr std::uint64_t gamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

    static constexpr std::uint64_t mix64(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index)
    {
        return mix64(seed ^ mix64(index + 0xD1B54A32D192ED03ULL));
    }

    std::uint64_t next() { return mix64(seed_ + (++counter_) * gamma); }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x = next();
        while (x >= limit)
            x = next();
        return x % bound;
    }

    [[nodiscard]] std::uint64_t draws() const { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace sminor
