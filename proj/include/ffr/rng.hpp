#pragma once

#include <cstdint>

namespace ffr {

/// SplitMix64. Sub-streams are derived from (seed, key) by mixing, so a
/// sub-seed never depends on the order in which other streams were drawn.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive(std::uint64_t seed, std::uint64_t key) {
        return mix(seed ^ mix(key + 0x9e3779b97f4a7c15ULL));
    }

    SplitMix64 split(std::uint64_t key) const { return SplitMix64(derive(state_, key)); }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return next(); }

private:
    std::uint64_t state_;
};

}  // namespace ffr
