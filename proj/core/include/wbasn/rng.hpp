#pragma once

#include <cstdint>

namespace wbasn {

// Deterministic randomness. std::random distributions are not bit-portable
// across standard library implementations, so all draws go through SplitMix64
// with a hand-rolled 53-bit uniform. One master seed derives independent
// sub-streams (placement, traffic, mobility, cluster-head election) so that
// changing one knob does not perturb draws made by the others.

enum class Substream : std::uint64_t {
    Placement = 1,
    Traffic = 2,
    Mobility = 3,
    ClusterHead = 4,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Sequential stream of pseudo-random values.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t substream_key(std::uint64_t master_seed, Substream which) {
    return splitmix64(master_seed ^ (0x517cc1b727220a95ULL * static_cast<std::uint64_t>(which)));
}

inline RandomStream substream(std::uint64_t master_seed, Substream which) {
    return RandomStream(substream_key(master_seed, which));
}

/// Counter-based draw: a pure function of (seed, stream, round, node).
/// Per-round Bernoulli decisions use this so the draw for one node never
/// depends on how many draws other nodes consumed.
inline double hashed_uniform01(std::uint64_t master_seed, Substream which,
                               std::uint64_t round, std::uint64_t node) {
    std::uint64_t h = substream_key(master_seed, which);
    h = splitmix64(h ^ splitmix64(round));
    h = splitmix64(h ^ splitmix64(node));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

} // namespace wbasn
