#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace degcorr {

/// SplitMix64 output finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derive the seed of an independent substream from a root seed and a path of
/// indices, e.g. {replica} or {generation, edge_class}. Each path component
/// is folded in with a distinct odd multiplier so that {a, b} and {b, a}
/// produce unrelated seeds.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t h = mix64(root);
    std::uint64_t salt = 0xD1B54A32D192ED03ULL;
    for (std::uint64_t component : path) {
        h = mix64(h ^ (component * salt));
        salt += 0x9E3779B97F4A7C16ULL;
    }
    return h;
}

/// Seeded random stream. The engine is mt19937_64 (fully specified by the
/// standard); bounded integers use Lemire's multiply-shift rejection so that
/// draws are identical across standard library implementations.
__extension__ typedef unsigned __int128 uint128;

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        uint128 product = static_cast<uint128>(engine_()) * bound;
        auto low = static_cast<std::uint64_t>(product);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                product = static_cast<uint128>(engine_()) * bound;
                low = static_cast<std::uint64_t>(product);
            }
        }
        return static_cast<std::uint64_t>(product >> 64);
    }

    /// Uniform integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

private:
    std::mt19937_64 engine_;
};

/// Stream for ensemble member `replica_index` of a run seeded with `seed`.
inline RandomStream replica_stream(std::uint64_t seed, std::uint64_t replica_index) {
    return RandomStream(derive_seed(seed, {replica_index}));
}

}  // namespace degcorr
