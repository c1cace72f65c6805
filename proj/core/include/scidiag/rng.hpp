#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "scidiag/hash.hpp"

namespace scidiag {

/// Deterministic RNG used everywhere randomness appears. mt19937_64 raw
/// outputs are portable across platforms; the helpers below avoid
/// std::uniform_int_distribution, whose mapping is implementation-defined.
using Rng = std::mt19937_64;

/// Seed derived from a master seed plus a string key (paper id, purpose tag)
/// so per-paper draws are independent of worker scheduling.
inline Rng seeded_rng(std::uint64_t master_seed, std::string_view key) {
    std::string material = std::to_string(master_seed) + "|" + std::string(key);
    return Rng(stable_hash64(material));
}

/// Unbiased uniform draw in [0, n) via rejection sampling.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return static_cast<std::size_t>(v % n);
}

inline bool coin_flip(Rng& rng) { return (rng() & 1u) != 0; }

/// Fisher-Yates with explicit draws; std::shuffle is not portable.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = uniform_index(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace scidiag
