#pragma once

#include <cstdint>

#include "ansig/permutation.hpp"

namespace ansig {

/// Counter-based generator: draw i of stream (seed, stream) is a pure
/// function of (seed, stream, i), so sharded sweeps reproduce exactly on
/// any platform. The mixing function is SplitMix64.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next() noexcept { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    /// Uniform integer in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) noexcept;

    std::uint64_t counter() const noexcept { return counter_; }

    static std::uint64_t mix(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Uniform element of S_n (Fisher-Yates).
Permutation random_permutation(int degree, CounterRng& rng);

/// Uniform element of A_n.
Permutation random_even_permutation(int degree, CounterRng& rng);

/// Stable 64-bit hash combining, used to derive per-cell seeds.
std::uint64_t hash_combine(std::uint64_t h, std::uint64_t v) noexcept;

}  // namespace ansig
