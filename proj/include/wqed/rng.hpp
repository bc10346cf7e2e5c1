#pragma once

#include <cstdint>
#include <random>

namespace wqed {

// Photon trials are partitioned into fixed-size chunks; chunk c of a run
// seeded with s uses an engine seeded with stream_seed(s, c). Tallies are
// therefore independent of evaluation order or parallel schedule.
inline constexpr std::uint64_t kTrialChunk = 65536;

/// splitmix64 finalizer; good 64-bit avalanche, used only for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of the independent substream `stream` of a run seeded with `seed`.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream)
{
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

/// Uniform double in [0, 1) with 53 random bits. mt19937_64 is fully
/// specified by the standard, so streams are identical across platforms.
inline double uniform_double(std::mt19937_64& gen)
{
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_in(std::mt19937_64& gen, double lo, double hi)
{
    return lo + (hi - lo) * uniform_double(gen);
}

} // namespace wqed
