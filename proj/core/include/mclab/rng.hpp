#ifndef MCLAB_RNG_HPP
#define MCLAB_RNG_HPP

#include <cstdint>

namespace mclab {

// Counter-based SplitMix64 stream. Trial streams are derived from a master
// seed by a documented formula (see trial_stream below) so that ports in
// other languages reproduce the same draws from the same seed.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    }

    // Uniform integer in [0, bound) by rejection-free multiply-shift; bound
    // must be > 0. Bias is < 2^-32 for desk-scale bounds.
    uint64_t next_below(uint64_t bound) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

private:
    uint64_t state_;
};

// Stream key for (n, trial) pairs: high 32 bits n, low 32 bits trial.
inline uint64_t stream_key(uint64_t n, uint64_t trial) {
    return (n << 32) | (trial & 0xFFFFFFFFull);
}

// Deterministic per (seed, key) stream: SplitMix64 seeded with
// seed + GOLDEN * (key + 1), GOLDEN = 0x9E3779B97F4A7C15.
inline SplitMix64 trial_stream(uint64_t seed, uint64_t key) {
    return SplitMix64(seed + 0x9E3779B97F4A7C15ull * (key + 1));
}

} // namespace mclab

#endif
