#pragma once

#include <cstdint>
#include <random>

namespace gsee {

// splitmix64 step; used only to expand (seed, stream id) pairs into seed
// material for independent mt19937_64 streams.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stage-separating seed derivation: stages of one run get unrelated block
// streams by tagging the master seed before handing it to RandomStream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t s = seed ^ (tag * 0xd1342543de82ef95ULL);
    return splitmix64_next(s);
}

// Deterministic random stream addressable by (master seed, stream id).
// Two streams with different ids are statistically independent, and the
// mapping is fixed by the C++ standard (mt19937_64 + seed_seq), so results
// are reproducible across platforms and across worker counts as long as
// stream ids are assigned by position, not by thread.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id) {
        std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + stream_id * 0x9e3779b97f4a7c15ULL);
        std::uint32_t material[8];
        for (int i = 0; i < 4; ++i) {
            std::uint64_t w = splitmix64_next(s);
            material[2 * i] = static_cast<std::uint32_t>(w);
            material[2 * i + 1] = static_cast<std::uint32_t>(w >> 32);
        }
        std::seed_seq seq(material, material + 8);
        engine_.seed(seq);
    }

    // Uniform on the open interval (0, 1); never returns 0 or 1, so values
    // are always safe as arguments to log() and inverse CDFs.
    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform sign, +1 or -1.
    int sign() { return (engine_() & 1) ? 1 : -1; }

    // Bernoulli trial: true with probability p.
    bool bernoulli(double p) { return uniform01() < p; }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace gsee
