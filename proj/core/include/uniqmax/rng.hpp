#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace uniqmax {

/// SplitMix64 finalizer; used to expand seeds.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// xoshiro256** (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
   public:
    using result_type = std::uint64_t;

    explicit constexpr Xoshiro256(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) {
            word = splitmix64(sm);
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    friend constexpr bool operator==(const Xoshiro256&, const Xoshiro256&) = default;

   private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int r) { return (x << r) | (x >> (64 - r)); }

    std::array<std::uint64_t, 4> s_{};
};

/// Generator for replication `index` of a run seeded with `seed`. Depends
/// only on the pair, never on which worker runs the replication.
constexpr Xoshiro256 substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed;
    std::uint64_t key = splitmix64(state);
    state = key ^ (index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return Xoshiro256(splitmix64(state));
}

}  // namespace uniqmax
