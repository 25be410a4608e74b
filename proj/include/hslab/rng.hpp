#ifndef HSLAB_RNG_HPP
#define HSLAB_RNG_HPP

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

namespace hslab {

/*
  Self-contained splitmix64-based generator. The standard <random>
  distributions are implementation-defined, which would break the
  bit-exact reproducibility contract of datasets and experiment runs,
  so sampling primitives are spelled out here.
*/
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound).
    uint64_t below(uint64_t bound) {
        assert(bound > 0);
        uint64_t threshold = (-bound) % bound;
        for (;;) {
            uint64_t r = next_u64();
            if (r >= threshold)
                return r % bound;
        }
    }

    using u128 = unsigned __int128;

    u128 below_u128(u128 bound) {
        assert(bound > 0);
        u128 threshold = (-bound) % bound;
        for (;;) {
            u128 r = (u128(next_u64()) << 64) | next_u64();
            if (r >= threshold)
                return r % bound;
        }
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double real() {
        return double(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; generates pairs, caches one.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = real();
        while (u1 <= 0.0)
            u1 = real();
        double u2 = real();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        cached_ = radius * std::sin(angle);
        has_cached_ = true;
        return radius * std::cos(angle);
    }

    template <typename T>
    void shuffle(std::vector<T> &values) {
        for (size_t i = values.size(); i > 1; --i) {
            size_t j = below(i);
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

inline uint64_t mix_seed(uint64_t value) {
    value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ull;
    value = (value ^ (value >> 27)) * 0x94d049bb133111ebull;
    return value ^ (value >> 31);
}

/*
  Counter-based seed derivation: stream (a, b, c) under a master seed.
  Used to give every sample index, problem size, and restart its own
  independent generator so generation order and worker count cannot
  change results.
*/
inline uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0,
                            uint64_t c = 0) {
    uint64_t s = mix_seed(master ^ 0x9e3779b97f4a7c15ull);
    s = mix_seed(s ^ (a + 0xa0761d6478bd642full));
    s = mix_seed(s ^ (b + 0xe7037ed1a0b428dbull));
    s = mix_seed(s ^ (c + 0x8ebc6af09c88c6e3ull));
    return s;
}

}

#endif
