#pragma once

#include <cstdint>
#include <string_view>

namespace tsw {

// Deterministic splittable generator (splitmix64 core). Identical output on
// every platform; never touches global entropy.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), bias-free by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    int range(int lo, int hi) {  // inclusive
        return lo + (int)below((std::uint64_t)(hi - lo + 1));
    }

    // Independent child stream for a named purpose.
    Rng split(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ state;
        for (char c : label) {
            h ^= (unsigned char)c;
            h *= 0x100000001b3ull;
        }
        return Rng(h);
    }

    template <class T>
    void shuffle(T& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }
};

}  // namespace tsw
