#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace udmis {

// All randomness goes through std::mt19937_64, whose output sequence is
// fixed by the C++ standard. The standard distributions are not portable
// across library implementations, so the conversions below are done by
// hand. Changing any of them changes every generated instance: bump
// kRngVersion when doing so.
inline constexpr std::string_view kRngVersion = "mt19937_64/udmis-dist-v1";

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, bound) by rejection on the top bits.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const int bits = std::bit_width(bound - 1);
        while (true) {
            std::uint64_t r = engine_() >> (64 - bits);
            if (r < bound) return r;
        }
    }

    // Fisher-Yates, from the back.
    template <class T>
    void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

    // k distinct indices from [0, n), in the order drawn (partial
    // Fisher-Yates).
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + below(n - i)]);
        idx.resize(k);
        return idx;
    }

  private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Order-sensitive hash of 64-bit words, used to derive per-cell seeds.
inline std::uint64_t hash_words(std::span<const std::uint64_t> words) {
    std::uint64_t h = 0x6a09e667f3bcc908ULL;
    for (auto w : words) h = mix64(h ^ mix64(w));
    return h;
}

inline std::uint64_t hash_string(std::string_view s) {
    // FNV-1a, then mixed.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return mix64(h);
}

}  // namespace udmis
