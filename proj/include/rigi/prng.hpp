#pragma once

#include <cstdint>
#include <vector>

namespace rigi {

// Deterministic splittable PRNG (splitmix64 core). Every random choice in the
// library flows from an explicit seed through one of these; there is no
// ambient entropy, so all generators are reproducible functions of their seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound); bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Inclusive integer range.
    int next_int(int lo, int hi) {
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Bernoulli with probability ~p (30-bit resolution).
    bool next_bool(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_below(1u << 30) < static_cast<std::uint64_t>(p * (1u << 30));
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Child stream derived from the original seed and a tag. Splitting does
    // not depend on how much of the parent stream has been consumed.
    SplitMix64 split(std::uint64_t tag) const {
        SplitMix64 mixer(seed_ ^ (0x632be59bd9b4e019ULL * (tag + 1)));
        const std::uint64_t a = mixer.next();
        const std::uint64_t b = mixer.next();
        return SplitMix64(a ^ (b << 1));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

} // namespace rigi
