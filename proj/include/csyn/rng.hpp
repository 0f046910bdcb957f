// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace csyn {

/// Seeded generator with platform-independent draws (the std distributions
/// are implementation-defined, so they are avoided for reproducible output).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    template <class It>
    void shuffle(It first, It last) {
        for (auto n = static_cast<std::uint64_t>(last - first); n > 1; --n) {
            std::swap(first[n - 1], first[below(n)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace csyn
