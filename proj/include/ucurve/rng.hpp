#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ucurve {

// Seeded random source shared by one search run. All stochastic choices of a
// run (bit visit order, adjacent selection, direction draws) consume this one
// stream, which is what makes runs reproducible from (seed, cost) alone.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling keeps the draw unbiased without relying on
        // distribution classes whose output differs across standard libraries
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % bound;
    }

    // Uniform real in [0, 1).
    double real01() {
        return (engine_() >> 11) * 0x1.0p-53;
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace ucurve
