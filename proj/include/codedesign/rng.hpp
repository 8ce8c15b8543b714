#ifndef CODEDESIGN_RNG_HPP
#define CODEDESIGN_RNG_HPP

#include <cstdint>
#include <vector>

namespace codedesign {

// Counted splitmix64 stream. State is (seed, counter), so a stream can be
// re-derived at any offset; parallel consumers fork substreams with fork()
// and get the same values a serial run would hand them.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(mix(seed ^ 0x9e3779b97f4a7c15ull) ^ mix(stream + 0x243f6a8885a308d3ull)) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Unbiased draw from [0, bound) by masked rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~0ull >> countl_zero(bound - 1);
        for (;;) {
            std::uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    DetRng fork(std::uint64_t stream) const { return DetRng(state_, stream); }

    // k distinct values from [0, n), order-sensitive (partial Fisher-Yates).
    std::vector<std::uint64_t> sample_distinct(std::uint64_t n, std::size_t k) {
        std::vector<std::uint64_t> pool(n);
        for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
        std::vector<std::uint64_t> out;
        out.reserve(k);
        for (std::size_t i = 0; i < k && i < pool.size(); ++i) {
            std::uint64_t j = i + next_below(pool.size() - i);
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    static int countl_zero(std::uint64_t v) {
        if (v == 0) return 64;
        return __builtin_clzll(v);
    }

    std::uint64_t state_;
};

}  // namespace codedesign

#endif
