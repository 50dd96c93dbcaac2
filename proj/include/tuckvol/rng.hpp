#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace tuckvol {

// splitmix64 step; used to spread user-facing seeds and to combine
// (dimension, seed) pairs into independent engine seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ (b + 0x9e3779b97f4a7c15ULL));
}

// Deterministic generator with portable bounded draws. mt19937_64 output is
// specified by the standard; std::uniform_int_distribution is not, so bounded
// values are drawn by masked rejection instead.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(mix64(seed)) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: empty range");
        if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
        std::uint64_t mask = n - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            const std::uint64_t v = next_u64() & mask;
            if (v < n) return v;
        }
    }

    // Uniform over {+1,...,+d, -1,...,-d}.
    int tucker_label(std::size_t d) {
        const std::uint64_t v = below(2 * static_cast<std::uint64_t>(d));
        const int axis = static_cast<int>(v % d) + 1;
        return v < d ? axis : -axis;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace tuckvol
