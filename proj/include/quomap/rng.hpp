#pragma once

#include <cstdint>
#include <initializer_list>

namespace quomap {

// splitmix64. Chosen over std::mt19937_64 so that streams derived from
// (seed, digest) pairs are cheap to fork and the byte-identical-output
// contract does not depend on distribution adaptors.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, m). m = 0 is a caller bug; returns 0.
    std::uint64_t below(std::uint64_t m) { return m == 0 ? 0 : next() % m; }

    bool coin() { return next() & 1; }

  private:
    std::uint64_t state_;
};

// FNV-1a fold of several words; used to derive per-call RNG streams.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : parts) {
        for (int i = 0; i < 8; ++i) {
            h ^= (w >> (8 * i)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

}  // namespace quomap
