#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace isk {

// Identifier recorded in output metadata so runs can be replayed across
// builds. mt19937_64 is pinned by the C++ standard; the bounded draw below
// uses rejection sampling instead of std::uniform_int_distribution, whose
// output is implementation-defined.
inline constexpr const char* kRngId = "mt19937_64/rej1";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-sample seed for (master seed, graph size, sample index). Stable so a
// single failed sample can be rerun in isolation.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t size,
                                 std::uint64_t sample) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h + size);
  h = splitmix64(h + sample);
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform draw from [0, bound). bound > 0. Unbiased: draws above the
  // largest multiple of bound are rejected.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % bound;
  }

  // In-place Fisher-Yates (std::shuffle is implementation-defined).
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace isk
