#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace snapnet {

// SplitMix64 output mixer (Steele, Lea, Flood 2014).
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derive an independent stream seed from (seed, stream). Both arguments are
// mixed so generating work item i serially or in parallel gives identical
// output for that item.
inline uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  return mix64(mix64(seed + 0x9e3779b97f4a7c15ull) ^ mix64(stream + 0x6a09e667f3bcc909ull));
}

// Counter-based generator: the state advances by a fixed increment and the
// output is a mix of the counter (SplitMix64). Bit-stable across platforms;
// no libstdc++ distributions are used anywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  static Rng substream(uint64_t seed, uint64_t stream) { return Rng(derive_seed(seed, stream)); }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Unbiased integer in [0, n); rejection from a power-of-two mask.
  uint64_t next_below(uint64_t n) {
    const uint64_t mask = std::bit_ceil(n) - 1;
    uint64_t x;
    do {
      x = next_u64() & mask;
    } while (x >= n);
    return x;
  }

  double exponential(double rate) { return -std::log1p(-next_double()) / rate; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_below(i)]);
    }
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    shuffle(p);
    return p;
  }

 private:
  uint64_t state_;
};

}  // namespace snapnet
