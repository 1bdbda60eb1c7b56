#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "smae/util.hpp"

namespace smae {

inline uint64_t splitmix64_next(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// xoshiro256** with hand-rolled distributions. std:: distributions are
/// implementation-defined, so everything here maps raw bits directly to keep
/// outputs identical across compilers and platforms.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64_next(sm);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1).
  double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

  /// Uniform integer in [0, n), unbiased via rejection.
  uint64_t next_below(uint64_t n) {
    if (n == 0) return 0;
    const uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  uint64_t state_[4];
};

/// Master-seed fan-out: seed xor hash(role, graph index, epoch). Each
/// (role, graph, epoch) triple gets an independent stream so consumers can be
/// reordered or parallelized without perturbing each other's draws.
inline RngStream derive_stream(uint64_t master_seed, std::string_view role,
                               uint64_t graph_index = 0, uint64_t epoch = 0) {
  uint64_t key = fnv1a64(role);
  uint64_t sm = key ^ (graph_index * 0x9e3779b97f4a7c15ull);
  key = splitmix64_next(sm);
  sm = key ^ (epoch * 0xda942042e4dd58b5ull);
  key = splitmix64_next(sm);
  return RngStream(master_seed ^ key);
}

}  // namespace smae
