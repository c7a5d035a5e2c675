// Deterministic pseudorandom streams for the sampling experiments.
//
// Generator: xoshiro256** (Blackman/Vigna), state seeded through the
// splitmix64 finalizer. Stream k of master seed m starts from
// splitmix64(m XOR golden*(k+1)); the derivation is a pure function of
// (m, k), so a run partitioned over any number of workers draws the same
// values per task.
#pragma once

#include <array>
#include <cstdint>

namespace littlewood {

inline constexpr char kRngName[] = "xoshiro256**/splitmix64-streams/v1";

struct SplitMix64 {
  uint64_t state = 0;

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& w : s_) w = sm.next();
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // +1 or -1, one generator output per draw (top bit decides).
  int next_sign() { return (next() >> 63) ? -1 : 1; }

  // Uniform in [0, bound), bound >= 1, by rejection.
  uint64_t below(uint64_t bound) {
    const uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<uint64_t, 4> s_;
};

inline Xoshiro256 derive_stream(uint64_t master, uint64_t task) {
  SplitMix64 sm{master ^ (0x9E3779B97F4A7C15ull * (task + 1))};
  return Xoshiro256(sm.next());
}

}  // namespace littlewood
