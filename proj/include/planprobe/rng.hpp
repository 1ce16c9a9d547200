#pragma once

#include <cstdint>
#include <vector>

namespace planprobe {

// Deterministic seeded random source. splitmix64 keeps the stream fully
// specified (std distributions are implementation-defined, which would break
// byte-reproducible golden files).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Inclusive range [lo, hi].
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
  }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
  }

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& pool) {
    return pool[next_u64() % pool.size()];
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = next_u64() % i;
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent child stream; used to derive per-case seeds from a campaign
  // seed so parallel execution cannot change results.
  static uint64_t derive(uint64_t seed, uint64_t index) {
    Rng r(seed ^ (0x517cc1b727220a95ULL * (index + 1)));
    return r.next_u64();
  }

 private:
  uint64_t state_;
};

}  // namespace planprobe
