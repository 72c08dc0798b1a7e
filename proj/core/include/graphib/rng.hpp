#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace graphib {

// Deterministic random source. std::mt19937_64 has a fully specified state
// sequence, but the std distributions do not, so uniform/normal/shuffle are
// pinned here; the same seed gives the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();                      // [0, 1), 53-bit mantissa
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // Box-Muller, standard normal
  std::size_t uniform_index(std::size_t n);  // unbiased draw from {0..n-1}

  template <typename T>
  void shuffle(std::vector<T>& v) {
    // Fisher-Yates
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  // Independent substream (for per-fold RNGs derived from one run seed).
  Rng fork(std::uint64_t stream) const;

  // Full state round-trip; used by resumable training checkpoints.
  std::string serialize() const;
  static Rng deserialize(const std::string& text);

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace graphib
