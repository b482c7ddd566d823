#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace pgw {

// mt19937_64 with hand-rolled transforms so that draws are identical across
// standard libraries (std:: distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // (0, 1]
  double uniform_pos() { return 1.0 - uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double t = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  // Uniform on [0, bound), rejection-sampled.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t lim = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do v = engine_();
    while (v >= lim);
    return v % bound;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// splitmix64 mix of (master, stream): independent substream seeds.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace pgw
