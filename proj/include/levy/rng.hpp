#pragma once

#include <cmath>
#include <cstdint>

namespace levy {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Reproducible substream generator: identical (seed, stream) gives identical
/// draws on every platform; distinct stream indices give independent substreams.
/// xoshiro256++ core, state derived from (seed, stream) through splitmix64.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {
    std::uint64_t init = seed ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    for (auto& s : s_) s = detail::splitmix64(init);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform on the open interval (0,1); never returns an endpoint.
  double uniform01() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  /// Uniform angle on (-pi/2, pi/2).
  double uniform_angle() { return (uniform01() - 0.5) * 3.14159265358979323846; }

  /// Unit-rate exponential.
  double exponential() { return -std::log(uniform01()); }

  /// Standard normal draw (two uniforms; the alpha=2 reduction of the stable
  /// variate transform, 2 sin(U) sqrt(E) ~ N(0,2), rescaled).
  double normal01() { return std::sin(uniform_angle()) * std::sqrt(2.0 * exponential()); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
  std::uint64_t seed_, stream_;
};

}  // namespace levy
