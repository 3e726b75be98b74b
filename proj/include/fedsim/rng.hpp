#pragma once

// Deterministic randomness for the whole simulator. The generator is
// xoshiro256++ seeded through splitmix64, so the output sequence depends
// only on (seed, stream) and is identical across platforms. Independent
// child streams are derived with split(), never by sharing a generator.

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fedsim/errors.hpp"

namespace fedsim {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  return splitmix64(x);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace detail

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {
    std::uint64_t x = detail::mix64(seed, stream);
    for (auto& s : state_) s = detail::splitmix64(x);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // Child stream, a pure function of (seed, stream, label).
  SeededRng split(std::string_view label) const {
    return SeededRng(seed_, detail::mix64(stream_, detail::fnv1a64(label)));
  }
  SeededRng split(std::uint64_t label) const {
    return SeededRng(seed_, detail::mix64(stream_, label));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result =
        detail::rotl64(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return result;
  }

  // Uniform in [0, 1), 53-bit mantissa.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    if (!(lo < hi)) {
      throw ConfigError("uniform: lo must be < hi (got lo=" + std::to_string(lo) +
                        ", hi=" + std::to_string(hi) + ")");
    }
    return lo + (hi - lo) * next_double();
  }

  std::vector<double> uniform(std::size_t n, double lo, double hi) {
    if (!(lo < hi)) {
      throw ConfigError("uniform: lo must be < hi (got lo=" + std::to_string(lo) +
                        ", hi=" + std::to_string(hi) + ")");
    }
    std::vector<double> out(n);
    for (auto& v : out) v = lo + (hi - lo) * next_double();
    return out;
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double normal() {
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Uniform index in [0, n) without modulo bias (Lemire multiply-shift).
  std::uint64_t uniform_index(std::uint64_t n) {
    if (n == 0) throw ConfigError("uniform_index: n must be > 0");
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_index(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::array<std::uint64_t, 4> state_;
};

}  // namespace fedsim
