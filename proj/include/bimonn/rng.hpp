#ifndef BIMONN_RNG_HPP
#define BIMONN_RNG_HPP

#include <cstdint>
#include <random>

namespace bimonn {

/// splitmix64 step; used to derive independent sub-seeds from (seed, index).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic engine for stream element `index` of stream `seed`.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  s ^= index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL;
  std::uint64_t b = splitmix64(s);
  return std::mt19937_64(a ^ (b + 0x9E3779B97F4A7C15ULL));
}

}  // namespace bimonn

#endif  // BIMONN_RNG_HPP
