#ifndef VTB_PRNG_HPP
#define VTB_PRNG_HPP

#include <cstdint>

namespace vtb {

/// SplitMix64 generator (Steele, Lea, Flood 2014). Chosen because its output
/// is fully specified by integer arithmetic, so identical seeds give
/// bit-identical streams on every platform, unlike the distributions of
/// <random>.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return (next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

/// Derives the seed of an independent substream. Stream k of a master seed is
/// SplitMix64(stream_seed(master, k)); the scramble keeps nearby stream
/// indices uncorrelated.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) {
  SplitMix64 g(master);
  std::uint64_t base = g.next();
  SplitMix64 h(base ^ (0xD1B54A32D192ED03ull * (stream + 1)));
  return h.next();
}

}  // namespace vtb

#endif
