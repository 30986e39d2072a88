#pragma once

#include <cstdint>

namespace eulerwalk {

/// PCG-XSH-RR 64/32 generator with an explicit stream selector.
///
/// The increment is derived from the stream id, so different stream ids
/// walk distinct permutation sequences from the same seed. Integer draws use
/// only fixed-width arithmetic, making sequences identical on every platform.
class SeededRng {
 public:
  SeededRng(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_(stream_id) {
    increment_ = (stream_id << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }

  std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + increment_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  /// Unbiased integer in [0, bound) (Lemire's multiply-and-reject).
  std::uint32_t below(std::uint32_t bound) {
    std::uint64_t m = static_cast<std::uint64_t>(next_u32()) * bound;
    auto low = static_cast<std::uint32_t>(m);
    if (low < bound) {
      const std::uint32_t threshold = (0u - bound) % bound;
      while (low < threshold) {
        m = static_cast<std::uint64_t>(next_u32()) * bound;
        low = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32u);
  }

  // UniformRandomBitGenerator surface, for use with <algorithm>.
  using result_type = std::uint32_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return 0xffffffffu; }
  result_type operator()() { return next_u32(); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_ = 0;
  std::uint64_t increment_ = 1;
};

}  // namespace eulerwalk
