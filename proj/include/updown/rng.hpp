#ifndef UPDOWN_RNG_HPP
#define UPDOWN_RNG_HPP

#include <array>
#include <cstdint>

namespace updown {

// Splittable counter-based generator (Philox 4x32, 10 rounds).  The state
// is a 64-bit key (the seed), a 64-bit stream id, and a 64-bit block
// counter; every (seed, stream, block) triple maps to 128 fresh bits, so
// restarting from the same seed reproduces the sequence bit for bit and
// distinct streams are independent by construction.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() {
    if (buffered_ == 0) refill();
    return buffer_[--buffered_];
  }

  // A generator over an independent stream derived from the same seed.
  CounterRng split(std::uint64_t stream) const { return CounterRng(seed_, stream); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  static std::pair<std::uint32_t, std::uint32_t> mulhilo(std::uint32_t a,
                                                         std::uint32_t b) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    return {static_cast<std::uint32_t>(p >> 32),
            static_cast<std::uint32_t>(p)};
  }

  void refill() {
    std::uint32_t c0 = static_cast<std::uint32_t>(block_);
    std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(stream_);
    std::uint32_t c3 = static_cast<std::uint32_t>(stream_ >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(seed_);
    std::uint32_t k1 = static_cast<std::uint32_t>(seed_ >> 32);
    for (int round = 0; round < 10; ++round) {
      auto [hi0, lo0] = mulhilo(0xD2511F53u, c0);
      auto [hi1, lo1] = mulhilo(0xCD9E8D57u, c2);
      std::uint32_t n0 = hi1 ^ c1 ^ k0;
      std::uint32_t n1 = lo1;
      std::uint32_t n2 = hi0 ^ c3 ^ k1;
      std::uint32_t n3 = lo0;
      c0 = n0; c1 = n1; c2 = n2; c3 = n3;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    ++block_;
    buffer_[0] = (static_cast<std::uint64_t>(c0) << 32) | c1;
    buffer_[1] = (static_cast<std::uint64_t>(c2) << 32) | c3;
    buffered_ = 2;
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

}  // namespace updown

#endif  // UPDOWN_RNG_HPP
