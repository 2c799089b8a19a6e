#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hyperorder::detail {

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Fixed-width bit vector over [0, bits).
class DenseBits {
 public:
  DenseBits() = default;
  explicit DenseBits(std::size_t bits) : words_(words_for(bits), 0) {}

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  // Sets bit i, returns true if it was clear.
  bool insert(std::size_t i) {
    auto& w = words_[i >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    const bool fresh = (w & bit) == 0;
    w |= bit;
    return fresh;
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const DenseBits&, const DenseBits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct DenseBitsHash {
  std::size_t operator()(const DenseBits& b) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (auto w : b.words()) {
      h ^= w + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hyperorder::detail
