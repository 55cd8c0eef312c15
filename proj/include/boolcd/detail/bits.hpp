#pragma once

#include <bit>
#include <cstdint>
#include <span>

namespace boolcd::detail {

template <typename Fn>
void for_each_set_bit(std::span<const std::uint64_t> words, Fn&& fn) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      fn(w * 64 + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
}

inline std::size_t popcount_words(std::span<const std::uint64_t> words) {
  std::size_t n = 0;
  for (std::uint64_t w : words) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

inline std::size_t popcount_xor(std::span<const std::uint64_t> a,
                                std::span<const std::uint64_t> b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  }
  return n;
}

inline void or_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

}  // namespace boolcd::detail
