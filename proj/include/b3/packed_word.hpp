#pragma once

#include <bit>
#include <cstdint>

#include "b3/braid.hpp"

namespace b3 {

// Band words packed into a uint64: a sentinel 1 bit followed by 3 bits per
// letter code, first letter in the highest occupied bits. Holds up to 21
// letters. For words of equal length, integer order equals the documented
// lexicographic word order (a1 < a1^-1 < a2 < ... < a3^-1).
using PackedWord = uint64_t;

inline constexpr int kMaxPackedLen = 21;
inline constexpr PackedWord kEmptyPacked = 1;

inline int packed_len(PackedWord p) { return (63 - std::countl_zero(p)) / 3; }

inline PackedWord pack_letters(const uint8_t* buf, int len) {
  PackedWord p = 1;
  for (int i = 0; i < len; ++i) p = (p << 3) | buf[i];
  return p;
}

inline int unpack_letters(PackedWord p, uint8_t* buf) {
  const int len = packed_len(p);
  for (int i = len - 1; i >= 0; --i) {
    buf[i] = static_cast<uint8_t>(p & 7);
    p >>= 3;
  }
  return len;
}

PackedWord pack_word(const BandWord& w);  // throws SearchBudgetExceeded if too long
BandWord unpack_word(PackedWord p);

struct PackedWordHash {
  size_t operator()(PackedWord x) const {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<size_t>(x ^ (x >> 31));
  }
};

}  // namespace b3
