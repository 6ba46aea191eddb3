#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "b3/errors.hpp"

namespace b3 {

// One letter of a 3-braid word over the band generators a1, a2, a3 and their
// inverses (a1 = s1, a2 = s2, a3 = s2 s1 s2^-1). Packed as
// code = 2*(index-1) + (sign < 0), so byte order equals the word order used
// throughout: a1 < a1^-1 < a2 < a2^-1 < a3 < a3^-1.
class Gen {
 public:
  Gen() = default;
  Gen(int index, int sign);

  static Gen from_code(uint8_t code);

  int index() const { return code_ / 2 + 1; }
  int sign() const { return (code_ & 1) ? -1 : 1; }
  uint8_t code() const { return code_; }

  Gen inverse() const { return from_code(code_ ^ 1); }
  // Relabel a_i -> a_{i+by} (indices mod 3), keeping the sign. This is
  // conjugation by a power of alpha, so it preserves the closure.
  Gen shifted(int by) const;

  friend bool operator==(Gen a, Gen b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(Gen a, Gen b) {
    return a.code_ <=> b.code_;
  }

 private:
  uint8_t code_ = 0;
};

// A word over the signed band generators; exponents are always expanded to
// single letters, so l(w) == w.size(). The empty word is allowed.
using BandWord = std::vector<Gen>;

// One letter over the Artin generators s1, s2.
struct ArtinGen {
  int index;  // 1 or 2
  int sign;   // +1 or -1
  friend bool operator==(const ArtinGen&, const ArtinGen&) = default;
};

using ArtinWord = std::vector<ArtinGen>;

// Permutation of {1,2,3}. image(i) is where the strand at position i ends.
class Perm3 {
 public:
  Perm3();  // identity
  static Perm3 transposition(int a, int b);

  int image(int i) const { return img_[i - 1]; }
  // Apply this first, then other: the convention is the word read left to
  // right acting on strand positions.
  Perm3 then(const Perm3& other) const;
  int cycle_count() const;

  friend bool operator==(const Perm3&, const Perm3&) = default;

 private:
  uint8_t img_[3];
};

// Grammar: word := (token (WS token)*)?
//          token := ("a"|"s") digit ("^" "-"? digit+)?
// digit in {1,2,3} for a-tokens, {1,2} for s-tokens. Both alphabets may be
// mixed in one string. Exponent n expands to |n| letters of sign(n); n = 0
// expands to nothing. Throws SyntaxError on anything else.
BandWord parse_word(std::string_view text);

// Inverse of parse_word, run-length compressed ("a2^-2 a1^2"). The empty
// word renders as "".
std::string render_word(const BandWord& w);
std::string render_artin(const ArtinWord& w);

// s_i^e -> a_i^e for i in {1,2}.
BandWord artin_band_convert(const ArtinWord& w);
// a1 -> s1, a2 -> s2, a3 -> s2 s1 s2^-1 (inverse letters analogously);
// band_artin_convert(artin_band_convert(w)) == w.
ArtinWord band_artin_convert(const BandWord& w);

// Reversed word with all signs flipped; an involution.
BandWord invert_word(const BandWord& w);

// a1 -> (1 2), a2 -> (2 3), a3 -> (1 3), sign-independent, composed left to
// right.
Perm3 closure_permutation(const BandWord& w);
// Number of components of the braid closure = cycle count, in {1,2,3}.
int closure_components(const BandWord& w);

// Deletes adjacent inverse pairs until none remain.
BandWord free_reduce(const BandWord& w);

// Relabel every letter a_i -> a_{i+by}; closure unchanged.
BandWord shift_word(const BandWord& w, int by);

}  // namespace b3
