#include <doctest.h>

#include <algorithm>
#include <random>

#include "b3/braid.hpp"

using namespace b3;

namespace {

BandWord W(const char* text) { return parse_word(text); }

BandWord random_word(std::mt19937_64& rng, int len) {
  BandWord w;
  for (int i = 0; i < len; ++i)
    w.push_back(Gen::from_code(static_cast<uint8_t>(rng() % 6)));
  return w;
}

}  // namespace

TEST_CASE("parse_word expands tokens and exponents") {
  BandWord w = W("a1 a2^-1 a3");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Gen(1, 1));
  CHECK(w[1] == Gen(2, -1));
  CHECK(w[2] == Gen(3, 1));

  BandWord s = W("s1 s2^-3");
  REQUIRE(s.size() == 4);
  CHECK(s[0] == Gen(1, 1));
  CHECK(s[1] == Gen(2, -1));
  CHECK(s[2] == Gen(2, -1));
  CHECK(s[3] == Gen(2, -1));

  CHECK(W("").empty());
  CHECK(W("   ").empty());
  CHECK(W("a1^0").empty());
}

TEST_CASE("parse_word rejects malformed input") {
  CHECK_THROWS_AS(W("b1"), SyntaxError);
  CHECK_THROWS_AS(W("a4"), SyntaxError);
  CHECK_THROWS_AS(W("s3"), SyntaxError);
  CHECK_THROWS_AS(W("a1^"), SyntaxError);
  CHECK_THROWS_AS(W("a1^+2"), SyntaxError);
  CHECK_THROWS_AS(W("a1x"), SyntaxError);
  CHECK_THROWS_AS(W("a"), SyntaxError);
}

TEST_CASE("render_word round-trips through the grammar") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    BandWord w = random_word(rng, static_cast<int>(rng() % 10));
    CHECK(parse_word(render_word(w)) == w);
  }
  CHECK(render_word(W("a2^-2 a1^2")) == "a2^-2 a1^2");
  CHECK(render_word(BandWord{}) == "");
}

TEST_CASE("artin/band conversion") {
  ArtinWord aw = {{2, 1}, {1, 1}};
  CHECK(artin_band_convert(aw) == W("a2 a1"));

  CHECK(band_artin_convert(W("a3")) == ArtinWord{{2, 1}, {1, 1}, {2, -1}});
  CHECK(band_artin_convert(W("a3^-1")) == ArtinWord{{2, 1}, {1, -1}, {2, -1}});

  // Artin -> band -> Artin is the identity.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    ArtinWord u;
    for (int i = 0; i < static_cast<int>(rng() % 8); ++i)
      u.push_back({1 + static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1});
    CHECK(band_artin_convert(artin_band_convert(u)) == u);
  }
}

TEST_CASE("invert_word") {
  CHECK(invert_word(W("a1 a2^-1")) == W("a2 a1^-1"));
  CHECK(invert_word(BandWord{}).empty());
  CHECK(invert_word(W("a2 a1 a2 a1")) == W("a1^-1 a2^-1 a1^-1 a2^-1"));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    BandWord w = random_word(rng, static_cast<int>(rng() % 10));
    CHECK(invert_word(invert_word(w)) == w);
  }
}

TEST_CASE("closure_components") {
  CHECK(closure_components(W("a1")) == 2);
  CHECK(closure_components(BandWord{}) == 3);
  CHECK(closure_components(W("a2 a1 a2 a1")) == 1);
  CHECK(closure_components(W("a2^-2 a1^2")) == 3);
}

TEST_CASE("closure_components is rotation- and inversion-invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    BandWord w = random_word(rng, 1 + static_cast<int>(rng() % 9));
    const int c = closure_components(w);
    BandWord r = w;
    std::rotate(r.begin(), r.begin() + static_cast<long>(rng() % w.size()),
                r.end());
    CHECK(closure_components(r) == c);
    CHECK(closure_components(invert_word(w)) == c);
  }
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(W("a1 a2 a2^-1 a1")) == W("a1 a1"));
  CHECK(free_reduce(W("a1 a1^-1")).empty());
  CHECK(free_reduce(W("a1 a2 a3")) == W("a1 a2 a3"));
  CHECK(free_reduce(W("a1 a2 a3 a3^-1 a2^-1 a1^-1")).empty());

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    BandWord w = random_word(rng, static_cast<int>(rng() % 12));
    BandWord r = free_reduce(w);
    CHECK(free_reduce(r) == r);  // idempotent
    CHECK(r.size() <= w.size());
    CHECK(closure_components(r) == closure_components(w));
  }
}

TEST_CASE("shift_word relabels cyclically and preserves components") {
  CHECK(shift_word(W("a1 a2^-1"), 1) == W("a2 a3^-1"));
  CHECK(shift_word(W("a3"), 1) == W("a1"));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    BandWord w = random_word(rng, static_cast<int>(rng() % 8));
    CHECK(shift_word(shift_word(w, 1), 2) == w);
    CHECK(closure_components(shift_word(w, 1)) == closure_components(w));
  }
}
