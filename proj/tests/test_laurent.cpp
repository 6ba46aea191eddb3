#include <doctest.h>

#include <random>

#include "b3/alexander.hpp"
#include "b3/braid.hpp"
#include "b3/laurent.hpp"

using namespace b3;

namespace {

BandWord W(const char* text) { return parse_word(text); }

LaurentPoly make(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p = p + LaurentPoly::term(e, c);
  return p;
}

BandWord random_word(std::mt19937_64& rng, int len) {
  BandWord w;
  for (int i = 0; i < len; ++i)
    w.push_back(Gen::from_code(static_cast<uint8_t>(rng() % 6)));
  return w;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly p = make({{1, 1}, {0, -1}, {-1, 1}});  // t - 1 + 1/t
  CHECK(p.min_exp() == -1);
  CHECK(p.max_exp() == 1);
  CHECK(p.coeff(0) == -1);
  CHECK(p.coeff(5) == 0);
  CHECK((p - p).is_zero());
  CHECK(p * LaurentPoly::one() == p);
  CHECK(p.shifted(2) == make({{3, 1}, {2, -1}, {1, 1}}));
  CHECK(p.reciprocal() == p);  // symmetric
  CHECK(p.eval_at_one() == 1);
  CHECK((-p) + p == LaurentPoly::zero());
  CHECK(p.str() == "t - 1 + t^-1");
}

TEST_CASE("divide_exact") {
  LaurentPoly d = make({{0, 1}, {1, 1}, {2, 1}});  // 1 + t + t^2
  LaurentPoly q = make({{-2, 1}, {0, 2}, {3, -5}});
  CHECK((q * d).divide_exact(d) == q);
  CHECK_THROWS_AS(make({{0, 1}, {1, 1}}).divide_exact(d), InexactDivision);
  CHECK_THROWS_AS(make({{0, 2}, {1, 2}, {2, 1}}).divide_exact(d),
                  InexactDivision);
  CHECK(LaurentPoly::zero().divide_exact(d).is_zero());
}

TEST_CASE("phi_matrix on generators matches the representation") {
  Mat2 s1 = phi_matrix(ArtinWord{{1, 1}});
  CHECK(s1.a == LaurentPoly::term(-1, -1));
  CHECK(s1.b.is_zero());
  CHECK(s1.c == LaurentPoly::term(-1, 1));
  CHECK(s1.d == LaurentPoly::one());

  CHECK(phi_matrix(ArtinWord{}) == Mat2::identity());

  Mat2 s1s2 = phi_matrix(ArtinWord{{1, 1}, {2, 1}});
  CHECK(s1s2.a == LaurentPoly::term(-1, -1));
  CHECK(s1s2.b == LaurentPoly::term(-1, -1));
  CHECK(s1s2.c == LaurentPoly::term(-1, 1));
  CHECK(s1s2.d.is_zero());

  // Inverse letters are exact matrix inverses.
  for (int idx : {1, 2}) {
    Mat2 m = phi_matrix(ArtinWord{{idx, 1}, {idx, -1}});
    CHECK(m == Mat2::identity());
  }
}

TEST_CASE("phi is multiplicative and faithful on small words") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    BandWord u = random_word(rng, static_cast<int>(rng() % 5));
    BandWord v = random_word(rng, static_cast<int>(rng() % 5));
    BandWord uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(phi_matrix(uv) == phi_matrix(u) * phi_matrix(v));
  }
  // The defining relations hold: a2 a1 = a3 a2 = a1 a3.
  CHECK(phi_matrix(W("a2 a1")) == phi_matrix(W("a3 a2")));
  CHECK(phi_matrix(W("a2 a1")) == phi_matrix(W("a1 a3")));
}

TEST_CASE("alexander_poly reference values") {
  // Unknot as the closure of s1 s2: det gives t^-2 (1 + t + t^2).
  CHECK(alexander_poly(W("s1 s2")) == LaurentPoly::term(-2, 1));
  // Split closures vanish.
  CHECK(alexander_poly(W("a1^3")).is_zero());
  CHECK(alexander_poly(W("a1")).is_zero());
  CHECK(alexander_poly(BandWord{}).is_zero());
  // Trefoil.
  CHECK(canonicalize_poly(alexander_poly(W("a2 a1 a2 a1"))) ==
        make({{2, 1}, {1, -1}, {0, 1}}));
  // Figure-eight (closure of (a1 a2^-1)^2).
  CHECK(canonicalize_poly(alexander_poly(W("a1 a2^-1 a1 a2^-1"))) ==
        make({{2, 1}, {1, -3}, {0, 1}}));
  // The 3-chain closure of a2^-2 a1^2.
  CHECK(canonicalize_poly(alexander_poly(W("a2^-2 a1^2"))) ==
        make({{2, 1}, {1, -2}, {0, 1}}));
}

TEST_CASE("canonicalize_poly") {
  CHECK(canonicalize_poly(LaurentPoly::term(-2, 1)) == LaurentPoly::one());
  CHECK(canonicalize_poly(make({{1, -1}, {0, 3}, {-1, -1}})) ==
        make({{2, 1}, {1, -3}, {0, 1}}));
  CHECK(canonicalize_poly(LaurentPoly::zero()).is_zero());
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly p;
    for (int i = 0; i < 4; ++i)
      p = p + LaurentPoly::term(static_cast<int>(rng() % 9) - 4,
                                static_cast<long>(rng() % 7) - 3);
    LaurentPoly c = canonicalize_poly(p);
    CHECK(canonicalize_poly(c) == c);  // idempotent
    if (!c.is_zero()) {
      CHECK(c.min_exp() == 0);
      CHECK(c.coeff(c.max_exp()) > 0);
    }
  }
}

TEST_CASE("zeta") {
  CHECK(zeta(W("a2 a1 a2 a1")) == 1);
  CHECK(zeta(W("a1 a2^-1 a1 a2^-1")) == 3);
  CHECK(zeta(W("a2^-2 a1^2")) == 2);
  CHECK(zeta(W("s1 s2")) == 0);  // canonical 1 has no sub-top term
  CHECK_THROWS_AS(zeta(W("a1^3")), ZeroAlexander);
}

TEST_CASE("determinant division is exact on every short word") {
  // The (1 + t + t^2) division underlying alexander_poly must never leave a
  // remainder; exhaustive up to length 6 (the fleet exercises longer words).
  int count = 0;
  std::vector<uint8_t> digits;
  for (int len = 0; len <= 6; ++len) {
    digits.assign(len, 0);
    for (;;) {
      BandWord w;
      for (uint8_t d : digits) w.push_back(Gen::from_code(d));
      CHECK_NOTHROW(alexander_poly(w));
      ++count;
      int i = len - 1;
      while (i >= 0 && digits[i] == 5) digits[i--] = 0;
      if (i < 0) break;
      ++digits[i];
    }
  }
  CHECK(count == 55987);
}

TEST_CASE("alexander polynomial invariants") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    BandWord w = random_word(rng, static_cast<int>(rng() % 7));
    // Conjugation invariance.
    BandWord u = random_word(rng, 1 + static_cast<int>(rng() % 3));
    BandWord c = u;
    c.insert(c.end(), w.begin(), w.end());
    BandWord ui = invert_word(u);
    c.insert(c.end(), ui.begin(), ui.end());
    CHECK(canonicalize_poly(alexander_poly(c)) ==
          canonicalize_poly(alexander_poly(w)));
    // Mirror duality.
    CHECK(canonicalize_poly(alexander_poly(invert_word(w))) ==
          canonicalize_poly(alexander_poly(w).reciprocal()));
    // Knot normalization: |Delta(1)| = 1 for one-component closures.
    if (closure_components(w) == 1) {
      Coeff v = canonicalize_poly(alexander_poly(w)).eval_at_one();
      CHECK((v == 1 || v == -1));
    }
  }
}
