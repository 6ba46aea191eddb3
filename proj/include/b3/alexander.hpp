#pragma once

#include "b3/braid.hpp"
#include "b3/laurent.hpp"

namespace b3 {

// Magnus-Peluso representation of B3:
//   s1 -> [[-1/t, 0], [1/t, 1]]      s2 -> [[1, 1], [0, -1/t]]
// Inverse letters map to the exact matrix inverses (entries stay Laurent).
// The empty word maps to the identity. Faithful on B3, so matrix equality
// doubles as a word-problem oracle and trace/det as conjugacy invariants.
Mat2 phi_matrix(const ArtinWord& w);
Mat2 phi_matrix(const BandWord& w);

// Alexander polynomial of the braid closure:
//   Delta_w(t) = det(phi(w) - I) / (1 + t + t^2),
// the division is exact (InexactDivision would signal a bug). Zero exactly
// for split closures.
LaurentPoly alexander_poly(const BandWord& w);

// Unit normalization: 0 stays 0; otherwise multiply by +-t^k so the lowest
// exponent is 0 and the top coefficient is positive. Idempotent.
LaurentPoly canonicalize_poly(const LaurentPoly& p);

// Absolute value of the canonical Alexander polynomial's coefficient one
// degree below the top (0 when that coefficient is absent). Throws
// ZeroAlexander when Delta_w = 0; callers must handle split closures
// separately.
long long zeta(const BandWord& w);
long long zeta_of_delta(const LaurentPoly& delta);

}  // namespace b3
