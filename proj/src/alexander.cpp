#include "b3/alexander.hpp"

#include <limits>

namespace b3 {

namespace {

Mat2 letter_matrix(const ArtinGen& g) {
  using P = LaurentPoly;
  if (g.index == 1) {
    if (g.sign > 0)
      return {P::term(-1, -1), P::zero(), P::term(-1, 1), P::one()};
    return {P::term(1, -1), P::zero(), P::one(), P::one()};
  }
  if (g.sign > 0)
    return {P::one(), P::one(), P::zero(), P::term(-1, -1)};
  return {P::one(), P::term(1, 1), P::zero(), P::term(1, -1)};
}

}  // namespace

Mat2 phi_matrix(const ArtinWord& w) {
  Mat2 m = Mat2::identity();
  for (const ArtinGen& g : w) m = m * letter_matrix(g);
  return m;
}

Mat2 phi_matrix(const BandWord& w) {
  return phi_matrix(band_artin_convert(w));
}

LaurentPoly alexander_poly(const BandWord& w) {
  Mat2 m = phi_matrix(w);
  LaurentPoly num = (m - Mat2::identity()).det();
  // (1 - t) / (1 - t^3) = 1 / (1 + t + t^2)
  LaurentPoly divisor = LaurentPoly(1) + LaurentPoly::term(1, 1) +
                        LaurentPoly::term(2, 1);
  return num.divide_exact(divisor);
}

LaurentPoly canonicalize_poly(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-p.min_exp());
  if (q.coeff(q.max_exp()) < 0) q = -q;
  return q;
}

long long zeta_of_delta(const LaurentPoly& delta) {
  LaurentPoly q = canonicalize_poly(delta);
  if (q.is_zero())
    throw ZeroAlexander("zeta undefined: Alexander polynomial is zero");
  Coeff c = q.coeff(q.max_exp() - 1);
  if (c < 0) c = -c;
  if (c > Coeff(std::numeric_limits<long long>::max()))
    throw Error("zeta exceeds rank range");
  return static_cast<long long>(c);
}

long long zeta(const BandWord& w) { return zeta_of_delta(alexander_poly(w)); }

}  // namespace b3
