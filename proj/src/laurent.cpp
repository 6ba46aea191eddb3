#include "b3/laurent.hpp"

#include <sstream>

namespace b3 {

void LaurentPoly::set(int exp, Coeff c) {
  if (c == 0)
    coeffs_.erase(exp);
  else
    coeffs_[exp] = std::move(c);
}

LaurentPoly LaurentPoly::term(int exp, Coeff c) {
  LaurentPoly p;
  p.set(exp, std::move(c));
  return p;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw Error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw Error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

Coeff LaurentPoly::coeff(int exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Coeff(0) : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::reciprocal() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

Coeff LaurentPoly::eval_at_one() const {
  Coeff s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  if (is_zero()) return {};
  // Shift both to ordinary polynomials and divide top-down.
  const int nshift = min_exp();
  const int dshift = divisor.min_exp();
  LaurentPoly r = shifted(-nshift);
  LaurentPoly d = divisor.shifted(-dshift);
  const int ddeg = d.max_exp();
  const Coeff& dlead = d.coeffs_.rbegin()->second;
  LaurentPoly q;
  while (!r.is_zero() && r.max_exp() >= ddeg) {
    const Coeff& rlead = r.coeffs_.rbegin()->second;
    if (rlead % dlead != 0)
      throw InexactDivision("leading coefficient not divisible");
    LaurentPoly t = term(r.max_exp() - ddeg, rlead / dlead);
    q = q + t;
    r = r - t * d;
  }
  if (!r.is_zero()) throw InexactDivision("nonzero remainder");
  return q.shifted(nshift - dshift);
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Coeff c = it->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const int e = it->first;
    if (c != 1 || e == 0) os << c;
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

Mat2 Mat2::identity() {
  return {LaurentPoly::one(), LaurentPoly::zero(), LaurentPoly::zero(),
          LaurentPoly::one()};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
          c * o.b + d * o.d};
}

Mat2 Mat2::operator-(const Mat2& o) const {
  return {a - o.a, b - o.b, c - o.c, d - o.d};
}

LaurentPoly Mat2::det() const { return a * d - b * c; }

}  // namespace b3
