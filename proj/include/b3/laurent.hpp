#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "b3/errors.hpp"

namespace b3 {

// Coefficients are arbitrary-precision integers: determinants of long words
// overflow fixed-width types.
using Coeff = boost::multiprecision::cpp_int;

// Integer-coefficient Laurent polynomial in one variable t.
// Invariant: no zero coefficients stored; an empty map is the zero polynomial.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long c) { set(0, Coeff(c)); }

  static LaurentPoly term(int exp, Coeff c);
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return LaurentPoly(1); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const;  // require nonzero
  int max_exp() const;
  Coeff coeff(int exp) const;
  size_t term_count() const { return coeffs_.size(); }
  const std::map<int, Coeff>& terms() const { return coeffs_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly shifted(int k) const;    // multiply by t^k
  LaurentPoly reciprocal() const;      // substitute t -> t^-1
  Coeff eval_at_one() const;

  // Exact division; throws InexactDivision if the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;

  std::string str() const;  // e.g. "t^2 - 3t + 1"; zero is "0"

 private:
  void set(int exp, Coeff c);
  std::map<int, Coeff> coeffs_;
};

// 2x2 matrix of Laurent polynomials, row major [[a,b],[c,d]].
struct Mat2 {
  LaurentPoly a, b, c, d;

  static Mat2 identity();
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  LaurentPoly det() const;
  LaurentPoly trace() const { return a + d; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

}  // namespace b3
