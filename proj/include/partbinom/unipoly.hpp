#pragma once

#include "partbinom/numbers.hpp"

#include <map>
#include <string>
#include <string_view>

namespace partbinom {

/* Univariate polynomial with exact rational coefficients, stored sparsely
 * (degree -> nonzero coefficient).  Immutable-style value type; canonical
 * form is the coefficient map itself, so operator== is exact equality. */
class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial

  static UniPoly constant(Rational c);
  static UniPoly variable();  // X
  static UniPoly monomial(long degree, Rational coeff);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const;  // -1 for the zero polynomial
  Rational coeff(long k) const;
  const std::map<long, Rational>& terms() const { return coeffs_; }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;
  UniPoly pow(long n) const;  // n >= 0

  Rational operator()(const Rational& x) const;  // evaluation

  /* Canonical rendering: terms in ascending degree, e.g. "-3 + 2*X - X^2".
   * Zero renders as "0".  Equal polynomials render identically. */
  std::string str(std::string_view var = "X") const;

  bool operator==(const UniPoly&) const = default;

 private:
  std::map<long, Rational> coeffs_;
  void put(long deg, Rational c);  // insert, dropping zeros
};

/* [X]_n = X(X-1)...(X-n+1) as a polynomial, by multiplying linear factors
 * (kept independent of the Stirling recurrence so the two stay cross-checks). */
UniPoly falling_poly(long n);

/* (X)_n = X(X+1)...(X+n-1) as a polynomial. */
UniPoly rising_poly(long n);

/* C(X, n) = [X]_n / n!; the constant 1 for n = 0, zero for n < 0. */
UniPoly binom_poly(long n);

/* C(X + c, n) for an integer shift c. */
UniPoly binom_poly_shifted(const Integer& c, long n);

/* h_i(1^X) = C(X+i-1, i): complete homogeneous sum of degree i evaluated on
 * X copies of 1, as a polynomial in X.  i >= 0. */
UniPoly h_one_power(long i);

}  // namespace partbinom
