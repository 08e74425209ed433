#pragma once

#include "partbinom/multipoly.hpp"

#include <map>
#include <string>

namespace partbinom {

/* Polynomial truncation of a formal power series: a MultiPoly together with
 * per-variable degree caps (variables absent from the cap map are
 * untruncated).  Ring operations re-truncate, and truncation commutes with
 * them: a monomial whose exponents exceed a cap can never contribute to an
 * in-cap monomial of a product, so truncate(a*b) = truncate(truncate(a)*
 * truncate(b)) holds structurally. */
class TruncatedSeries {
 public:
  TruncatedSeries(MultiPoly body, std::map<std::string, long> caps);

  const MultiPoly& body() const { return body_; }
  const std::map<std::string, long>& caps() const { return caps_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) {
    return a *= b;
  }
  TruncatedSeries pow(long n) const;  // n >= 0

  /* Same caps and equal bodies. */
  bool operator==(const TruncatedSeries& o) const;

  std::string str() const { return body_.str(); }

 private:
  MultiPoly body_;
  std::map<std::string, long> caps_;
  void truncate();
  void check_compatible(const TruncatedSeries& o) const;
};

/* exp(s) = sum_k s^k / k! under s's caps.  Requires a zero constant term and
 * that every monomial of s have positive degree in at least one capped
 * variable (so only finitely many powers contribute); throws
 * std::invalid_argument otherwise. */
TruncatedSeries series_exp(const TruncatedSeries& s);

/* ((1-y)/(1-y(1+q)))^x over variables {x, y, q}, truncated at y-degree ymax
 * and q-degree qmax, computed as series_exp of
 * x * sum_{i>=1} ((y(1+q))^i - y^i)/i.
 * Every monomial satisfies x-degree <= y-degree (asserted). */
TruncatedSeries theorem9_lhs(long ymax, long qmax);

/* The closed triple sum for the same series:
 * sum_{i,j,k} comp(i,j) * |s(j,k)|/j! * x^k y^i q^j over 0 <= i <= ymax,
 * 0 <= j <= qmax, 0 <= k <= j, where comp(i,j) = compositions(i,j) is the
 * coefficient [y^(i-j)](1-y)^(-j). */
TruncatedSeries theorem9_rhs(long ymax, long qmax);

}  // namespace partbinom
