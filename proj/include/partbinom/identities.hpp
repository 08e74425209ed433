#pragma once

#include "partbinom/combinat.hpp"
#include "partbinom/multipoly.hpp"
#include "partbinom/partition.hpp"
#include "partbinom/series.hpp"
#include "partbinom/unipoly.hpp"

#include <utility>

namespace partbinom {

/* Generalized binomial <lambda, r>: the number of r-point subsets of the
 * diagram of lambda containing at least one point in every row; equivalently
 * the coefficient of q^r in prod_i ((1+q)^i - 1)^(m_i(lambda)).  Vanishes
 * exactly when r < l(lambda) or r > |lambda| (and for r < 0); the empty
 * partition gives <(), 0> = 1. */
Integer gen_binom(const Partition& lambda, long r);

/* Independent brute-force route: exhaustive enumeration of r-subsets of
 * cells(lambda) checking row coverage.  Throws std::domain_error when
 * |lambda| > cap. */
Integer gen_binom_oracle(const Partition& lambda, long r, long cap = 16);

/* sum_{i=1}^{l(mu)} (mu_i)_s = sum_i m_i(mu) (i)_s. */
Integer sum_rising(const Partition& mu, long s);

/* Each *_sides returns (lhs, rhs) of one identity, both in canonical form,
 * so a failed comparison carries its own witness.  The two sides are always
 * computed by independent routes (partition sums vs closed forms). */

/* sum_{|mu|=n} (-1)^(r-l) <mu,r>/z_mu X^(l-1) sum_i (mu_i)_s
 *   = (s-1)! C(n+s-1, n-r) [C(X,r) - C(X-s,r)], degree <= r-1. */
std::pair<UniPoly, UniPoly> thm1_sides(long n, long r, long s);

/* Unsigned form (X -> -X): sum <mu,r>/z_mu X^(l-1) sum (mu_i)_s
 *   = (s-1)! C(n+s-1, n-r) [C(X+r+s-1, r) - C(X+r-1, r)]. */
std::pair<UniPoly, UniPoly> thm1_alt_sides(long n, long r, long s);

/* Fixed length p: r! sum_{|mu|=n, l=p} <mu,r>/z_mu sum_i (mu_i)_s / s!
 *   = C(n+s-1, n-r) sum_{j=p}^{r} C(j, p-1) |s(r,j)| s^(j-p).
 * Rejects p > r. */
std::pair<Rational, Rational> thm2_sides(long n, long r, long s, long p);

/* (r-1)! sum_{|mu|=n, l=r} [sum_i m_i (i)_s] / prod_i m_i!
 *   = s! C(n+s-1, n-r). */
std::pair<Rational, Rational> thm3_sides(long n, long r, long s);

/* The r = n case of thm1 (where <mu,n> = 1):
 * sum (-1)^(n-l) X^(l-1)/z_mu sum (mu_i)_s = (s-1)! [C(X,n) - C(X-s,n)]. */
std::pair<UniPoly, UniPoly> thm4_sides(long n, long s);

/* Unsigned form: sum X^(l-1)/z_mu sum (mu_i)_s
 *   = (s-1)! [C(X+n+s-1, n) - C(X+n-1, n)]. */
std::pair<UniPoly, UniPoly> thm4_alt_sides(long n, long s);

/* Over {X, z}: sum_{|mu|=n} X^(l-1)/z_mu sum_i m_i z^(i-1)
 *   = sum_{i=1}^{n} h_{n-i}(1^X) z^(i-1)/i. */
std::pair<MultiPoly, MultiPoly> thm5_sides(long n);

/* Over {X, z}: sum_{|mu|=n} (-1)^(r-l) <mu,r>/z_mu X^(l-1) sum_i m_i z^(i-1)
 *   = sum_{j=1}^{r} sum_{i=j}^{n-r+j} (-1)^(j-1) C(X, r-j) (1/i) C(i,j)
 *     comp(n-i, r-j) z^(i-1),
 * where comp is compositions(): the series coefficient [y^(n-i-(r-j))]
 * (1-y)^-(r-j), which at j = r degenerates to [i = n] rather than 0. */
std::pair<MultiPoly, MultiPoly> thm7_sides(long n, long r);

/* The X^(p-1) coefficient of thm7, over {z}:
 * sum_{|mu|=n, l=p} <mu,r>/z_mu sum_i m_i z^(i-1)
 *   = sum_{j=1}^{r} sum_{i=j}^{n-r+j} |s(r-j, p-1)|/(i (r-j)!) C(i,j)
 *     comp(n-i, r-j) z^(i-1).
 * Rejects p > r. */
std::pair<MultiPoly, MultiPoly> thm8_sides(long n, long r, long p);

/* Integer Chu-Vandermonde: C(a+b, n) = sum_i C(a, n-i) C(b, i). */
std::pair<Integer, Integer> eq1_sides(const Integer& a, const Integer& b, long n);

/* sum_{|mu|=n} (-1)^(r-l) <mu,r>/z_mu X^l = C(n-1, r-1) C(X, r). */
std::pair<UniPoly, UniPoly> eq2_sides(long n, long r);

/* r! sum_{|mu|=n, l=p} <mu,r>/z_mu = C(n-1, r-1) |s(r, p)|.  Rejects p > r. */
std::pair<Rational, Rational> eq3_sides(long n, long r, long p);

/* Convolution over {X, Y}: C(X+Y+n-1, n) = sum_i h_{n-i}(1^X) h_i(1^Y). */
std::pair<MultiPoly, MultiPoly> eq4_sides(long n);

/* h_i(1^k) evaluated at the integer k equals C(i+k-1, i). */
std::pair<Rational, Rational> eq5_sides(long i, long k);

/* C(a+b-1, d-c) C(b+c-1, c-1)
 *   = sum_{i=c}^{d} comp(i, c) comp(a-i, a-d) C(b+i-1, i-1)
 * for any integers; the two comp() factors are the series coefficients of
 * (1-y)^-c and (1-y)^-(a-d), whose degenerate cases make the d = a boundary
 * come out right. */
std::pair<Integer, Integer> lemma_sides(long a, long b, long c, long d);

/* P_jk = sum_{|mu|=j} <mu,k>/z_mu prod_i X_i^(m_i), over {X_1..X_j};
 * P_00 = 1, zero for k > j >= 1; total degree <= k and each monomial has
 * weighted degree sum i*m_i = j. */
MultiPoly conj_P(long j, long k);

/* Over {u, X_0, .., X_umax} truncated at u-degree umax:
 * sum_{|mu|=n} (-1)^(r-l) <mu,r>/z_mu prod_i (X_0 + sum_p u^p C(i+p-1,p) X_p)^(m_i)
 *   = sum_{j=0}^{umax} u^j C(n+j-1, n-r) sum_{k=0}^{min(r,j)} C(X_0-j, r-k) P_jk.
 * Rejects umax < 1. */
std::pair<TruncatedSeries, TruncatedSeries> conj2_sides(long n, long r, long umax);

/* The r = n case, built independently (no gen_binom factor on the lhs). */
std::pair<TruncatedSeries, TruncatedSeries> conj1_sides(long n, long umax);

}  // namespace partbinom
