#pragma once

#include "partbinom/numbers.hpp"

namespace partbinom {

/* n!, n >= 0. */
Integer factorial(long n);

/* Rising factorial (a)_n = a(a+1)...(a+n-1); empty product for n = 0. */
Integer rising_factorial(const Integer& a, long n);

/* Falling factorial [a]_n = a(a-1)...(a-n+1); empty product for n = 0. */
Integer falling_factorial(const Integer& a, long n);

/* C(a, n) = [a]_n / n! for n >= 0 (any integer a, including negative),
 * 0 for n < 0. */
Integer binomial(const Integer& a, long n);

/* Number of ways to write `total` as an ordered sum of `parts` positive
 * integers: C(total-1, parts-1) for total >= parts >= 1, 1 for
 * total = parts = 0, otherwise 0.  Equivalently [y^(total-parts)] (1-y)^-parts.
 * This is the boundary-safe coefficient that appears in series expansions of
 * (1-y)^-j; it differs from binomial(total-1, parts-1) only in the degenerate
 * corners (parts = 0). */
Integer compositions(long total, long parts);

/* Signed Stirling numbers of the first kind: [X]_n = sum_k s(n,k) X^k,
 * computed by the recurrence s(n+1,k) = s(n,k-1) - n s(n,k) over a memoized
 * per-thread table.  n >= 0; returns 0 for k outside [0, n]. */
Integer stirling_signed(long n, long k);

/* |s(n,k)|: coefficients of the rising factorial, (X)_n = sum_k |s(n,k)| X^k. */
Integer stirling_unsigned(long n, long k);

}  // namespace partbinom
