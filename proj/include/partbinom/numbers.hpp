#pragma once

#include <gmpxx.h>

#include <string>

namespace partbinom {

/* Exact scalars. Integer is arbitrary precision; Rational is always kept in
 * canonical form (lowest terms, positive denominator). */
using Integer = mpz_class;
using Rational = mpq_class;

/* num/den reduced to canonical form; throws std::domain_error for den == 0. */
Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Integer& a);

/* "n" when the denominator is 1, otherwise "n/d". */
std::string to_string(const Rational& q);

}  // namespace partbinom
