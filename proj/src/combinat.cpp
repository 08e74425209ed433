#include "partbinom/combinat.hpp"

#include <stdexcept>
#include <vector>

namespace partbinom {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& a) { return a.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer rising_factorial(const Integer& a, long n) {
  if (n < 0) throw std::domain_error("rising_factorial: negative length");
  Integer r = 1;
  for (long i = 0; i < n; ++i) r *= a + i;
  return r;
}

Integer falling_factorial(const Integer& a, long n) {
  if (n < 0) throw std::domain_error("falling_factorial: negative length");
  Integer r = 1;
  for (long i = 0; i < n; ++i) r *= a - i;
  return r;
}

Integer binomial(const Integer& a, long n) {
  if (n < 0) return 0;
  Integer r;
  mpz_divexact(r.get_mpz_t(), falling_factorial(a, n).get_mpz_t(),
               factorial(n).get_mpz_t());
  return r;
}

Integer compositions(long total, long parts) {
  if (parts < 0 || total < 0) return 0;
  if (parts == 0) return total == 0 ? 1 : 0;
  if (total < parts) return 0;
  return binomial(Integer(total - 1), parts - 1);
}

Integer stirling_signed(long n, long k) {
  if (n < 0) throw std::domain_error("stirling_signed: negative row");
  if (k < 0 || k > n) return 0;
  /* table[m][j] = s(m, j); rows extended on demand. */
  thread_local std::vector<std::vector<Integer>> table{{Integer(1)}};
  while (static_cast<long>(table.size()) <= n) {
    const long m = static_cast<long>(table.size());
    const auto& prev = table.back();
    std::vector<Integer> row(static_cast<std::size_t>(m) + 1);
    for (long j = 0; j <= m; ++j) {
      Integer v = j > 0 ? prev[static_cast<std::size_t>(j - 1)] : Integer(0);
      if (j < m) v -= Integer(m - 1) * prev[static_cast<std::size_t>(j)];
      row[static_cast<std::size_t>(j)] = v;
    }
    table.push_back(std::move(row));
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer stirling_unsigned(long n, long k) {
  return abs(stirling_signed(n, k));
}

}  // namespace partbinom
