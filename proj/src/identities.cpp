#include "partbinom/identities.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace partbinom {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

Integer pow_int(long base, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e));
  return r;
}

/* (-1)^e for e >= 0. */
int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

Integer gen_binom(const Partition& lambda, long r) {
  const long w = lambda.weight();
  if (r < 0 || r > w) return 0;
  /* Coefficients of prod_i ((1+q)^(lambda_i) - 1), truncated at q^r. */
  std::vector<Integer> poly{Integer(1)};
  for (int part : lambda.parts()) {
    std::vector<Integer> next(
        static_cast<std::size_t>(std::min<long>(r, static_cast<long>(poly.size()) - 1 + part)) + 1,
        Integer(0));
    for (std::size_t d = 0; d < poly.size(); ++d) {
      if (poly[d] == 0) continue;
      for (long t = 1; t <= part; ++t) {
        const long nd = static_cast<long>(d) + t;
        if (nd > r) break;
        next[static_cast<std::size_t>(nd)] += poly[d] * binomial(Integer(part), t);
      }
    }
    poly = std::move(next);
  }
  return r < static_cast<long>(poly.size()) ? poly[static_cast<std::size_t>(r)]
                                            : Integer(0);
}

Integer gen_binom_oracle(const Partition& lambda, long r, long cap) {
  const long w = lambda.weight();
  if (cap < 0 || cap > 62)
    throw std::domain_error("gen_binom_oracle: cap out of range");
  if (w > cap) throw std::domain_error("gen_binom_oracle: |lambda| above cap");
  if (r < 0 || r > w) return 0;
  const auto cs = cells(lambda);
  std::vector<std::uint64_t> row_masks(
      static_cast<std::size_t>(lambda.length()), 0);
  for (std::size_t c = 0; c < cs.size(); ++c)
    row_masks[static_cast<std::size_t>(cs[c].first - 1)] |= std::uint64_t{1} << c;
  unsigned long count = 0;
  const std::uint64_t top = std::uint64_t{1} << w;
  for (std::uint64_t mask = 0; mask < top; ++mask) {
    if (std::popcount(mask) != r) continue;
    bool covers = true;
    for (std::uint64_t rm : row_masks)
      if ((mask & rm) == 0) {
        covers = false;
        break;
      }
    if (covers) ++count;
  }
  return Integer(count);
}

Integer sum_rising(const Partition& mu, long s) {
  require(s >= 1, "sum_rising: s must be positive");
  Integer total = 0;
  for (int part : mu.parts()) total += rising_factorial(Integer(part), s);
  return total;
}

std::pair<UniPoly, UniPoly> thm1_sides(long n, long r, long s) {
  require(n >= 1 && r >= 1 && s >= 1, "thm1_sides: n, r, s must be positive");
  UniPoly lhs;
  for (const Partition& mu : partitions_of(n)) {
    const Integer gb = gen_binom(mu, r);
    if (gb == 0) continue;
    const long l = mu.length();  // r >= l here since gb != 0
    lhs += UniPoly::monomial(
        l - 1, make_rational(sign_of(r - l) * gb * sum_rising(mu, s), zeta(mu)));
  }
  UniPoly rhs = (binom_poly(r) - binom_poly_shifted(Integer(-s), r)) *
                Rational(factorial(s - 1) * binomial(Integer(n + s - 1), n - r));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<UniPoly, UniPoly> thm1_alt_sides(long n, long r, long s) {
  require(n >= 1 && r >= 1 && s >= 1,
          "thm1_alt_sides: n, r, s must be positive");
  UniPoly lhs;
  for (const Partition& mu : partitions_of(n)) {
    const Integer gb = gen_binom(mu, r);
    if (gb == 0) continue;
    lhs += UniPoly::monomial(mu.length() - 1,
                             make_rational(gb * sum_rising(mu, s), zeta(mu)));
  }
  UniPoly rhs =
      (binom_poly_shifted(Integer(r + s - 1), r) -
       binom_poly_shifted(Integer(r - 1), r)) *
      Rational(factorial(s - 1) * binomial(Integer(n + s - 1), n - r));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Rational, Rational> thm2_sides(long n, long r, long s, long p) {
  require(n >= 1 && r >= 1 && s >= 1 && p >= 1,
          "thm2_sides: n, r, s, p must be positive");
  require(p <= r, "thm2_sides: p must not exceed r");
  Rational lhs(0);
  for (const Partition& mu : partitions_of_length(n, p)) {
    const Integer gb = gen_binom(mu, r);
    if (gb == 0) continue;
    lhs += make_rational(gb * sum_rising(mu, s), zeta(mu) * factorial(s));
  }
  lhs *= Rational(factorial(r));
  Integer rhs = 0;
  for (long j = p; j <= r; ++j)
    rhs += binomial(Integer(j), p - 1) * stirling_unsigned(r, j) *
           pow_int(s, j - p);
  rhs *= binomial(Integer(n + s - 1), n - r);
  return {std::move(lhs), Rational(rhs)};
}

std::pair<Rational, Rational> thm3_sides(long n, long r, long s) {
  require(n >= 1 && r >= 1 && s >= 1, "thm3_sides: n, r, s must be positive");
  Rational lhs(0);
  for (const Partition& mu : partitions_of_length(n, r)) {
    Integer num = 0;
    Integer den = 1;
    for (const auto& [part, mult] : mu.multiplicities()) {
      num += mult * rising_factorial(Integer(part), s);
      den *= factorial(mult);
    }
    lhs += make_rational(num, den);
  }
  lhs *= Rational(factorial(r - 1));
  return {std::move(lhs),
          Rational(factorial(s) * binomial(Integer(n + s - 1), n - r))};
}

std::pair<UniPoly, UniPoly> thm4_sides(long n, long s) {
  require(n >= 1 && s >= 1, "thm4_sides: n, s must be positive");
  UniPoly lhs;
  for (const Partition& mu : partitions_of(n)) {
    const long l = mu.length();
    lhs += UniPoly::monomial(
        l - 1, make_rational(sign_of(n - l) * sum_rising(mu, s), zeta(mu)));
  }
  UniPoly rhs = (binom_poly(n) - binom_poly_shifted(Integer(-s), n)) *
                Rational(factorial(s - 1));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<UniPoly, UniPoly> thm4_alt_sides(long n, long s) {
  require(n >= 1 && s >= 1, "thm4_alt_sides: n, s must be positive");
  UniPoly lhs;
  for (const Partition& mu : partitions_of(n)) {
    lhs += UniPoly::monomial(mu.length() - 1,
                             make_rational(sum_rising(mu, s), zeta(mu)));
  }
  UniPoly rhs = (binom_poly_shifted(Integer(n + s - 1), n) -
                 binom_poly_shifted(Integer(n - 1), n)) *
                Rational(factorial(s - 1));
  return {std::move(lhs), std::move(rhs)};
}

namespace {

const VarSet& xz_vars() {
  static const VarSet vars({"X", "z"});
  return vars;
}

/* sum_i m_i(mu) z^(i-1) * X^(l-1) * c as a term of an {X, z} polynomial. */
MultiPoly length_z_term(const Partition& mu, const Rational& c) {
  MultiPoly t(xz_vars());
  const long l = mu.length();
  for (const auto& [part, mult] : mu.multiplicities())
    t += MultiPoly::monomial(xz_vars(), {l - 1, part - 1},
                             Rational(mult) * c);
  return t;
}

}  // namespace

std::pair<MultiPoly, MultiPoly> thm5_sides(long n) {
  require(n >= 1, "thm5_sides: n must be positive");
  MultiPoly lhs(xz_vars());
  for (const Partition& mu : partitions_of(n))
    lhs += length_z_term(mu, make_rational(1, zeta(mu)));
  MultiPoly rhs(xz_vars());
  for (long i = 1; i <= n; ++i) {
    MultiPoly h = to_multipoly(h_one_power(n - i), xz_vars(), "X");
    rhs += h * MultiPoly::monomial(xz_vars(), {0, i - 1},
                                   make_rational(1, Integer(i)));
  }
  return {std::move(lhs), std::move(rhs)};
}

std::pair<MultiPoly, MultiPoly> thm7_sides(long n, long r) {
  require(n >= 1 && r >= 1, "thm7_sides: n, r must be positive");
  MultiPoly lhs(xz_vars());
  for (const Partition& mu : partitions_of(n)) {
    const Integer gb = gen_binom(mu, r);
    if (gb == 0) continue;
    lhs += length_z_term(
        mu, make_rational(sign_of(r - mu.length()) * gb, zeta(mu)));
  }
  MultiPoly rhs(xz_vars());
  for (long j = 1; j <= r; ++j) {
    const MultiPoly cxrj = to_multipoly(binom_poly(r - j), xz_vars(), "X");
    for (long i = j; i <= n - r + j; ++i) {
      const Integer w =
          sign_of(j - 1) * binomial(Integer(i), j) * compositions(n - i, r - j);
      if (w == 0) continue;
      rhs += cxrj * MultiPoly::monomial(xz_vars(), {0, i - 1},
                                        make_rational(w, Integer(i)));
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

std::pair<MultiPoly, MultiPoly> thm8_sides(long n, long r, long p) {
  require(n >= 1 && r >= 1 && p >= 1, "thm8_sides: n, r, p must be positive");
  require(p <= r, "thm8_sides: p must not exceed r");
  const VarSet vars({"z"});
  MultiPoly lhs(vars);
  for (const Partition& mu : partitions_of_length(n, p)) {
    const Integer gb = gen_binom(mu, r);
    if (gb == 0) continue;
    const Rational c = make_rational(gb, zeta(mu));
    for (const auto& [part, mult] : mu.multiplicities())
      lhs += MultiPoly::monomial(vars, {part - 1}, Rational(mult) * c);
  }
  MultiPoly rhs(vars);
  for (long j = 1; j <= r; ++j) {
    const Integer st = stirling_unsigned(r - j, p - 1);
    if (st == 0) continue;
    for (long i = j; i <= n - r + j; ++i) {
      const Integer w = binomial(Integer(i), j) * compositions(n - i, r - j);
      if (w == 0) continue;
      rhs += MultiPoly::monomial(
          vars, {i - 1}, make_rational(st * w, Integer(i) * factorial(r - j)));
    }
  }
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Integer, Integer> eq1_sides(const Integer& a, const Integer& b,
                                      long n) {
  Integer rhs = 0;
  for (long i = 0; i <= n; ++i) rhs += binomial(a, n - i) * binomial(b, i);
  return {binomial(a + b, n), std::move(rhs)};
}

std::pair<UniPoly, UniPoly> eq2_sides(long n, long r) {
  require(n >= 1 && r >= 1, "eq2_sides: n, r must be positive");
  UniPoly lhs;
  for (const Partition& mu : partitions_of(n)) {
    const Integer gb = gen_binom(mu, r);
    if (gb == 0) continue;
    const long l = mu.length();
    lhs += UniPoly::monomial(l, make_rational(sign_of(r - l) * gb, zeta(mu)));
  }
  UniPoly rhs = binom_poly(r) * Rational(binomial(Integer(n - 1), r - 1));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Rational, Rational> eq3_sides(long n, long r, long p) {
  require(n >= 1 && r >= 1 && p >= 1, "eq3_sides: n, r, p must be positive");
  require(p <= r, "eq3_sides: p must not exceed r");
  Rational lhs(0);
  for (const Partition& mu : partitions_of_length(n, p)) {
    const Integer gb = gen_binom(mu, r);
    if (gb == 0) continue;
    lhs += make_rational(gb, zeta(mu));
  }
  lhs *= Rational(factorial(r));
  return {std::move(lhs),
          Rational(binomial(Integer(n - 1), r - 1) * stirling_unsigned(r, p))};
}

std::pair<MultiPoly, MultiPoly> eq4_sides(long n) {
  require(n >= 0, "eq4_sides: n must be nonnegative");
  const VarSet vars({"X", "Y"});
  const MultiPoly xy =
      MultiPoly::variable(vars, "X") + MultiPoly::variable(vars, "Y");
  MultiPoly lhs = MultiPoly::constant(vars, Rational(1));
  for (long t = 0; t < n; ++t)
    lhs *= xy + MultiPoly::constant(vars, Rational(t));
  lhs *= make_rational(1, factorial(n));
  MultiPoly rhs(vars);
  for (long i = 0; i <= n; ++i)
    rhs += to_multipoly(h_one_power(n - i), vars, "X") *
           to_multipoly(h_one_power(i), vars, "Y");
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Rational, Rational> eq5_sides(long i, long k) {
  require(i >= 0 && k >= 1, "eq5_sides: need i >= 0 and k >= 1");
  return {h_one_power(i)(Rational(k)),
          Rational(binomial(Integer(i + k - 1), i))};
}

std::pair<Integer, Integer> lemma_sides(long a, long b, long c, long d) {
  Integer lhs =
      binomial(Integer(a + b - 1), d - c) * binomial(Integer(b + c - 1), c - 1);
  Integer rhs = 0;
  for (long i = c; i <= d; ++i)
    rhs += compositions(i, c) * compositions(a - i, a - d) *
           binomial(Integer(b + i - 1), i - 1);
  return {std::move(lhs), std::move(rhs)};
}

MultiPoly conj_P(long j, long k) {
  require(j >= 0 && k >= 0, "conj_P: j, k must be nonnegative");
  std::vector<std::string> names;
  for (long i = 1; i <= j; ++i) names.push_back("X_" + std::to_string(i));
  const VarSet vars(std::move(names));
  MultiPoly sum(vars);
  for (const Partition& mu : partitions_of(j)) {
    const Integer gb = gen_binom(mu, k);
    if (gb == 0) continue;
    MultiPoly::Exponents e(vars.size(), 0);
    for (const auto& [part, mult] : mu.multiplicities())
      e[static_cast<std::size_t>(part - 1)] = mult;
    sum += MultiPoly::monomial(vars, std::move(e), make_rational(gb, zeta(mu)));
  }
  return sum;
}

namespace {

VarSet conj_vars(long umax) {
  std::vector<std::string> names{"u", "X_0"};
  for (long p = 1; p <= umax; ++p) names.push_back("X_" + std::to_string(p));
  return VarSet(std::move(names));
}

/* prod_i (X_0 + sum_{p=1}^{umax} u^p C(i+p-1, p) X_p)^(m_i(mu)), truncated. */
TruncatedSeries conj_lhs_product(const Partition& mu, const VarSet& vars,
                                 long umax) {
  const std::map<std::string, long> caps{{"u", umax}};
  TruncatedSeries prod(MultiPoly::constant(vars, Rational(1)), caps);
  for (const auto& [part, mult] : mu.multiplicities()) {
    MultiPoly factor = MultiPoly::variable(vars, "X_0");
    for (long p = 1; p <= umax; ++p) {
      MultiPoly::Exponents e(vars.size(), 0);
      e[0] = p;                                  // u^p
      e[static_cast<std::size_t>(1 + p)] = 1;    // X_p
      factor += MultiPoly::monomial(
          vars, std::move(e), Rational(binomial(Integer(part + p - 1), p)));
    }
    prod *= TruncatedSeries(std::move(factor), caps).pow(mult);
  }
  return prod;
}

/* sum_{j=0}^{umax} u^j C(n+j-1, n-r) sum_{k=0}^{min(r,j)} C(X_0-j, r-k) P_jk. */
TruncatedSeries conj_rhs(long n, long r, const VarSet& vars, long umax) {
  const std::map<std::string, long> caps{{"u", umax}};
  MultiPoly rhs(vars);
  for (long j = 0; j <= umax; ++j) {
    const Integer cj = binomial(Integer(n + j - 1), n - r);
    if (cj == 0) continue;
    MultiPoly inner(vars);
    for (long k = 0; k <= std::min(r, j); ++k) {
      const MultiPoly pjk = conj_P(j, k).embedded(vars);
      if (pjk.is_zero()) continue;
      inner += to_multipoly(binom_poly_shifted(Integer(-j), r - k), vars, "X_0") *
               pjk;
    }
    MultiPoly::Exponents uj(vars.size(), 0);
    uj[0] = j;
    rhs += inner * MultiPoly::monomial(vars, std::move(uj), Rational(cj));
  }
  return TruncatedSeries(std::move(rhs), caps);
}

}  // namespace

std::pair<TruncatedSeries, TruncatedSeries> conj2_sides(long n, long r,
                                                        long umax) {
  require(n >= 1 && r >= 1, "conj2_sides: n, r must be positive");
  require(umax >= 1, "conj2_sides: umax must be positive");
  const VarSet vars = conj_vars(umax);
  TruncatedSeries lhs(MultiPoly(vars), {{"u", umax}});
  for (const Partition& mu : partitions_of(n)) {
    const Integer gb = gen_binom(mu, r);
    if (gb == 0) continue;
    TruncatedSeries prod = conj_lhs_product(mu, vars, umax);
    lhs += TruncatedSeries(
        prod.body() * make_rational(sign_of(r - mu.length()) * gb, zeta(mu)),
        lhs.caps());
  }
  return {std::move(lhs), conj_rhs(n, r, vars, umax)};
}

std::pair<TruncatedSeries, TruncatedSeries> conj1_sides(long n, long umax) {
  require(n >= 1, "conj1_sides: n must be positive");
  require(umax >= 1, "conj1_sides: umax must be positive");
  const VarSet vars = conj_vars(umax);
  TruncatedSeries lhs(MultiPoly(vars), {{"u", umax}});
  for (const Partition& mu : partitions_of(n)) {
    TruncatedSeries prod = conj_lhs_product(mu, vars, umax);
    lhs += TruncatedSeries(
        prod.body() * make_rational(sign_of(n - mu.length()), zeta(mu)),
        lhs.caps());
  }
  return {std::move(lhs), conj_rhs(n, n, vars, umax)};
}

}  // namespace partbinom
