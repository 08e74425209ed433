#pragma once

#include "partbinom/numbers.hpp"
#include "partbinom/unipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace partbinom {

/* Ordered set of variable names; the declaration order fixes the canonical
 * monomial order (ascending lexicographic on exponent vectors). */
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VarSet&) const = default;

 private:
  std::vector<std::string> names_;
};

/* Sparse multivariate polynomial with exact rational coefficients over a
 * variable set declared at construction.  Terms are keyed by exponent
 * vectors aligned to the variable set; map order gives a canonical term
 * order, so rendering is deterministic and injective on values. */
class MultiPoly {
 public:
  using Exponents = std::vector<long>;

  explicit MultiPoly(VarSet vars);  // zero polynomial

  static MultiPoly constant(VarSet vars, Rational c);
  static MultiPoly variable(VarSet vars, std::string_view name);
  static MultiPoly monomial(VarSet vars, Exponents exps, Rational c);

  const VarSet& vars() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;
  long max_degree(std::string_view var) const;  // 0 for the zero polynomial

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  MultiPoly pow(long n) const;  // n >= 0

  /* Polynomial in the remaining variables multiplying var^k (the var slot of
   * every resulting exponent vector is zero); same variable set. */
  MultiPoly coefficient_of(std::string_view var, long k) const;

  /* Same polynomial over a larger variable set (every current variable must
   * exist in target). */
  MultiPoly embedded(const VarSet& target) const;

  /* Canonical rendering, e.g. "1/2*X_2 + 1/2*X_1^2"; "0" when zero. */
  std::string str() const;

  /* Exact equality as polynomials.  Identical variable sets compare termwise;
   * different variable sets compare by name-keyed monomials, so the same
   * value embedded in different variable sets still compares equal. */
  bool operator==(const MultiPoly& o) const;

 private:
  VarSet vars_;
  std::map<Exponents, Rational> terms_;
  void put(Exponents e, Rational c);
};

/* The univariate polynomial read as a polynomial in vars' variable var_name. */
MultiPoly to_multipoly(const UniPoly& p, VarSet vars, std::string_view var_name);

}  // namespace partbinom
