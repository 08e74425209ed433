#include "partbinom/unipoly.hpp"

#include "partbinom/combinat.hpp"

#include <stdexcept>
#include <utility>

namespace partbinom {

void UniPoly::put(long deg, Rational c) {
  if (c == 0) return;
  coeffs_.emplace(deg, std::move(c));
}

UniPoly UniPoly::constant(Rational c) {
  UniPoly p;
  p.put(0, std::move(c));
  return p;
}

UniPoly UniPoly::variable() { return monomial(1, Rational(1)); }

UniPoly UniPoly::monomial(long degree, Rational coeff) {
  if (degree < 0) throw std::domain_error("UniPoly::monomial: negative degree");
  UniPoly p;
  p.put(degree, std::move(coeff));
  return p;
}

long UniPoly::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Rational UniPoly::coeff(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  for (const auto& [deg, c] : o.coeffs_) {
    auto it = coeffs_.find(deg);
    if (it == coeffs_.end()) {
      coeffs_.emplace(deg, c);
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly UniPoly::operator-() const {
  UniPoly r;
  for (const auto& [deg, c] : coeffs_) r.coeffs_.emplace(deg, -c);
  return r;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  UniPoly r;
  for (const auto& [da, ca] : coeffs_)
    for (const auto& [db, cb] : o.coeffs_) {
      auto it = r.coeffs_.find(da + db);
      if (it == r.coeffs_.end()) {
        r.coeffs_.emplace(da + db, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
    it = it->second == 0 ? r.coeffs_.erase(it) : std::next(it);
  return *this = std::move(r);
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [deg, co] : coeffs_) co *= c;
  return *this;
}

UniPoly UniPoly::pow(long n) const {
  if (n < 0) throw std::domain_error("UniPoly::pow: negative exponent");
  UniPoly r = constant(Rational(1));
  for (long i = 0; i < n; ++i) r *= *this;
  return r;
}

Rational UniPoly::operator()(const Rational& x) const {
  /* Horner over the sparse map, highest degree first. */
  Rational acc(0);
  long last_deg = 0;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (first) {
      acc = it->second;
      last_deg = it->first;
      first = false;
      continue;
    }
    for (long d = last_deg; d > it->first; --d) acc *= x;
    acc += it->second;
    last_deg = it->first;
  }
  if (first) return Rational(0);
  for (long d = last_deg; d > 0; --d) acc *= x;
  return acc;
}

namespace {

std::string term_str(const Rational& abs_coeff, std::string_view var, long deg) {
  std::string s;
  if (deg == 0) return to_string(abs_coeff);
  if (abs_coeff != 1) {
    s += to_string(abs_coeff);
    s += '*';
  }
  s += var;
  if (deg > 1) {
    s += '^';
    s += std::to_string(deg);
  }
  return s;
}

}  // namespace

std::string UniPoly::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [deg, c] : coeffs_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) s += '-';
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    s += term_str(abs(c), var, deg);
  }
  return s;
}

UniPoly falling_poly(long n) {
  if (n < 0) throw std::domain_error("falling_poly: negative length");
  UniPoly r = UniPoly::constant(Rational(1));
  const UniPoly x = UniPoly::variable();
  for (long i = 0; i < n; ++i)
    r *= x - UniPoly::constant(Rational(i));
  return r;
}

UniPoly rising_poly(long n) {
  if (n < 0) throw std::domain_error("rising_poly: negative length");
  UniPoly r = UniPoly::constant(Rational(1));
  const UniPoly x = UniPoly::variable();
  for (long i = 0; i < n; ++i)
    r *= x + UniPoly::constant(Rational(i));
  return r;
}

UniPoly binom_poly(long n) {
  if (n < 0) return UniPoly();
  return falling_poly(n) * make_rational(1, factorial(n));
}

UniPoly binom_poly_shifted(const Integer& c, long n) {
  if (n < 0) return UniPoly();
  UniPoly r = UniPoly::constant(Rational(1));
  const UniPoly x = UniPoly::variable();
  for (long i = 0; i < n; ++i)
    r *= x + UniPoly::constant(Rational(c - i));
  return r * make_rational(1, factorial(n));
}

UniPoly h_one_power(long i) {
  if (i < 0) throw std::domain_error("h_one_power: negative degree");
  return binom_poly_shifted(Integer(i - 1), i);
}

}  // namespace partbinom
