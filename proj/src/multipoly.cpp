#include "partbinom/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace partbinom {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("VarSet: duplicate variable name");
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

MultiPoly::MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

void MultiPoly::put(Exponents e, Rational c) {
  if (e.size() != vars_.size())
    throw std::invalid_argument("MultiPoly: exponent vector size mismatch");
  for (long x : e)
    if (x < 0) throw std::invalid_argument("MultiPoly: negative exponent");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(VarSet vars, Rational c) {
  MultiPoly p(std::move(vars));
  p.put(Exponents(p.vars_.size(), 0), std::move(c));
  return p;
}

MultiPoly MultiPoly::variable(VarSet vars, std::string_view name) {
  MultiPoly p(std::move(vars));
  auto idx = p.vars_.index_of(name);
  if (!idx) throw std::invalid_argument("MultiPoly::variable: unknown variable");
  Exponents e(p.vars_.size(), 0);
  e[*idx] = 1;
  p.put(std::move(e), Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(VarSet vars, Exponents exps, Rational c) {
  MultiPoly p(std::move(vars));
  p.put(std::move(exps), std::move(c));
  return p;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const {
  return coeff(Exponents(vars_.size(), 0));
}

long MultiPoly::max_degree(std::string_view var) const {
  auto idx = vars_.index_of(var);
  if (!idx) throw std::invalid_argument("MultiPoly::max_degree: unknown variable");
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (!(vars_ == o.vars_))
    throw std::invalid_argument("MultiPoly: variable set mismatch");
  for (const auto& [e, c] : o.terms_) put(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  if (!(vars_ == o.vars_))
    throw std::invalid_argument("MultiPoly: variable set mismatch");
  MultiPoly r(vars_);
  Exponents e(vars_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, ca * cb);
      } else {
        it->second += ca * cb;
      }
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  return *this = std::move(r);
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, co] : terms_) co *= c;
  return *this;
}

MultiPoly MultiPoly::pow(long n) const {
  if (n < 0) throw std::domain_error("MultiPoly::pow: negative exponent");
  MultiPoly r = constant(vars_, Rational(1));
  for (long i = 0; i < n; ++i) r *= *this;
  return r;
}

MultiPoly MultiPoly::coefficient_of(std::string_view var, long k) const {
  auto idx = vars_.index_of(var);
  if (!idx)
    throw std::invalid_argument("MultiPoly::coefficient_of: unknown variable");
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[*idx] != k) continue;
    Exponents rest = e;
    rest[*idx] = 0;
    r.put(std::move(rest), c);
  }
  return r;
}

MultiPoly MultiPoly::embedded(const VarSet& target) const {
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto idx = target.index_of(vars_.names()[i]);
    if (!idx)
      throw std::invalid_argument("MultiPoly::embedded: variable missing from target");
    where[i] = *idx;
  }
  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    Exponents te(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) te[where[i]] = e[i];
    r.put(std::move(te), c);
  }
  return r;
}

namespace {

/* Monomials keyed by (name, exponent) pairs, zero exponents dropped: the
 * variable-set-independent canonical form. */
std::map<std::vector<std::pair<std::string, long>>, Rational> named_terms(
    const MultiPoly& p) {
  std::map<std::vector<std::pair<std::string, long>>, Rational> out;
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::pair<std::string, long>> key;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) key.emplace_back(p.vars().names()[i], e[i]);
    out.emplace(std::move(key), c);
  }
  return out;
}

}  // namespace

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  return named_terms(*this) == named_terms(o);
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) s += '-';
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    const Rational a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_.names()[i];
      if (e[i] > 1) {
        mono += '^';
        mono += std::to_string(e[i]);
      }
    }
    if (mono.empty()) {
      s += to_string(a);
    } else {
      if (a != 1) {
        s += to_string(a);
        s += '*';
      }
      s += mono;
    }
  }
  return s;
}

MultiPoly to_multipoly(const UniPoly& p, VarSet vars, std::string_view var_name) {
  auto idx = vars.index_of(var_name);
  if (!idx) throw std::invalid_argument("to_multipoly: unknown variable");
  MultiPoly r(std::move(vars));
  for (const auto& [deg, c] : p.terms()) {
    MultiPoly::Exponents e(r.vars().size(), 0);
    e[*idx] = deg;
    r += MultiPoly::monomial(r.vars(), std::move(e), c);
  }
  return r;
}

}  // namespace partbinom
