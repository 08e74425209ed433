#include "partbinom/series.hpp"

#include "partbinom/combinat.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace partbinom {

TruncatedSeries::TruncatedSeries(MultiPoly body, std::map<std::string, long> caps)
    : body_(std::move(body)), caps_(std::move(caps)) {
  for (const auto& [name, cap] : caps_) {
    if (!body_.vars().index_of(name))
      throw std::invalid_argument("TruncatedSeries: cap on unknown variable");
    if (cap < 0) throw std::invalid_argument("TruncatedSeries: negative cap");
  }
  truncate();
}

void TruncatedSeries::truncate() {
  std::vector<long> cap_by_index(body_.vars().size(), -1);
  for (const auto& [name, cap] : caps_)
    cap_by_index[*body_.vars().index_of(name)] = cap;
  MultiPoly kept(body_.vars());
  for (const auto& [e, c] : body_.terms()) {
    bool in = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (cap_by_index[i] >= 0 && e[i] > cap_by_index[i]) {
        in = false;
        break;
      }
    if (in) kept += MultiPoly::monomial(body_.vars(), e, c);
  }
  body_ = std::move(kept);
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (!(body_.vars() == o.body_.vars()) || caps_ != o.caps_)
    throw std::invalid_argument("TruncatedSeries: incompatible operands");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  body_ += o.body_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  body_ -= o.body_;
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  check_compatible(o);
  body_ *= o.body_;
  truncate();
  return *this;
}

TruncatedSeries TruncatedSeries::pow(long n) const {
  if (n < 0) throw std::domain_error("TruncatedSeries::pow: negative exponent");
  TruncatedSeries r(MultiPoly::constant(body_.vars(), Rational(1)), caps_);
  for (long i = 0; i < n; ++i) r *= *this;
  return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  return caps_ == o.caps_ && body_ == o.body_;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (s.body().constant_term() != 0)
    throw std::invalid_argument("series_exp: nonzero constant term");
  std::vector<long> cap_by_index(s.body().vars().size(), -1);
  for (const auto& [name, cap] : s.caps())
    cap_by_index[*s.body().vars().index_of(name)] = cap;
  for (const auto& [e, c] : s.body().terms()) {
    bool capped = false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (cap_by_index[i] >= 0 && e[i] > 0) {
        capped = true;
        break;
      }
    if (!capped)
      throw std::invalid_argument(
          "series_exp: monomial with no capped variable never truncates");
  }
  TruncatedSeries result(MultiPoly::constant(s.body().vars(), Rational(1)),
                         s.caps());
  TruncatedSeries term = result;
  for (long k = 1; !term.body().is_zero(); ++k) {
    term *= s;
    term = TruncatedSeries(term.body() * make_rational(1, Integer(k)), s.caps());
    result += term;
  }
  return result;
}

TruncatedSeries theorem9_lhs(long ymax, long qmax) {
  if (ymax < 0 || qmax < 0)
    throw std::domain_error("theorem9_lhs: negative cap");
  const VarSet vars({"x", "y", "q"});
  const std::map<std::string, long> caps{{"y", ymax}, {"q", qmax}};
  const MultiPoly x = MultiPoly::variable(vars, "x");
  const MultiPoly y = MultiPoly::variable(vars, "y");
  const MultiPoly q = MultiPoly::variable(vars, "q");
  const MultiPoly one = MultiPoly::constant(vars, Rational(1));

  /* x * sum_{i=1}^{ymax} ((y(1+q))^i - y^i)/i, the log of the target. */
  TruncatedSeries expo(MultiPoly(vars), caps);
  const TruncatedSeries y1q(y * (one + q), caps);
  const TruncatedSeries ty(y, caps);
  for (long i = 1; i <= ymax; ++i) {
    TruncatedSeries diff = y1q.pow(i) - ty.pow(i);
    expo += TruncatedSeries(
        diff.body() * x * make_rational(1, Integer(i)), caps);
  }
  TruncatedSeries result = series_exp(expo);
  for (const auto& [e, c] : result.body().terms())
    if (e[0] > e[1])
      throw std::logic_error("theorem9_lhs: x-degree exceeds y-degree");
  return result;
}

TruncatedSeries theorem9_rhs(long ymax, long qmax) {
  if (ymax < 0 || qmax < 0)
    throw std::domain_error("theorem9_rhs: negative cap");
  const VarSet vars({"x", "y", "q"});
  MultiPoly sum(vars);
  for (long i = 0; i <= ymax; ++i)
    for (long j = 0; j <= qmax; ++j) {
      const Integer comp = compositions(i, j);
      if (comp == 0) continue;
      for (long k = 0; k <= j; ++k) {
        const Integer s = stirling_unsigned(j, k);
        if (s == 0) continue;
        sum += MultiPoly::monomial(vars, {k, i, j},
                                   make_rational(comp * s, factorial(j)));
      }
    }
  return TruncatedSeries(std::move(sum), {{"y", ymax}, {"q", qmax}});
}

}  // namespace partbinom
