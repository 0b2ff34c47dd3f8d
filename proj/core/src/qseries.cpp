#include "klr/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace klr {

QSeries QSeries::from_laurent(const Laurent& p, int order) {
  QSeries s(p.is_zero() ? 0 : p.lowest_exp(), order);
  for (const auto& [e, c] : p.coeffs())
    if (e <= order) s.c_[e] = c;
  return s;
}

Rational QSeries::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

void QSeries::set_coeff(int exp, const Rational& c) {
  if (klr::is_zero(c))
    c_.erase(exp);
  else
    c_[exp] = c;
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries r(std::min(low_, o.low_), std::min(order_, o.order_));
  r.clipped_ = clipped_ || o.clipped_ || order_ != o.order_;
  for (const auto& [e, c] : c_)
    if (e <= r.order_) r.c_[e] = c;
  for (const auto& [e, c] : o.c_)
    if (e <= r.order_) {
      Rational& v = r.c_[e];
      v += c;
      if (klr::is_zero(v)) r.c_.erase(e);
    }
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + o * Rational(-1); }

QSeries QSeries::operator*(const QSeries& o) const {
  // Exact through min(N1 + low2, N2 + low1).
  QSeries r(low_ + o.low_, std::min(order_ + o.low_, o.order_ + low_));
  r.clipped_ = clipped_ || o.clipped_;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) {
      if (e1 + e2 > r.order_) continue;
      Rational& v = r.c_[e1 + e2];
      v += c1 * c2;
    }
  for (auto it = r.c_.begin(); it != r.c_.end();)
    it = klr::is_zero(it->second) ? r.c_.erase(it) : std::next(it);
  return r;
}

QSeries QSeries::operator*(const Rational& c) const {
  QSeries r(low_, order_);
  r.clipped_ = clipped_;
  if (!klr::is_zero(c))
    for (const auto& [e, v] : c_) r.c_[e] = v * c;
  return r;
}

bool QSeries::agrees_with(const QSeries& o) const {
  const int n = std::min(order_, o.order_);
  for (const auto& [e, c] : c_)
    if (e <= n && c != o.coeff(e)) return false;
  for (const auto& [e, c] : o.c_)
    if (e <= n && c != coeff(e)) return false;
  return true;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c) << "*q^" << e;
  }
  if (first) os << "0";
  os << " + O(q^" << order_ + 1 << ")";
  return os.str();
}

RatFunc::RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw err("ZeroDenominator", "RatFunc with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  // Pull the q-power of den into num; reduce by gcd; normalize lowest den
  // coefficient to 1. This makes the representation unique.
  const int sd = den_.lowest_exp();
  den_ = den_.shifted(-sd);
  num_ = num_.shifted(-sd);
  Laurent g = Laurent::gcd(num_.shifted(-num_.lowest_exp()), den_);
  if (!g.is_one()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  const Rational lc = den_.coeff(den_.lowest_exp());
  if (lc != 1) {
    num_ = num_ * (Rational(1) / lc);
    den_ = den_ * (Rational(1) / lc);
  }
  if (den_.lowest_exp() != 0) {
    num_ = num_.shifted(-den_.lowest_exp());
    den_ = den_.shifted(-den_.lowest_exp());
  }
}

Laurent RatFunc::as_laurent() const {
  if (!is_laurent()) throw err("NonLaurentValue", to_string());
  return num_;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw err("ZeroDenominator", "division by zero RatFunc");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw err("ZeroDenominator", "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

std::string RatFunc::to_string() const {
  if (is_laurent()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QSeries series_expand(const RatFunc& f, int order) {
  if (f.is_zero()) return QSeries(0, order);
  const Laurent& den = f.den();  // poly with den(0) != 0 by canonical form
  const Laurent& num = f.num();
  const int low = num.lowest_exp();
  QSeries s(low, order);
  // Solve num = den * s coefficientwise from the bottom up.
  const Rational d0 = den.coeff(0);
  for (int e = low; e <= order; ++e) {
    Rational acc = num.coeff(e);
    for (const auto& [k, dk] : den.coeffs()) {
      if (k == 0 || e - k < low) continue;
      acc -= dk * s.coeff(e - k);
    }
    s.set_coeff(e, acc / d0);
  }
  return s;
}

}  // namespace klr
