#ifndef KLR_QSERIES_HPP
#define KLR_QSERIES_HPP

#include <map>
#include <string>

#include "klr/laurent.hpp"

namespace klr {

/// Truncated Laurent series: exact on every exponent <= order(); `low` is a
/// true lower bound of the support. Mixed-order arithmetic truncates to the
/// smaller order and records that in `clipped`.
class QSeries {
 public:
  QSeries() = default;
  QSeries(int low, int order) : low_(low), order_(order) {}

  static QSeries from_laurent(const Laurent& p, int order);

  int low() const { return low_; }
  int order() const { return order_; }
  bool clipped() const { return clipped_; }
  Rational coeff(int exp) const;
  void set_coeff(int exp, const Rational& c);
  const std::map<int, Rational>& coeffs() const { return c_; }

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries operator*(const Rational& c) const;

  /// Equality of all coefficients up to the common order.
  bool agrees_with(const QSeries& o) const;

  std::string to_string() const;

 private:
  int low_ = 0;
  int order_ = 0;
  bool clipped_ = false;
  std::map<int, Rational> c_;
};

/// Rational function num/den in q. Canonical: den is a polynomial in q with
/// nonzero constant term, gcd-reduced against num, lowest den coefficient 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Laurent(1)) {}
  RatFunc(Laurent num, Laurent den);
  explicit RatFunc(const Laurent& num) : RatFunc(num, Laurent(1)) {}
  explicit RatFunc(const Rational& c) : RatFunc(Laurent(c)) {}
  explicit RatFunc(long c) : RatFunc(Laurent(c)) {}

  static RatFunc one() { return RatFunc(Laurent(1)); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when den == 1 after reduction.
  bool is_laurent() const { return den_.is_one(); }
  /// Throws NonLaurentValue unless is_laurent().
  Laurent as_laurent() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc inverse() const;
  RatFunc bar() const;  // q -> q^{-1}

  std::string to_string() const;

 private:
  Laurent num_, den_;  // den: poly, den(0) = 1-normalized lowest coefficient
  void reduce();
};

/// Exact Laurent expansion of f through exponent `order`.
QSeries series_expand(const RatFunc& f, int order);

}  // namespace klr

#endif
