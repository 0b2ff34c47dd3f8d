#ifndef KLR_LAURENT_HPP
#define KLR_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "klr/rational.hpp"

namespace klr {

/// Exact Laurent polynomial in the formal variable q, coefficients in Q.
/// Canonical form: no stored zero coefficients, so operator== is structural.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rational& c) {
    if (!klr::is_zero(c)) c_[0] = c;
  }
  explicit Laurent(long c) : Laurent(Rational(c)) {}

  static Laurent monomial(int exp, const Rational& c = Rational(1)) {
    Laurent p;
    if (!klr::is_zero(c)) p.c_[exp] = c;
    return p;
  }
  static Laurent q(int exp = 1) { return monomial(exp); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  const std::map<int, Rational>& coeffs() const { return c_; }
  Rational coeff(int exp) const;

  int lowest_exp() const;   // requires nonzero
  int highest_exp() const;  // requires nonzero

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o);
  Laurent operator*(const Rational& c) const;
  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return c_ != o.c_; }
  bool operator<(const Laurent& o) const { return c_ < o.c_; }

  /// Bar involution, q -> q^{-1}.
  Laurent bar() const;
  /// Multiply by q^k.
  Laurent shifted(int k) const;
  /// Value at q = 1 (sum of coefficients).
  Rational eval_one() const;

  /// Exact division; throws InexactDivision when the remainder is nonzero.
  Laurent div_exact(const Laurent& d) const;
  /// Long division of Laurent polynomials: *this = q * d + r with the
  /// remainder's support strictly below deg(d) after q-power alignment.
  static void divmod(const Laurent& a, const Laurent& b, Laurent& quo, Laurent& rem);
  static Laurent gcd(const Laurent& a, const Laurent& b);

  std::string to_string() const;

 private:
  void strip();
  std::map<int, Rational> c_;
};

inline Laurent operator*(const Rational& c, const Laurent& p) { return p * c; }

/// [n]_i = (q_i^n - q_i^{-n})/(q_i - q_i^{-1}) with q_i = q^r; n >= 0.
Laurent q_integer(int n, int r);
/// [n]_i! = [n]_i [n-1]_i ... [1]_i (empty product = 1).
Laurent q_factorial(int n, int r);
/// Gaussian binomial [n choose k]_i; always a Laurent polynomial.
Laurent q_binomial(int n, int k, int r);

}  // namespace klr

#endif
