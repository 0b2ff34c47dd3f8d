#include "klr/laurent.hpp"

#include <sstream>

namespace klr {

void Laurent::strip() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (klr::is_zero(it->second))
      it = c_.erase(it);
    else
      ++it;
  }
}

bool Laurent::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

Rational Laurent::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

int Laurent::lowest_exp() const {
  if (c_.empty()) throw err("EmptyLaurent", "lowest_exp of 0");
  return c_.begin()->first;
}

int Laurent::highest_exp() const {
  if (c_.empty()) throw err("EmptyLaurent", "highest_exp of 0");
  return c_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.c_) {
    Rational& v = c_[e];
    v += c;
    if (klr::is_zero(v)) c_.erase(e);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.c_) {
    Rational& v = c_[e];
    v -= c;
    if (klr::is_zero(v)) c_.erase(e);
  }
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) {
      Rational& v = r.c_[e1 + e2];
      v += c1 * c2;
    }
  r.strip();
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::operator*(const Rational& c) const {
  Laurent r;
  if (klr::is_zero(c)) return r;
  for (const auto& [e, v] : c_) r.c_[e] = v * c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

Rational Laurent::eval_one() const {
  Rational s(0);
  for (const auto& [e, c] : c_) s += c;
  return s;
}

void Laurent::divmod(const Laurent& a, const Laurent& b, Laurent& quo, Laurent& rem) {
  if (b.is_zero()) throw err("ZeroDenominator", "division by zero polynomial");
  quo = Laurent();
  if (a.is_zero()) {
    rem = a;
    return;
  }
  // q-powers are units: shift both operands to honest polynomials with
  // nonzero constant term, run classical long division, shift back.
  const int sa = a.lowest_exp(), sb = b.lowest_exp();
  Laurent ra = a.shifted(-sa), rb = b.shifted(-sb);
  const int db = rb.highest_exp();
  const Rational blead = rb.coeff(db);
  Laurent q;
  while (!ra.is_zero() && ra.highest_exp() >= db) {
    Laurent t = Laurent::monomial(ra.highest_exp() - db, ra.coeff(ra.highest_exp()) / blead);
    q += t;
    ra -= t * rb;
  }
  quo = q.shifted(sa - sb);
  rem = ra.shifted(sa);
}

Laurent Laurent::div_exact(const Laurent& d) const {
  Laurent q, r;
  divmod(*this, d, q, r);
  if (!r.is_zero()) throw err("InexactDivision", to_string() + " by " + d.to_string());
  return q;
}

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  // gcd in Q[q, q^{-1}]: q-powers are units, result normalized to have
  // constant lowest term 1.
  Laurent x = a, y = b;
  while (!y.is_zero()) {
    Laurent q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.shifted(-x.lowest_exp()) * (Rational(1) / x.coeff(x.lowest_exp()));
}

std::string Laurent::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print from highest exponent down.
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    Rational c = it->second;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    } else if (sgn(c) < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    const int e = it->first;
    if (e == 0) {
      os << rat_to_string(c);
    } else {
      if (c != 1) os << rat_to_string(c) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

Laurent q_integer(int n, int r) {
  if (n < 0) throw err("NegativeN", "q_integer(" + std::to_string(n) + ")");
  if (r <= 0) throw err("BadSymmetrizer", "r must be positive");
  Laurent p;
  for (int k = 0; k < n; ++k) p += Laurent::q(r * (n - 1 - 2 * k));
  return p;
}

Laurent q_factorial(int n, int r) {
  if (n < 0) throw err("NegativeN", "q_factorial(" + std::to_string(n) + ")");
  Laurent p(1);
  for (int k = 1; k <= n; ++k) p *= q_integer(k, r);
  return p;
}

Laurent q_binomial(int n, int k, int r) {
  if (k < 0 || k > n) return Laurent();
  return q_factorial(n, r).div_exact(q_factorial(k, r) * q_factorial(n - k, r));
}

}  // namespace klr
