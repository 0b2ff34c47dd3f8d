#ifndef KLR_RATIONAL_HPP
#define KLR_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "klr/errors.hpp"

namespace klr {

// Exact rational scalar. Everything downstream (Laurent coefficients, module
// matrices, Gram entries) is built on this; no floating point anywhere.
using Rational = mpq_class;

inline std::string rat_to_string(const Rational& r) {
  return Rational(r).get_str();
}

/// mpq_class(n, d) does not canonicalize; this does.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw err("BadRational", "cannot parse '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace klr

#endif
