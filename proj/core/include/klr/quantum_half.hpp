#ifndef KLR_QUANTUM_HALF_HPP
#define KLR_QUANTUM_HALF_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/laurent.hpp"
#include "klr/qseries.hpp"

namespace klr {

/// Word f_{i_1} ... f_{i_n} in the free algebra on the f_i, stored by index
/// positions into the datum.
using FWord = std::vector<int>;

RootWeight fword_weight(const CartanDatum& d, const FWord& w);

/// Element of U_q^- presented on the word basis of the free algebra, written
/// as (1/den) * sum of Laurent-coefficient terms. The global denominator
/// exists so divided powers f_i^{(r)} = f_i^r / [r]_i! are representable
/// exactly; for ordinary elements den == 1.
class FExpr {
 public:
  FExpr() = default;
  explicit FExpr(const FWord& w, const Laurent& c = Laurent(1)) {
    if (!c.is_zero()) terms_[w] = c;
  }
  static FExpr one() { return FExpr(FWord{}); }
  static FExpr zero() { return FExpr(); }

  const std::map<FWord, Laurent>& terms() const { return terms_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a word as an honest rational function.
  RatFunc coeff(const FWord& w) const;

  FExpr operator+(const FExpr& o) const;
  FExpr operator-(const FExpr& o) const;
  FExpr operator*(const FExpr& o) const;  // concatenation product
  FExpr operator*(const Laurent& c) const;
  FExpr operator-() const;
  /// Equality as elements of U^- over Q(q) (cross-multiplied).
  bool equals(const FExpr& o) const;

  /// Divides every coefficient by d when exact, otherwise folds d into the
  /// global denominator.
  FExpr divided_by(const Laurent& d) const;

  /// All words share one weight? (zero counts as homogeneous)
  bool is_weight_homogeneous(const CartanDatum& d) const;
  RootWeight weight(const CartanDatum& d) const;  // requires homogeneous, nonzero

  std::string to_string(const CartanDatum& d) const;

 private:
  std::map<FWord, Laurent> terms_;
  Laurent den_{Rational(1)};
  void strip();
  friend FExpr make_fexpr(std::map<FWord, Laurent> t, Laurent den);
};

FExpr make_fexpr(std::map<FWord, Laurent> t, Laurent den);

/// Element of U^- (x) U^- with the twisted multiplication
/// (x1 (x) x2)(y1 (x) y2) = q^{-(|x2|,|y1|)} x1 y1 (x) x2 y2.
class TensorFExpr {
 public:
  TensorFExpr() = default;
  static TensorFExpr unit() {
    TensorFExpr t;
    t.terms_[{FWord{}, FWord{}}] = Laurent(1);
    return t;
  }
  const std::map<std::pair<FWord, FWord>, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorFExpr operator+(const TensorFExpr& o) const;
  TensorFExpr mul(const CartanDatum& d, const TensorFExpr& o) const;
  bool operator==(const TensorFExpr& o) const { return terms_ == o.terms_; }

  void add_term(const FWord& a, const FWord& b, const Laurent& c);

 private:
  std::map<std::pair<FWord, FWord>, Laurent> terms_;
};

/// Kashiwara operator e_i': e_i'(f_j w) = delta_ij w + q_i^{-a_ij} f_j e_i'(w).
FExpr eprime_apply(const CartanDatum& d, int i, const FExpr& x);

/// Twisted coproduct rho with rho(f_i) = f_i (x) 1 + 1 (x) f_i.
TensorFExpr twisted_coproduct(const CartanDatum& d, const FExpr& x);

/// Kashiwara form, values in Z[q,q^{-1}] on word inputs. Pairs of different
/// weights give 0 by convention.
Laurent kashiwara_form(const CartanDatum& d, const FExpr& x, const FExpr& y);
RatFunc kashiwara_form_rat(const CartanDatum& d, const FExpr& x, const FExpr& y);

/// Lusztig form: (1,1)_L = 1, (e_i'x, y)_L = (1 - q_i^2)(x, f_i y)_L.
RatFunc lusztig_form(const CartanDatum& d, const FExpr& x, const FExpr& y);

/// Quantum Serre combination sum_{r+s=1-a_ij} (-1)^r f_i^{(r)} f_j f_i^{(s)}
/// for real i != j; the plain commutator f_i f_j - f_j f_i when a_ij = 0.
FExpr serre_element(const CartanDatum& d, int i, int j);

/// rank of the Kashiwara Gram matrix on all words of weight nu over the
/// fraction field; equals dim U^-_{-nu}. Fraction-free elimination.
long weight_space_rank(const CartanDatum& d, const RootWeight& nu);

/// Gram matrix of the Kashiwara form on enumerate-ordered words of weight nu.
std::vector<std::vector<Laurent>> kashiwara_gram(const CartanDatum& d, const RootWeight& nu);

/// All words of weight nu in lexicographic order (index order).
std::vector<FWord> enumerate_fwords(const CartanDatum& d, const RootWeight& nu);

}  // namespace klr

#endif
