#ifndef KLR_KLR_ALGEBRA_HPP
#define KLR_KLR_ALGEBRA_HPP

#include <map>
#include <string>
#include <vector>

#include "klr/cartan.hpp"
#include "klr/laurent.hpp"
#include "klr/perm.hpp"
#include "klr/qseries.hpp"
#include "klr/rational.hpp"

namespace klr {

/// Sequence i = i_1 ... i_n in I, stored by index positions.
using Seq = std::vector<int>;

RootWeight seq_weight(const CartanDatum& d, const Seq& s);
std::string seq_to_string(const CartanDatum& d, const Seq& s);
Seq seq_apply(const Perm& w, const Seq& s);  // (w s)[w(p)] = s[p]

/// All sequences of content nu, lexicographic in the index order.
std::vector<Seq> enumerate_seq(const CartanDatum& d, const RootWeight& nu, int ht_cap = 8);

/// Which local relation family is active.
enum class Preset { Standard, Modified };

std::string preset_name(Preset p);

/// Normal-form basis word x_{1,i}^{u_1} ... x_{n,i}^{u_n} tau_w over source
/// sequence src: dots sit on the target sequence i = w(src), the crossing
/// word is the fixed lexicographically smallest reduced expression of w.
struct BasisKey {
  Seq src;
  std::vector<int> u;  // dot exponents, indexed by target positions
  Perm w;

  bool operator<(const BasisKey& o) const {
    if (src != o.src) return src < o.src;
    if (w.images() != o.w.images()) return w.images() < o.w.images();
    return u < o.u;
  }
  bool operator==(const BasisKey& o) const {
    return src == o.src && u == o.u && w.images() == o.w.images();
  }
};

/// deg(tau_w) over source sequence j: minus the sum of (alpha_{j_k}, alpha_{j_l})
/// over inversions k < l, w(k) > w(l). Independent of the reduced word.
long tau_degree(const CartanDatum& d, const Seq& src, const Perm& w);

long basis_key_degree(const CartanDatum& d, const BasisKey& k);

/// Element of R(nu) (Standard) or the modified algebra (Modified): a linear
/// combination of normal-form basis words. Keys may mix sources; products
/// match term sources against term targets and drop mismatches (zero).
class KlrElement {
 public:
  KlrElement() = default;

  static KlrElement basis(const BasisKey& k, const Rational& c = Rational(1));
  static KlrElement idempotent(const Seq& s);  // 1_s

  const std::map<BasisKey, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const BasisKey& k, const Rational& c);

  /// Preset tag; unset elements (bare basis words) are compatible with both.
  bool has_preset() const { return tagged_; }
  Preset preset_tag() const { return preset_; }
  void tag_preset(Preset p);

  KlrElement operator+(const KlrElement& o) const;
  KlrElement operator-(const KlrElement& o) const;
  KlrElement operator*(const Rational& c) const;
  bool operator==(const KlrElement& o) const { return t_ == o.t_; }
  bool operator!=(const KlrElement& o) const { return t_ != o.t_; }

  /// True when all terms share one (source, target) pair.
  bool is_matrix_homogeneous() const;
  /// True when all terms share one degree (datum needed for degrees).
  bool is_degree_homogeneous(const CartanDatum& d) const;
  long degree(const CartanDatum& d) const;  // requires homogeneity, nonzero

  std::string to_string(const CartanDatum& d) const;

 private:
  std::map<BasisKey, Rational> t_;
  Preset preset_ = Preset::Standard;
  bool tagged_ = false;
};

/// One generator in a product string.
struct Gen {
  enum Kind { Dot, Cross } kind;
  int pos;  // 0-based strand position
};

/// Rewriting engine for a fixed datum and preset. Normalizes products onto
/// the dots-left basis; memo caches are per-engine, so independent engines
/// can run concurrently.
class KlrAlgebra {
 public:
  KlrAlgebra(const CartanDatum& d, Preset preset) : d_(d), preset_(preset) {}

  const CartanDatum& datum() const { return d_; }
  Preset preset() const { return preset_; }

  /// Left multiplication by a generator.
  KlrElement mul_gen_left(const Gen& g, const KlrElement& e) const;
  /// Product a * b, rewritten to the normal-form basis. Terms whose
  /// source/target sequences do not match multiply to zero.
  KlrElement mul(const KlrElement& a, const KlrElement& b) const;
  /// psi: anti-involution fixing every generator (diagram flip).
  KlrElement psi(const KlrElement& a) const;

  /// Normal form of an arbitrary generator string g_1 g_2 ... g_L 1_src
  /// (rightmost acts first).
  KlrElement word_element(const Seq& src, const std::vector<Gen>& gens) const;

  /// tau_m^2 as a sum of dot monomials on the bottom sequence; empty = 0.
  /// Returned as (exponent at m, exponent at m+1, coefficient) triples.
  std::vector<std::tuple<int, int, Rational>> tau_square(const Seq& bottom, int m) const;

  /// e_{i,n}: the primitive nilHecke idempotent x_1^{n-1}...x_{n-1} tau_{w_0}.
  KlrElement nilhecke_idempotent(int i, int n) const;

  bool is_idempotent(const KlrElement& e) const;

  void clear_caches() const;

 private:
  KlrElement cross_times_basis(int m, const BasisKey& k, const Rational& c) const;
  const KlrElement& cross_times_tauword(int m, const Perm& w, const Seq& src) const;
  const KlrElement& reduced_word_to_basis(const Word& w, const Seq& src) const;

  const CartanDatum& d_;
  Preset preset_;
  mutable std::map<std::tuple<Seq, int, std::vector<int>>, KlrElement> cross_cache_;
  mutable std::map<std::pair<Seq, Word>, KlrElement> word_cache_;
};

/// Graded dimension series of 1_i R(nu) 1_j through order N:
/// sum over w with w(j) = i of q^{deg tau_w} * prod_k (1 - q^{2 r_{i_k}})^{-1}.
QSeries graded_dim_pair(const CartanDatum& d, const Seq& i, const Seq& j, int order);
/// Same value as an exact rational function.
RatFunc graded_dim_pair_ratfunc(const CartanDatum& d, const Seq& i, const Seq& j);

/// spec op: 1-based positions of the canonical reduced word.
std::vector<int> canonical_reduced_word_1based(const Perm& w);

/// JSON for elements: list of (target word, exponents, reduced word, coefficient).
std::string element_to_json(const CartanDatum& d, const KlrElement& e);

}  // namespace klr

#endif
