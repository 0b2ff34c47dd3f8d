#ifndef KLR_PERM_HPP
#define KLR_PERM_HPP

#include <string>
#include <vector>

#include "klr/errors.hpp"

namespace klr {

/// Permutation of {0,...,n-1} in one-line form: w[p] = image of position p.
/// In strand pictures, the strand entering at bottom position p leaves at top
/// position w[p].
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);                     // identity
  explicit Perm(std::vector<int> images);

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int p) const { return img_.at(p); }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  int length() const;  // number of inversions
  Perm inverse() const;
  /// Composition (this o o): apply o first.
  Perm operator*(const Perm& o) const;
  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  static Perm transposition(int n, int a);      // s_a swaps a, a+1 (0-based)
  static Perm longest(int n);                   // w_0

  Perm with_left(int a) const;   // s_a * this
  Perm with_right(int a) const;  // this * s_a
  bool left_descent(int a) const;
  bool right_descent(int a) const;

  std::string to_string() const;

 private:
  std::vector<int> img_;
};

/// Word = sequence of adjacent-transposition positions b_1..b_L, denoting the
/// product s_{b_1} s_{b_2} ... s_{b_L}; the rightmost letter acts first.
using Word = std::vector<int>;

Perm perm_of_word(int n, const Word& w);

/// Lexicographically smallest reduced word (greedy smallest left descent).
Word canonical_word(const Perm& w);

/// All reduced words of w (small permutations only; used by tests).
std::vector<Word> all_reduced_words(const Perm& w);

/// One Matsumoto move between reduced words.
struct BraidMove {
  int pos;        // offset of the modified subword
  bool is_braid;  // braid [a,b,a]<->[b,a,b] (|a-b|=1) vs commutation swap
};

/// Moves transforming the reduced word `from` into canonical_word(perm(from)).
/// Classical exchange-based recursion; no search.
std::vector<BraidMove> moves_to_canonical(int n, const Word& from);

Word apply_move(const Word& w, const BraidMove& m);

/// Minimal-length left S_mu-coset representatives in S_n, mu a composition.
/// A rep is increasing on every block of bottom positions.
std::vector<Perm> min_coset_reps(int n, const std::vector<int>& mu);

/// Unique factorization w = rep * inner with inner in S_mu and lengths adding.
void coset_factorize(const Perm& w, const std::vector<int>& mu, Perm& rep, Perm& inner);

/// Enumerates all permutations of S_n (n small).
std::vector<Perm> all_perms(int n);

}  // namespace klr

#endif
