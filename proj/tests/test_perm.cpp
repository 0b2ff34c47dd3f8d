#include <set>

#include "doctest.h"
#include "klr/perm.hpp"

using namespace klr;

TEST_CASE("perm basics") {
  Perm id(3);
  CHECK(id.is_identity());
  CHECK(id.length() == 0);
  Perm s1 = Perm::transposition(3, 0);
  CHECK(s1.length() == 1);
  CHECK((s1 * s1).is_identity());
  Perm w0 = Perm::longest(4);
  CHECK(w0.length() == 6);
  CHECK((w0 * w0).is_identity());
  CHECK(w0.inverse() == w0);
}

TEST_CASE("canonical word is the lex-min reduced word") {
  CHECK(canonical_word(Perm(3)).empty());
  CHECK(canonical_word(Perm::transposition(2, 0)) == Word{0});
  // longest element of S_3: both reduced words enumerated, lex-min picked.
  Perm w0 = Perm::longest(3);
  auto words = all_reduced_words(w0);
  Word lexmin = *std::min_element(words.begin(), words.end());
  CHECK(canonical_word(w0) == lexmin);
  CHECK(canonical_word(w0) == Word{0, 1, 0});
  for (int n = 2; n <= 4; ++n)
    for (const Perm& w : all_perms(n)) {
      const Word c = canonical_word(w);
      CHECK(static_cast<int>(c.size()) == w.length());
      CHECK(perm_of_word(n, c) == w);
      auto all = all_reduced_words(w);
      CHECK(c == *std::min_element(all.begin(), all.end()));
    }
}

TEST_CASE("word/permutation correspondence") {
  // tau_word acts rightmost first; check against direct strand tracing.
  const Word w{1, 0, 1};
  Perm p = perm_of_word(3, w);
  CHECK(p == Perm::transposition(3, 1) * Perm::transposition(3, 0) * Perm::transposition(3, 1));
}

TEST_CASE("moves_to_canonical transforms every reduced word") {
  for (int n = 2; n <= 5; ++n) {
    for (const Perm& w : all_perms(n)) {
      if (w.length() > 7 && n == 5) continue;  // keep runtime modest
      for (const Word& word : all_reduced_words(w)) {
        const auto moves = moves_to_canonical(n, word);
        Word cur = word;
        for (const auto& m : moves) {
          if (m.is_braid) {
            REQUIRE(m.pos + 2 < static_cast<int>(cur.size()));
            const int a = cur[m.pos], b = cur[m.pos + 1];
            CHECK(std::abs(a - b) == 1);
            CHECK(cur[m.pos + 2] == a);
          } else {
            CHECK(std::abs(cur[m.pos] - cur[m.pos + 1]) >= 2);
          }
          cur = apply_move(cur, m);
          // Every intermediate word stays a reduced word of w.
          CHECK(perm_of_word(n, cur) == w);
          CHECK(static_cast<int>(cur.size()) == w.length());
        }
        CHECK(cur == canonical_word(w));
      }
    }
  }
  // Spot-check the longest element of S_5 in full.
  const Perm w0 = Perm::longest(5);
  for (const Word& word : all_reduced_words(w0)) {
    Word cur = word;
    for (const auto& m : moves_to_canonical(5, word)) cur = apply_move(cur, m);
    CHECK(cur == canonical_word(w0));
  }
}

TEST_CASE("min coset reps and factorization") {
  // S_4 over S_2 x S_2: binom(4,2) = 6 reps.
  auto reps = min_coset_reps(4, {2, 2});
  CHECK(reps.size() == 6);
  std::set<std::vector<int>> seen;
  for (const Perm& w : all_perms(4)) {
    Perm rep, inner;
    coset_factorize(w, {2, 2}, rep, inner);
    CHECK(rep * inner == w);
    CHECK(rep.length() + inner.length() == w.length());
    // rep increasing on blocks
    CHECK(rep(0) < rep(1));
    CHECK(rep(2) < rep(3));
    seen.insert(rep.images());
  }
  CHECK(seen.size() == 6);

  for (const Perm& w : all_perms(5)) {
    Perm rep, inner;
    coset_factorize(w, {3, 2}, rep, inner);
    CHECK(rep * inner == w);
    CHECK(rep.length() + inner.length() == w.length());
  }
  CHECK(min_coset_reps(5, {3, 2}).size() == 10);
  CHECK(min_coset_reps(3, {1, 1, 1}).size() == 6);
}
