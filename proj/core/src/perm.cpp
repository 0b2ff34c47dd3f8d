#include "klr/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace klr {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= n() || seen[v]) throw err("BadPermutation", to_string());
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (int p = 0; p < n(); ++p)
    if (img_[p] != p) return false;
  return true;
}

int Perm::length() const {
  int inv = 0;
  for (int p = 0; p < n(); ++p)
    for (int q = p + 1; q < n(); ++q)
      if (img_[p] > img_[q]) ++inv;
  return inv;
}

Perm Perm::inverse() const {
  std::vector<int> inv(n());
  for (int p = 0; p < n(); ++p) inv[img_[p]] = p;
  return Perm(inv);
}

Perm Perm::operator*(const Perm& o) const {
  if (n() != o.n()) throw err("BadPermutation", "size mismatch in composition");
  std::vector<int> r(n());
  for (int p = 0; p < n(); ++p) r[p] = img_[o.img_[p]];
  return Perm(r);
}

Perm Perm::transposition(int n, int a) {
  if (a < 0 || a + 1 >= n) throw err("BadPermutation", "transposition out of range");
  Perm s(n);
  std::swap(s.img_[a], s.img_[a + 1]);
  return s;
}

Perm Perm::longest(int n) {
  std::vector<int> v(n);
  for (int p = 0; p < n; ++p) v[p] = n - 1 - p;
  return Perm(v);
}

Perm Perm::with_left(int a) const {
  // s_a * w: postcompose, swaps the values a, a+1.
  std::vector<int> r = img_;
  for (int& v : r) {
    if (v == a)
      v = a + 1;
    else if (v == a + 1)
      v = a;
  }
  return Perm(r);
}

Perm Perm::with_right(int a) const {
  // w * s_a: precompose, swaps positions a, a+1.
  std::vector<int> r = img_;
  std::swap(r[a], r[a + 1]);
  return Perm(r);
}

bool Perm::left_descent(int a) const {
  // l(s_a w) < l(w) iff the strand ending at a starts after the one ending at a+1.
  const Perm inv = inverse();
  return inv(a) > inv(a + 1);
}

bool Perm::right_descent(int a) const { return img_[a] > img_[a + 1]; }

std::string Perm::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int p = 0; p < n(); ++p) os << (p ? " " : "") << img_[p];
  os << "]";
  return os.str();
}

Perm perm_of_word(int n, const Word& w) {
  Perm p(n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = p.with_left(*it);
  return p;
}

Word canonical_word(const Perm& w) {
  Word out;
  Perm cur = w;
  while (!cur.is_identity()) {
    int c = -1;
    for (int a = 0; a + 1 < cur.n(); ++a)
      if (cur.left_descent(a)) {
        c = a;
        break;
      }
    out.push_back(c);
    cur = cur.with_left(c);
  }
  return out;
}

std::vector<Word> all_reduced_words(const Perm& w) {
  if (w.is_identity()) return {Word{}};
  std::vector<Word> out;
  for (int a = 0; a + 1 < w.n(); ++a) {
    if (!w.left_descent(a)) continue;
    for (const Word& rest : all_reduced_words(w.with_left(a))) {
      Word word{a};
      word.insert(word.end(), rest.begin(), rest.end());
      out.push_back(word);
    }
  }
  return out;
}

Word apply_move(const Word& w, const BraidMove& m) {
  Word r = w;
  if (m.is_braid) {
    // [a,b,a] <-> [b,a,b]
    std::swap(r[m.pos], r[m.pos + 1]);
    r[m.pos + 2] = r[m.pos];
  } else {
    std::swap(r[m.pos], r[m.pos + 1]);
  }
  return r;
}

namespace {

// Moves bringing the left descent c to the front of the reduced word w.
// Exchange recursion: if w = [a]+w' with a != c then c is a left descent of
// perm(w'); bring it up recursively, then one commutation or one braid
// (preceded by bringing a to the front of the tail) finishes.
void move_to_front(int n, Word& w, int c, int offset, std::vector<BraidMove>& path) {
  if (w.empty()) throw err("Internal", "move_to_front on empty word");
  if (w[0] == c) return;
  const int a = w[0];
  Word tail(w.begin() + 1, w.end());
  move_to_front(n, tail, c, offset + 1, path);
  if (std::abs(a - c) >= 2) {
    std::copy(tail.begin(), tail.end(), w.begin() + 1);
    BraidMove m{offset, false};
    path.push_back(m);
    w[0] = c;
    w[1] = a;
  } else {
    // w ~ [a, c, tail']; bring a to the front of tail' and braid.
    Word tail2(tail.begin() + 1, tail.end());
    move_to_front(n, tail2, a, offset + 2, path);
    w[1] = c;
    std::copy(tail2.begin(), tail2.end(), w.begin() + 2);
    BraidMove m{offset, true};
    path.push_back(m);
    w[0] = c;
    w[1] = a;
    w[2] = c;
  }
}

}  // namespace

std::vector<BraidMove> moves_to_canonical(int n, const Word& from) {
  std::vector<BraidMove> path;
  Word cur = from;
  const Perm target = perm_of_word(n, from);
  Word canon = canonical_word(target);
  int offset = 0;
  // Match the canonical word letter by letter from the left.
  for (int t = 0; t < static_cast<int>(canon.size()); ++t) {
    Word sub(cur.begin() + offset, cur.end());
    move_to_front(n, sub, canon[t], offset, path);
    std::copy(sub.begin(), sub.end(), cur.begin() + offset);
    ++offset;
  }
  return path;
}

std::vector<Perm> min_coset_reps(int n, const std::vector<int>& mu) {
  std::vector<Perm> out;
  std::vector<int> starts;
  int acc = 0;
  for (int m : mu) {
    starts.push_back(acc);
    acc += m;
  }
  if (acc != n) throw err("BadComposition", "composition does not sum to n");
  for (Perm& w : all_perms(n)) {
    bool ok = true;
    for (size_t b = 0; b < mu.size() && ok; ++b)
      for (int p = starts[b]; p + 1 < starts[b] + mu[b] && ok; ++p)
        if (w(p) > w(p + 1)) ok = false;
    if (ok) out.push_back(w);
  }
  // Deterministic order: by length then one-line form.
  std::sort(out.begin(), out.end(), [](const Perm& x, const Perm& y) {
    const int lx = x.length(), ly = y.length();
    if (lx != ly) return lx < ly;
    return x.images() < y.images();
  });
  return out;
}

void coset_factorize(const Perm& w, const std::vector<int>& mu, Perm& rep, Perm& inner) {
  const int n = w.n();
  std::vector<int> block_of(n), starts;
  int acc = 0;
  for (size_t b = 0; b < mu.size(); ++b) {
    starts.push_back(acc);
    for (int k = 0; k < mu[b]; ++k) block_of[acc + k] = static_cast<int>(b);
    acc += mu[b];
  }
  if (acc != n) throw err("BadComposition", "composition does not sum to n");
  // inner sorts each block by the w-image; rep = w * inner^{-1} is increasing
  // on blocks and lengths add.
  std::vector<int> innerimg(n);
  for (size_t b = 0; b < mu.size(); ++b) {
    const int s = starts[b], m = mu[b];
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int x, int y) { return w(s + x) < w(s + y); });
    // idx[k] = which block slot has the k-th smallest image; inner sends
    // position s+idx[k] to s+k.
    for (int k = 0; k < m; ++k) innerimg[s + idx[k]] = s + k;
  }
  inner = Perm(innerimg);
  rep = w * inner.inverse();
  if (rep.length() + inner.length() != w.length())
    throw err("Internal", "coset factorization lengths do not add");
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace klr
