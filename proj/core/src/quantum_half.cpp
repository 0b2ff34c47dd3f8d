#include "klr/quantum_half.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace klr {

RootWeight fword_weight(const CartanDatum& d, const FWord& w) {
  RootWeight nu(d.size());
  for (int i : w) nu[i] += 1;
  return nu;
}

void FExpr::strip() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  if (terms_.empty()) den_ = Laurent(1);
}

FExpr make_fexpr(std::map<FWord, Laurent> t, Laurent den) {
  if (den.is_zero()) throw err("ZeroDenominator", "FExpr denominator");
  FExpr e;
  e.terms_ = std::move(t);
  e.den_ = std::move(den);
  e.strip();
  return e;
}

RatFunc FExpr::coeff(const FWord& w) const {
  auto it = terms_.find(w);
  if (it == terms_.end()) return RatFunc();
  return RatFunc(it->second, den_);
}

FExpr FExpr::operator+(const FExpr& o) const {
  if (den_ == o.den_) {
    std::map<FWord, Laurent> t = terms_;
    for (const auto& [w, c] : o.terms_) {
      Laurent& v = t[w];
      v += c;
    }
    return make_fexpr(std::move(t), den_);
  }
  std::map<FWord, Laurent> t;
  for (const auto& [w, c] : terms_) t[w] = c * o.den_;
  for (const auto& [w, c] : o.terms_) {
    Laurent& v = t[w];
    v += c * den_;
  }
  return make_fexpr(std::move(t), den_ * o.den_);
}

FExpr FExpr::operator-(const FExpr& o) const { return *this + (-o); }

FExpr FExpr::operator-() const {
  std::map<FWord, Laurent> t;
  for (const auto& [w, c] : terms_) t[w] = -c;
  return make_fexpr(std::move(t), den_);
}

FExpr FExpr::operator*(const FExpr& o) const {
  std::map<FWord, Laurent> t;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      FWord w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      Laurent& v = t[w];
      v += c1 * c2;
    }
  return make_fexpr(std::move(t), den_ * o.den_);
}

FExpr FExpr::operator*(const Laurent& c) const {
  std::map<FWord, Laurent> t;
  for (const auto& [w, v] : terms_) t[w] = v * c;
  return make_fexpr(std::move(t), den_);
}

bool FExpr::equals(const FExpr& o) const {
  if (den_ == o.den_) return terms_ == o.terms_;
  FExpr diff = *this - o;
  return diff.is_zero();
}

FExpr FExpr::divided_by(const Laurent& d) const {
  if (d.is_zero()) throw err("ZeroDenominator", "FExpr division by zero");
  std::map<FWord, Laurent> t;
  bool exact = true;
  for (const auto& [w, c] : terms_) {
    Laurent q, r;
    Laurent::divmod(c, d, q, r);
    if (!r.is_zero()) {
      exact = false;
      break;
    }
    t[w] = q;
  }
  if (exact) return make_fexpr(std::move(t), den_);
  return make_fexpr(terms_, den_ * d);
}

bool FExpr::is_weight_homogeneous(const CartanDatum& d) const {
  if (terms_.empty()) return true;
  const RootWeight w0 = fword_weight(d, terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (fword_weight(d, w) != w0) return false;
  return true;
}

RootWeight FExpr::weight(const CartanDatum& d) const {
  if (terms_.empty()) throw err("EmptyExpr", "weight of zero element");
  if (!is_weight_homogeneous(d)) throw err("NotHomogeneous", "mixed-weight FExpr");
  return fword_weight(d, terms_.begin()->first);
}

std::string FExpr::to_string(const CartanDatum& d) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*";
    if (w.empty()) os << "1";
    for (int i : w) os << "f_" << d.id(i);
  }
  if (!den_.is_one()) os << " // (" << den_.to_string() << ")";
  return os.str();
}

TensorFExpr TensorFExpr::operator+(const TensorFExpr& o) const {
  TensorFExpr r = *this;
  for (const auto& [k, c] : o.terms_) {
    Laurent& v = r.terms_[k];
    v += c;
    if (v.is_zero()) r.terms_.erase(k);
  }
  return r;
}

void TensorFExpr::add_term(const FWord& a, const FWord& b, const Laurent& c) {
  if (c.is_zero()) return;
  Laurent& v = terms_[{a, b}];
  v += c;
  if (v.is_zero()) terms_.erase({a, b});
}

TensorFExpr TensorFExpr::mul(const CartanDatum& d, const TensorFExpr& o) const {
  TensorFExpr r;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) {
      const auto& [x1, x2] = k1;
      const auto& [y1, y2] = k2;
      const long twist = -root_form(d, fword_weight(d, x2), fword_weight(d, y1));
      FWord a = x1;
      a.insert(a.end(), y1.begin(), y1.end());
      FWord b = x2;
      b.insert(b.end(), y2.begin(), y2.end());
      r.add_term(a, b, c1 * c2 * Laurent::q(static_cast<int>(twist)));
    }
  return r;
}

FExpr eprime_apply(const CartanDatum& d, int i, const FExpr& x) {
  if (i < 0 || i >= d.size()) throw err("UnknownIndex", std::to_string(i));
  std::map<FWord, Laurent> t;
  for (const auto& [w, c] : x.terms()) {
    // e_i'(f_{j_1} ... f_{j_n}) = sum over occurrences j_k = i of
    // q^{-r_i * sum_{l<k} a_{i j_l}} * (word with letter k removed).
    Laurent pref(1);
    for (size_t k = 0; k < w.size(); ++k) {
      if (w[k] == i) {
        FWord rest;
        rest.reserve(w.size() - 1);
        rest.insert(rest.end(), w.begin(), w.begin() + static_cast<long>(k));
        rest.insert(rest.end(), w.begin() + static_cast<long>(k) + 1, w.end());
        Laurent& v = t[rest];
        v += c * pref;
      }
      pref = pref * Laurent::q(-d.r(i) * d.a(i, w[k]));
    }
  }
  return make_fexpr(std::move(t), x.den());
}

TensorFExpr twisted_coproduct(const CartanDatum& d, const FExpr& x) {
  if (!x.den().is_one())
    throw err("NonLaurentValue", "twisted_coproduct needs integral coefficients");
  TensorFExpr out;
  for (const auto& [w, c] : x.terms()) {
    TensorFExpr acc = TensorFExpr::unit();
    for (int i : w) {
      TensorFExpr fi;
      fi.add_term(FWord{i}, FWord{}, Laurent(1));
      fi.add_term(FWord{}, FWord{i}, Laurent(1));
      acc = acc.mul(d, fi);
    }
    TensorFExpr scaled;
    for (const auto& [k, v] : acc.terms()) scaled.add_term(k.first, k.second, v * c);
    out = out + scaled;
  }
  return out;
}

namespace {

// Shared recursion for both forms: peel the first letter of y's words.
// weight_factor(i) multiplies once per peeled letter i.
RatFunc form_recurse(const CartanDatum& d, const FExpr& x, const FExpr& y, bool lusztig) {
  RatFunc out;
  for (const auto& [w, c] : y.terms()) {
    RatFunc val;
    if (w.empty()) {
      // (x, 1) = coefficient of the empty word in x.
      val = x.coeff(FWord{});
    } else {
      const int j = w.front();
      FWord rest(w.begin() + 1, w.end());
      const FExpr ex = eprime_apply(d, j, x);
      val = form_recurse(d, ex, FExpr(rest), lusztig);
      if (lusztig) {
        const Laurent one_minus_qi2 = Laurent(1) - Laurent::q(2 * d.r(j));
        val = val / RatFunc(one_minus_qi2);
      }
    }
    out = out + val * RatFunc(c, y.den());
  }
  return out;
}

}  // namespace

RatFunc kashiwara_form_rat(const CartanDatum& d, const FExpr& x, const FExpr& y) {
  return form_recurse(d, x, y, false);
}

Laurent kashiwara_form(const CartanDatum& d, const FExpr& x, const FExpr& y) {
  return kashiwara_form_rat(d, x, y).as_laurent();
}

RatFunc lusztig_form(const CartanDatum& d, const FExpr& x, const FExpr& y) {
  return form_recurse(d, x, y, true);
}

FExpr serre_element(const CartanDatum& d, int i, int j) {
  if (i == j) throw err("SameIndex", d.id(i));
  if (d.a(i, j) == 0) {
    // Commutator relation, valid for every class of i (and of j).
    FExpr fi(FWord{i}), fj(FWord{j});
    return fi * fj - fj * fi;
  }
  if (!d.is_real(i)) throw err("NotReal", d.id(i));
  const int n = 1 - d.a(i, j);
  // sum_{r+s=n} (-1)^r f_i^{(r)} f_j f_i^{(s)}
  //   = (1/[n]_i!) sum_r (-1)^r [n choose r]_i f_i^r f_j f_i^s.
  std::map<FWord, Laurent> t;
  for (int rr = 0; rr <= n; ++rr) {
    const int ss = n - rr;
    FWord w;
    w.insert(w.end(), rr, i);
    w.push_back(j);
    w.insert(w.end(), ss, i);
    Laurent c = q_binomial(n, rr, d.r(i));
    if (rr % 2 == 1) c = -c;
    Laurent& v = t[w];
    v += c;
  }
  return make_fexpr(std::move(t), q_factorial(n, d.r(i)));
}

std::vector<FWord> enumerate_fwords(const CartanDatum& d, const RootWeight& nu) {
  std::vector<FWord> out;
  FWord cur;
  const int n = nu.ht();
  std::vector<int> remaining = nu.coords();
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < d.size(); ++i) {
      if (remaining[i] == 0) continue;
      remaining[i]--;
      cur.push_back(i);
      rec();
      cur.pop_back();
      remaining[i]++;
    }
  };
  if (!nu.is_nonnegative()) throw err("NegativeWeight", "enumerate_fwords needs nu >= 0");
  rec();
  return out;
}

std::vector<std::vector<Laurent>> kashiwara_gram(const CartanDatum& d, const RootWeight& nu) {
  const auto words = enumerate_fwords(d, nu);
  const size_t m = words.size();
  std::vector<std::vector<Laurent>> g(m, std::vector<Laurent>(m));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a; b < m; ++b) {
      g[a][b] = kashiwara_form(d, FExpr(words[a]), FExpr(words[b]));
      g[b][a] = g[a][b];
    }
  return g;
}

long weight_space_rank(const CartanDatum& d, const RootWeight& nu) {
  if (!nu.is_nonnegative()) throw err("NegativeWeight", "weight_space_rank needs nu >= 0");
  auto g = kashiwara_gram(d, nu);
  const size_t m = g.size();
  // Fraction-free (Bareiss) elimination over Q[q, q^{-1}].
  size_t rank = 0;
  Laurent prev(1);
  for (size_t col = 0; col < m && rank < m; ++col) {
    size_t piv = rank;
    while (piv < m && g[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(g[piv], g[rank]);
    for (size_t r2 = rank + 1; r2 < m; ++r2) {
      for (size_t c2 = col + 1; c2 < m; ++c2) {
        Laurent t = g[rank][col] * g[r2][c2] - g[r2][col] * g[rank][c2];
        g[r2][c2] = t.div_exact(prev);
      }
      g[r2][col] = Laurent();
    }
    prev = g[rank][col];
    ++rank;
  }
  return static_cast<long>(rank);
}

}  // namespace klr
