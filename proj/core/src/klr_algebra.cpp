#include "klr/klr_algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace klr {

RootWeight seq_weight(const CartanDatum& d, const Seq& s) {
  RootWeight nu(d.size());
  for (int i : s) nu[i] += 1;
  return nu;
}

std::string seq_to_string(const CartanDatum& d, const Seq& s) {
  std::string out;
  bool multi = false;
  for (int i = 0; i < d.size(); ++i)
    if (d.id(i).size() > 1) multi = true;
  for (size_t k = 0; k < s.size(); ++k) {
    if (multi && k) out += ",";
    out += d.id(s[k]);
  }
  return out;
}

Seq seq_apply(const Perm& w, const Seq& s) {
  Seq r(s.size());
  for (size_t p = 0; p < s.size(); ++p) r[w(static_cast<int>(p))] = s[p];
  return r;
}

std::vector<Seq> enumerate_seq(const CartanDatum& d, const RootWeight& nu, int ht_cap) {
  if (!nu.is_nonnegative()) throw err("NegativeWeight", "enumerate_seq needs nu >= 0");
  if (nu.ht() > ht_cap)
    throw err("HtCapExceeded", "ht = " + std::to_string(nu.ht()) + " > cap " + std::to_string(ht_cap));
  std::vector<Seq> out;
  Seq cur;
  std::vector<int> rem = nu.coords();
  const int n = nu.ht();
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < d.size(); ++i) {
      if (!rem[i]) continue;
      --rem[i];
      cur.push_back(i);
      rec();
      cur.pop_back();
      ++rem[i];
    }
  };
  rec();
  return out;
}

std::string preset_name(Preset p) { return p == Preset::Standard ? "standard" : "modified"; }

long tau_degree(const CartanDatum& d, const Seq& src, const Perm& w) {
  long deg = 0;
  const int n = w.n();
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      if (w(k) > w(l)) deg -= d.form(src[k], src[l]);
  return deg;
}

long basis_key_degree(const CartanDatum& d, const BasisKey& k) {
  const Seq tgt = seq_apply(k.w, k.src);
  long deg = tau_degree(d, k.src, k.w);
  for (size_t p = 0; p < k.u.size(); ++p) deg += 2L * k.u[p] * d.r(tgt[p]);
  return deg;
}

KlrElement KlrElement::basis(const BasisKey& k, const Rational& c) {
  KlrElement e;
  e.add(k, c);
  return e;
}

KlrElement KlrElement::idempotent(const Seq& s) {
  BasisKey k{s, std::vector<int>(s.size(), 0), Perm(static_cast<int>(s.size()))};
  return basis(k);
}

void KlrElement::add(const BasisKey& k, const Rational& c) {
  if (klr::is_zero(c)) return;
  Rational& v = t_[k];
  v += c;
  if (klr::is_zero(v)) t_.erase(k);
}

void KlrElement::tag_preset(Preset p) {
  if (tagged_ && preset_ != p) throw err("PresetMismatch", "element already tagged");
  preset_ = p;
  tagged_ = true;
}

KlrElement KlrElement::operator+(const KlrElement& o) const {
  KlrElement r = *this;
  if (o.tagged_) r.tag_preset(o.preset_);
  for (const auto& [k, c] : o.t_) r.add(k, c);
  return r;
}

KlrElement KlrElement::operator-(const KlrElement& o) const {
  KlrElement r = *this;
  if (o.tagged_) r.tag_preset(o.preset_);
  for (const auto& [k, c] : o.t_) r.add(k, -c);
  return r;
}

KlrElement KlrElement::operator*(const Rational& c) const {
  KlrElement r;
  r.tagged_ = tagged_;
  r.preset_ = preset_;
  if (klr::is_zero(c)) return r;
  for (const auto& [k, v] : t_) r.t_[k] = v * c;
  return r;
}

bool KlrElement::is_matrix_homogeneous() const {
  if (t_.empty()) return true;
  const auto& k0 = t_.begin()->first;
  const Seq tgt0 = seq_apply(k0.w, k0.src);
  for (const auto& [k, c] : t_)
    if (k.src != k0.src || seq_apply(k.w, k.src) != tgt0) return false;
  return true;
}

bool KlrElement::is_degree_homogeneous(const CartanDatum& d) const {
  if (t_.empty()) return true;
  const long d0 = basis_key_degree(d, t_.begin()->first);
  for (const auto& [k, c] : t_)
    if (basis_key_degree(d, k) != d0) return false;
  return true;
}

long KlrElement::degree(const CartanDatum& d) const {
  if (t_.empty()) throw err("EmptyElement", "degree of 0");
  if (!is_degree_homogeneous(d)) throw err("NotHomogeneous", "mixed degrees");
  return basis_key_degree(d, t_.begin()->first);
}

std::string KlrElement::to_string(const CartanDatum& d) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c) << "*[";
    const Seq tgt = seq_apply(k.w, k.src);
    for (size_t p = 0; p < k.u.size(); ++p)
      if (k.u[p]) os << "x" << p + 1 << "^" << k.u[p];
    os << "t" << k.w.to_string() << " : " << seq_to_string(d, k.src) << "->"
       << seq_to_string(d, tgt) << "]";
  }
  return os.str();
}

std::vector<std::tuple<int, int, Rational>> KlrAlgebra::tau_square(const Seq& bottom, int m) const {
  const int c1 = bottom[m], c2 = bottom[m + 1];
  std::vector<std::tuple<int, int, Rational>> out;
  if (c1 == c2) {
    if (preset_ == Preset::Standard) return out;  // zero for every class
    if (d_.is_real(c1)) return out;
    if (d_.is_isotropic(c1)) {
      out.emplace_back(0, 0, Rational(1));
      return out;
    }
    // imaginary non-isotropic: (x_m^a + x_{m+1}^a)^2, a = -a_ii/2
    const int a = -d_.a(c1, c1) / 2;
    out.emplace_back(2 * a, 0, Rational(1));
    out.emplace_back(a, a, Rational(2));
    out.emplace_back(0, 2 * a, Rational(1));
    return out;
  }
  if (d_.form(c1, c2) == 0) {
    out.emplace_back(0, 0, Rational(1));
    return out;
  }
  out.emplace_back(-d_.a(c1, c2), 0, Rational(1));
  out.emplace_back(0, -d_.a(c2, c1), Rational(1));
  return out;
}

namespace {

KlrElement shift_dots(const KlrElement& e, const std::vector<int>& add) {
  KlrElement out;
  for (const auto& [k, c] : e.terms()) {
    BasisKey nk = k;
    for (size_t p = 0; p < add.size(); ++p) nk.u[p] += add[p];
    out.add(nk, c);
  }
  return out;
}

}  // namespace

const KlrElement& KlrAlgebra::reduced_word_to_basis(const Word& w, const Seq& src) const {
  const auto key = std::make_pair(src, w);
  auto it = word_cache_.find(key);
  if (it != word_cache_.end()) return it->second;

  const int n = static_cast<int>(src.size());
  KlrElement out;
  const auto moves = moves_to_canonical(n, w);
  Word cur = w;
  for (const auto& mv : moves) {
    Word nxt = apply_move(cur, mv);
    if (mv.is_braid) {
      const int a = std::min(cur[mv.pos], cur[mv.pos + 1]);
      const Word suffix(cur.begin() + mv.pos + 3, cur.end());
      const Word prefix(cur.begin(), cur.begin() + mv.pos);
      const Seq bottom = seq_apply(perm_of_word(n, suffix), src);
      const int c1 = bottom[a], c2 = bottom[a + 1], c3 = bottom[a + 2];
      if (c1 == c3 && d_.is_real(c1) && c1 != c2 && d_.form(c1, c2) != 0) {
        // tau_a tau_{a+1} tau_a = tau_{a+1} tau_a tau_{a+1}
        //   + sum_t x_a^t x_{a+2}^{A-t} on this bottom, A = -a_{c1 c2} - 1.
        const int A = -d_.a(c1, c2) - 1;
        const int sign = (cur[mv.pos] == a) ? 1 : -1;
        const KlrElement& tail = reduced_word_to_basis(suffix, src);
        for (int t = 0; t <= A; ++t) {
          std::vector<int> add(n, 0);
          add[a] += t;
          add[a + 2] += A - t;
          KlrElement term = shift_dots(tail, add);
          for (auto itp = prefix.rbegin(); itp != prefix.rend(); ++itp)
            term = mul_gen_left(Gen{Gen::Cross, *itp}, term);
          out = out + term * Rational(sign);
        }
      }
    }
    cur = std::move(nxt);
  }
  const Perm target = perm_of_word(n, w);
  out.add(BasisKey{src, std::vector<int>(n, 0), target}, Rational(1));
  return word_cache_.emplace(key, std::move(out)).first->second;
}

const KlrElement& KlrAlgebra::cross_times_tauword(int m, const Perm& w, const Seq& src) const {
  const auto key = std::make_tuple(src, m, w.images());
  auto it = cross_cache_.find(key);
  if (it != cross_cache_.end()) return it->second;

  const int n = w.n();
  KlrElement out;
  const Perm sm_w = w.with_left(m);
  if (sm_w.length() == w.length() + 1) {
    Word ww = canonical_word(w);
    ww.insert(ww.begin(), m);
    out = reduced_word_to_basis(ww, src);
  } else {
    // m is a left descent of w: w = s_m * sig with lengths adding.
    const Perm sig = sm_w;
    Word w2 = canonical_word(sig);
    Word wfull = w2;
    wfull.insert(wfull.begin(), m);
    // tau_{[m]+W2} normal-forms to tau_w + E_low.
    KlrElement e = reduced_word_to_basis(wfull, src);
    const BasisKey lead{src, std::vector<int>(n, 0), w};
    KlrElement e_low = e - KlrElement::basis(lead);
    for (const auto& [k, c] : e_low.terms())
      if (k.w.length() >= w.length())
        throw err("Internal", "descent expansion did not lower length");
    // tau_m tau_w = (tau_m tau_m) tau_sig - tau_m E_low.
    const Seq t2 = seq_apply(sig, src);
    for (const auto& [em, em1, c] : tau_square(t2, m)) {
      BasisKey k{src, std::vector<int>(n, 0), sig};
      k.u[m] = em;
      k.u[m + 1] = em1;
      out.add(k, c);
    }
    for (const auto& [k, c] : e_low.terms()) out = out - cross_times_basis(m, k, c);
  }
  return cross_cache_.emplace(key, std::move(out)).first->second;
}

KlrElement KlrAlgebra::cross_times_basis(int m, const BasisKey& k, const Rational& c) const {
  const int n = static_cast<int>(k.src.size());
  if (m < 0 || m + 1 >= n) throw err("BadPosition", "crossing out of range");
  const Seq tgt = seq_apply(k.w, k.src);
  KlrElement out;

  // Dots through the crossing: positions m, m+1 swap; equal real labels also
  // produce the divided-difference correction with the crossing deleted.
  std::vector<int> u_main = k.u;
  std::swap(u_main[m], u_main[m + 1]);
  out = shift_dots(cross_times_tauword(m, k.w, k.src), u_main) * c;

  if (tgt[m] == tgt[m + 1] && d_.is_real(tgt[m])) {
    const int a = k.u[m], b = k.u[m + 1];
    // tau_m x_m^a x_{m+1}^b = x_m^b x_{m+1}^a tau_m + D(a,b),
    // D = (x_m^a x_{m+1}^b - x_m^b x_{m+1}^a)/(x_m - x_{m+1}).
    if (a != b) {
      const int lo = std::min(a, b), hi = std::max(a, b);
      const int sign = (a > b) ? 1 : -1;
      for (int t = 0; t < hi - lo; ++t) {
        BasisKey nk = k;
        nk.u[m] = lo + t;
        nk.u[m + 1] = hi - 1 - t;
        out.add(nk, c * sign);
      }
    }
  }
  return out;
}

KlrElement KlrAlgebra::mul_gen_left(const Gen& g, const KlrElement& e) const {
  KlrElement out;
  if (g.kind == Gen::Dot) {
    for (const auto& [k, c] : e.terms()) {
      BasisKey nk = k;
      nk.u.at(g.pos) += 1;
      out.add(nk, c);
    }
    return out;
  }
  for (const auto& [k, c] : e.terms()) out = out + cross_times_basis(g.pos, k, c);
  return out;
}

KlrElement KlrAlgebra::mul(const KlrElement& a, const KlrElement& b) const {
  if ((a.has_preset() && a.preset_tag() != preset_) ||
      (b.has_preset() && b.preset_tag() != preset_))
    throw err("PresetMismatch", "operand belongs to the other relation preset");
  KlrElement out;
  for (const auto& [ka, ca] : a.terms()) {
    // Keep only b-terms whose target matches a's source.
    KlrElement part;
    for (const auto& [kb, cb] : b.terms())
      if (seq_apply(kb.w, kb.src) == ka.src) part.add(kb, cb);
    if (part.is_zero()) continue;
    // a-term = x^{u} tau_{c_1} ... tau_{c_L}; right factor acts first.
    const Word ww = canonical_word(ka.w);
    for (auto itw = ww.rbegin(); itw != ww.rend(); ++itw)
      part = mul_gen_left(Gen{Gen::Cross, *itw}, part);
    part = shift_dots(part, ka.u);
    out = out + part * ca;
  }
  out.tag_preset(preset_);
  return out;
}

KlrElement KlrAlgebra::psi(const KlrElement& a) const {
  KlrElement out;
  for (const auto& [k, c] : a.terms()) {
    const Seq tgt = seq_apply(k.w, k.src);
    // psi(x^u tau_w 1_src) = 1_src tau_{reversed word} x^u over source tgt.
    KlrElement e = KlrElement::basis(BasisKey{tgt, k.u, Perm(k.w.n())});
    for (int letter : canonical_word(k.w)) e = mul_gen_left(Gen{Gen::Cross, letter}, e);
    out = out + e * c;
  }
  return out;
}

KlrElement KlrAlgebra::word_element(const Seq& src, const std::vector<Gen>& gens) const {
  KlrElement e = KlrElement::idempotent(src);
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) e = mul_gen_left(*it, e);
  return e;
}

KlrElement KlrAlgebra::nilhecke_idempotent(int i, int n) const {
  if (!d_.is_real(i)) throw err("NotReal", d_.id(i));
  if (n < 1) throw err("NegativeN", "nilhecke_idempotent needs n >= 1");
  Seq s(n, i);
  std::vector<int> u(n, 0);
  for (int p = 0; p < n; ++p) u[p] = n - 1 - p;
  return KlrElement::basis(BasisKey{s, u, Perm::longest(n)});
}

bool KlrAlgebra::is_idempotent(const KlrElement& e) const { return mul(e, e) == e; }

void KlrAlgebra::clear_caches() const {
  cross_cache_.clear();
  word_cache_.clear();
}

QSeries graded_dim_pair(const CartanDatum& d, const Seq& i, const Seq& j, int order) {
  return series_expand(graded_dim_pair_ratfunc(d, i, j), order);
}

RatFunc graded_dim_pair_ratfunc(const CartanDatum& d, const Seq& i, const Seq& j) {
  if (seq_weight(d, i) != seq_weight(d, j)) throw err("WeightMismatch", "graded_dim_pair");
  const int n = static_cast<int>(i.size());
  Laurent num;
  for (const Perm& w : all_perms(n))
    if (seq_apply(w, j) == i) num += Laurent::q(static_cast<int>(tau_degree(d, j, w)));
  Laurent den(1);
  for (int k = 0; k < n; ++k) den *= Laurent(1) - Laurent::q(2 * d.r(i[k]));
  return RatFunc(num, den);
}

std::vector<int> canonical_reduced_word_1based(const Perm& w) {
  std::vector<int> out;
  for (int a : canonical_word(w)) out.push_back(a + 1);
  return out;
}

std::string element_to_json(const CartanDatum& d, const KlrElement& e) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [k, c] : e.terms()) {
    nlohmann::ordered_json t;
    t["target"] = seq_to_string(d, seq_apply(k.w, k.src));
    t["source"] = seq_to_string(d, k.src);
    t["exponents"] = k.u;
    t["word"] = canonical_reduced_word_1based(k.w);
    t["coeff"] = rat_to_string(c);
    arr.push_back(t);
  }
  return arr.dump();
}

}  // namespace klr
