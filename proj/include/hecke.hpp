// Affine Hecke algebras of type GL_d in Bernstein normal form X^a T_w, and
// their cyclotomic quotients at generic rational parameters.
//
// The affine algebra is handled symbolically through the rewriting rules
//   T_r X^b = X^{s_r b} T_r + (q-1) * (geometric correction),
//   T_w T_r = T_{w s_r}                if l(w s_r) > l(w),
//           = q T_{w s_r} + (q-1) T_w  otherwise.
// The cyclotomic quotient H^Q_d (generators X_i invertible, relation
// prod_t (X_1 - Q_t) = 0) is realized by its seminormal representation:
// one exact rational matrix block per l-multipartition of d, with basis
// indexed by standard tableaux.  Generic parameters make this faithful, so
// membership/reduction questions become exact linear algebra.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "fock.hpp"
#include "linalg.hpp"

namespace hecke {

using linalg::Matrix;
using linalg::Rational;

inline Rational rat_pow(const Rational& x, long long n) {
  Rational r = 1, base = x;
  bool inv = n < 0;
  if (inv) n = -n;
  for (; n; n >>= 1) {
    if (n & 1) r *= base;
    base *= base;
  }
  return inv ? Rational(1) / r : r;
}

// Parameters: q and the cyclotomic parameters Q_1..Q_l.  The defaults are
// multiplicatively independent rationals, generic enough for semisimplicity.
struct Params {
  Rational q = 2;
  std::vector<Rational> Q = {3, 5};
};

// ---------------------------------------------------------------------
// Finite symmetric group S_d, windows 0-based.

using Perm = std::vector<int>;

inline Perm perm_identity(int d) {
  Perm p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  return p;
}
inline Perm perm_simple(int d, int r) {  // r in [1, d-1]
  Perm p = perm_identity(d);
  std::swap(p[r - 1], p[r]);
  return p;
}
inline Perm perm_mult(const Perm& a, const Perm& b) {  // (ab)(i) = a(b(i))
  Perm p(a.size());
  for (size_t i = 0; i < a.size(); ++i) p[i] = a[b[i]];
  return p;
}
inline int perm_length(const Perm& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv;
}
inline std::vector<int> perm_reduced_word(Perm p) {
  std::vector<int> word;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t r = 1; r < p.size(); ++r)
      if (p[r - 1] > p[r]) {  // right descent: strip s_r
        std::swap(p[r - 1], p[r]);
        word.push_back(static_cast<int>(r));
        moved = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

// ---------------------------------------------------------------------
// Elements of the affine Hecke algebra.

struct TermKey {
  std::vector<long long> a;  // Laurent exponents of X_1..X_d
  Perm w;
  auto operator<=>(const TermKey&) const = default;
};

class Element {
 public:
  Element() = default;
  static Element term(std::vector<long long> a, Perm w,
                      const Rational& c = 1) {
    Element e;
    e.add(TermKey{std::move(a), std::move(w)}, c);
    return e;
  }
  static Element one(int d) {
    return term(std::vector<long long>(d, 0), perm_identity(d));
  }
  static Element T(int d, int r) {
    return term(std::vector<long long>(d, 0), perm_simple(d, r));
  }
  static Element X(int d, int i, long long power = 1) {  // i in [1, d]
    std::vector<long long> a(d, 0);
    a[i - 1] = power;
    return term(std::move(a), perm_identity(d));
  }

  const std::map<TermKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const Element& o) const { return terms_ == o.terms_; }

  void add(const TermKey& k, const Rational& c) {
    if (c == 0) return;
    Rational& slot = terms_[k];
    slot += c;
    if (slot == 0) terms_.erase(k);
  }

  Element& operator+=(const Element& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  Element operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
  }
  Element operator-(const Element& o) const {
    Element r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
  }
  Element scaled(const Rational& c) const {
    Element r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
  }

 private:
  std::map<TermKey, Rational> terms_;
};

// T_r X^b in normal form:
// T_r X^b = X^{s_r b} T_r + (q-1) * G, where, writing t = X_r / X_{r+1} and
// d = b_r - b_{r+1},  G = (X^b - X^{s_r b}) / (1 - t) expands to
//   G = - sum_{j=0}^{d-1} X^{s_r b} t^j   (d > 0),
//   G = + sum_{j=d}^{-1}  X^{s_r b} t^j   (d < 0),   G = 0 for d = 0.
// This reproduces T_r X_{r+1} = X_r T_r + (q-1) X_{r+1} and
// T_r X_r = X_{r+1} T_r - (q-1) X_{r+1}.
inline Element push_Tr_past_X(int dsize, int r, const std::vector<long long>& b,
                              const Params& par) {
  std::vector<long long> sb = b;
  std::swap(sb[r - 1], sb[r]);
  Element out = Element::term(sb, perm_simple(dsize, r));
  long long diff = b[r - 1] - b[r];
  auto add_t_power = [&](long long j, const Rational& c) {
    std::vector<long long> exp = sb;
    exp[r - 1] += j;
    exp[r] -= j;
    out += Element::term(std::move(exp), perm_identity(dsize), c);
  };
  if (diff > 0)
    for (long long j = 0; j <= diff - 1; ++j) add_t_power(j, -(par.q - 1));
  else
    for (long long j = diff; j <= -1; ++j) add_t_power(j, par.q - 1);
  return out;
}

// Right multiplication by T_{s_r}, keeping normal form.
inline Element mult_by_T(const Element& x, int r, const Params& par) {
  Element out;
  for (const auto& [k, c] : x.terms()) {
    Perm ws = perm_mult(k.w, perm_simple(static_cast<int>(k.w.size()), r));
    if (perm_length(ws) > perm_length(k.w)) {
      out.add(TermKey{k.a, ws}, c);
    } else {
      out.add(TermKey{k.a, ws}, c * par.q);
      out.add(k, c * (par.q - 1));
    }
  }
  return out;
}

// T_w X^b in normal form, by induction on l(w).
inline Element push_Tw_past_X(const Perm& w, const std::vector<long long>& b,
                              const Params& par) {
  int dsize = static_cast<int>(w.size());
  std::vector<int> word = perm_reduced_word(w);
  if (word.empty()) return Element::term(b, w);
  int r = word.back();
  Perm wprime = w;
  std::swap(wprime[r - 1], wprime[r]);  // w = w' s_r, l(w') = l(w) - 1
  Element tail = push_Tr_past_X(dsize, r, b, par);  // T_r X^b
  // T_w X^b = T_{w'} (T_r X^b): distribute over the two normal-form pieces.
  Element out;
  for (const auto& [k, c] : tail.terms()) {
    Element piece = push_Tw_past_X(wprime, k.a, par).scaled(c);
    if (perm_length(k.w) > 0) piece = mult_by_T(piece, r, par);
    out += piece;
  }
  return out;
}

inline Element multiply(const Element& x, const Element& y,
                        const Params& par) {
  Element out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      // (X^a T_w)(X^b T_v) = X^a (T_w X^b) T_v.
      Element mid = push_Tw_past_X(kx.w, ky.a, par).scaled(cx * cy);
      Element shifted;
      for (const auto& [k, c] : mid.terms()) {
        std::vector<long long> a = k.a;
        for (size_t i = 0; i < a.size(); ++i) a[i] += kx.a[i];
        shifted.add(TermKey{std::move(a), k.w}, c);
      }
      for (int r : perm_reduced_word(ky.w))
        shifted = mult_by_T(shifted, r, par);
      out += shifted;
    }
  return out;
}

// T_r^{-1} = q^{-1} T_r + (q^{-1} - 1).
inline Element t_inverse(int d, int r, const Params& par) {
  Rational qi = Rational(1) / par.q;
  return Element::T(d, r).scaled(qi) + Element::one(d).scaled(qi - 1);
}

// The involution IM: T_r -> -q T_r^{-1} = -T_r + (q-1), X_i -> X_i^{-1}.
inline Element involution_im(const Element& x, const Params& par) {
  Element out;
  for (const auto& [k, c] : x.terms()) {
    int d = static_cast<int>(k.w.size());
    std::vector<long long> na = k.a;
    for (auto& v : na) v = -v;
    Element img = Element::term(std::move(na), perm_identity(d), c);
    for (int r : perm_reduced_word(k.w)) {
      Element tr = Element::T(d, r).scaled(-1) +
                   Element::one(d).scaled(par.q - 1);
      img = multiply(img, tr, par);
    }
    out += img;
  }
  return out;
}

// ---------------------------------------------------------------------
// Cyclotomic quotient via the seminormal representation.

struct Box {
  int comp, row, col;  // all 0-based
  auto operator<=>(const Box&) const = default;
};
using Tableau = std::vector<Box>;  // entry m-1 is the box of m

struct CycBlock {
  fock::Multipartition shape;
  std::vector<Tableau> tableaux;
};

struct CyclotomicData {
  int d;
  Params par;
  std::vector<CycBlock> blocks;
  // Generator matrices per block: Tmat[b][r-1] for T_r, Xdiag[b][i-1] for X_i.
  std::vector<std::vector<Matrix>> Tmat;
  std::vector<std::vector<linalg::Vec>> Xdiag;
};

namespace detail {

inline void standard_tableaux_rec(const fock::Multipartition& shape, int placed,
                                  int total, fock::Multipartition& partial,
                                  Tableau& boxes,
                                  std::vector<Tableau>& out) {
  if (placed == total) {
    out.push_back(boxes);
    return;
  }
  for (size_t c = 0; c < shape.size(); ++c) {
    size_t rows = partial[c].size();
    for (size_t r = 0; r <= rows && r < shape[c].size(); ++r) {
      int cur = r < partial[c].size() ? partial[c][r] : 0;
      if (cur >= shape[c][r]) continue;                       // row full
      if (r > 0 && partial[c][r - 1] <= cur) continue;        // column rule
      if (r == partial[c].size()) partial[c].push_back(0);
      ++partial[c][r];
      boxes.push_back(Box{static_cast<int>(c), static_cast<int>(r), cur});
      standard_tableaux_rec(shape, placed + 1, total, partial, boxes, out);
      boxes.pop_back();
      --partial[c][r];
      if (partial[c][r] == 0) partial[c].pop_back();
    }
  }
}

}  // namespace detail

inline std::vector<Tableau> standard_tableaux(const fock::Multipartition& s) {
  std::vector<Tableau> out;
  fock::Multipartition partial(s.size());
  Tableau boxes;
  detail::standard_tableaux_rec(s, 0, fock::total_size(s), partial, boxes,
                                out);
  return out;
}

// Eigenvalue of X_m on v_T: q^{col - row} Q_{comp}.
inline Rational content_eigenvalue(const Params& par, const Box& b) {
  return rat_pow(par.q, b.col - b.row) * par.Q[b.comp];
}

inline CyclotomicData build_cyclotomic(int d, const Params& par) {
  CyclotomicData data;
  data.d = d;
  data.par = par;
  int l = static_cast<int>(par.Q.size());
  for (const auto& shape : fock::multipartitions(l, d)) {
    CycBlock blk;
    blk.shape = shape;
    blk.tableaux = standard_tableaux(shape);
    std::map<Tableau, size_t> index;
    for (size_t i = 0; i < blk.tableaux.size(); ++i)
      index[blk.tableaux[i]] = i;
    size_t n = blk.tableaux.size();

    std::vector<linalg::Vec> xdiag(d, linalg::Vec(n));
    for (size_t i = 0; i < n; ++i)
      for (int m = 0; m < d; ++m)
        xdiag[m][i] = content_eigenvalue(par, blk.tableaux[i][m]);

    std::vector<Matrix> tmat;
    for (int r = 1; r < d; ++r) {
      Matrix m(n, n);
      for (size_t i = 0; i < n; ++i) {
        const Tableau& tab = blk.tableaux[i];
        const Box& br = tab[r - 1];
        const Box& br1 = tab[r];
        if (br.comp == br1.comp && br.row == br1.row) {
          m.at(i, i) = par.q;  // same row: T_r acts by q
          continue;
        }
        if (br.comp == br1.comp && br.col == br1.col) {
          m.at(i, i) = -1;  // same column: T_r acts by -1
          continue;
        }
        Tableau swapped = tab;
        std::swap(swapped[r - 1], swapped[r]);
        size_t j = index.at(swapped);
        Rational alpha = content_eigenvalue(par, br);
        Rational beta = content_eigenvalue(par, br1);
        Rational x = (par.q - 1) * beta / (beta - alpha);
        Rational w = (par.q - 1) * alpha / (alpha - beta);
        // Column for v_T: T_r v_T = x v_T + v_U; fill the v_U column when
        // we reach it (y = x w + q keeps det = -q).
        m.at(i, i) = x;
        if (i < j) {
          m.at(j, i) = 1;
          m.at(i, j) = x * w + par.q;
        }
      }
      tmat.push_back(std::move(m));
    }
    data.Xdiag.push_back(std::move(xdiag));
    data.Tmat.push_back(std::move(tmat));
    data.blocks.push_back(std::move(blk));
  }
  return data;
}

// Image of an affine element in the seminormal representation, flattened to
// one long coordinate vector (concatenated matrix entries over all blocks).
inline linalg::Vec evaluate_flat(const CyclotomicData& data,
                                 const Element& el) {
  std::vector<Matrix> blocks;
  for (size_t b = 0; b < data.blocks.size(); ++b) {
    size_t n = data.blocks[b].tableaux.size();
    blocks.emplace_back(n, n);
  }
  for (const auto& [k, c] : el.terms()) {
    for (size_t b = 0; b < data.blocks.size(); ++b) {
      size_t n = data.blocks[b].tableaux.size();
      if (n == 0) continue;
      // X^a: diagonal.  T_w: product over a reduced word.
      Matrix m(n, n);
      for (size_t i = 0; i < n; ++i) {
        Rational diag = c;
        for (int t = 0; t < data.d; ++t)
          if (k.a[t] != 0) diag *= rat_pow(data.Xdiag[b][t][i], k.a[t]);
        m.at(i, i) = diag;
      }
      for (int r : perm_reduced_word(k.w)) m = m * data.Tmat[b][r - 1];
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
          blocks[b].at(i, j) += m.at(i, j);
    }
  }
  linalg::Vec flat;
  for (const auto& m : blocks)
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) flat.push_back(m.at(i, j));
  return flat;
}

// The candidate basis X^a T_w, 0 <= a_i < l, of the cyclotomic quotient.
inline std::vector<TermKey> cyclotomic_basis_keys(int d, int l) {
  std::vector<TermKey> keys;
  std::vector<Perm> perms;
  {
    Perm p = perm_identity(d);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<long long> a(d, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      for (const Perm& w : perms) keys.push_back(TermKey{a, w});
      return;
    }
    for (int v = 0; v < l; ++v) {
      a[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return keys;
}

// Reduction to the standard basis of the cyclotomic quotient: expresses the
// image of `el` as a combination of the basis X^a T_w (0 <= a_i < l).
// Returns nullopt only if the seminormal images of the basis fail to span,
// which cannot happen at generic parameters.
inline std::optional<std::map<TermKey, Rational>> cyclotomic_reduce(
    const CyclotomicData& data, const Element& el) {
  int l = static_cast<int>(data.par.Q.size());
  std::vector<TermKey> keys = cyclotomic_basis_keys(data.d, l);
  std::vector<linalg::Vec> images;
  for (const TermKey& k : keys)
    images.push_back(evaluate_flat(data, Element::term(k.a, k.w)));
  Matrix m = Matrix::from_rows(images).transpose();
  std::optional<linalg::Vec> sol = linalg::solve(m, evaluate_flat(data, el));
  if (!sol) return std::nullopt;
  std::map<TermKey, Rational> out;
  for (size_t i = 0; i < keys.size(); ++i)
    if ((*sol)[i] != 0) out[keys[i]] = (*sol)[i];
  return out;
}

// Dimension of the cyclotomic quotient as witnessed by the seminormal
// representation: rank of the basis images (should equal l^d d!).
inline size_t cyclotomic_rank(const CyclotomicData& data) {
  int l = static_cast<int>(data.par.Q.size());
  std::vector<linalg::Vec> images;
  for (const TermKey& k : cyclotomic_basis_keys(data.d, l))
    images.push_back(evaluate_flat(data, Element::term(k.a, k.w)));
  return linalg::span_dim(images);
}

}  // namespace hecke
