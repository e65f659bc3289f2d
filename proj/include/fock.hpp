// Higher-level Fock spaces: the vector representation U_e of sl-hat_e, its
// finite wedge powers of shape nu, the Chevalley operators e_i / f_i by the
// Leibniz rule with straightening, multipartition combinatorics (residues,
// blocks, the weight dictionary lambda -> lambda + rho_nu), and the
// level-rank / doubling embedding along Upsilon.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>

#include "affine_weyl.hpp"
#include "lattice.hpp"

namespace fock {

using lattice::mod;
using linalg::Rational;
using Tuple = std::vector<long long>;

// ---------------------------------------------------------------------
// Wedge vectors.
//
// A basis vector of wedge^nu U_e = wedge^{nu_1} U_e (x) ... (x)
// wedge^{nu_l} U_e is u_{la_1} ^ ... ^ u_{la_{nu_1}} (x) ..., indexed by a
// nu-dominant tuple la (strictly decreasing inside each nu-block).

// Normalize a tuple into nu-dominant form: sort each block strictly
// decreasing; the sign is -1 per adjacent transposition; tuples with a
// repeated entry inside a block straighten to zero.
inline std::optional<std::pair<Tuple, int>> straighten(
    const std::vector<int>& nu, Tuple t) {
  int sign = 1;
  size_t start = 0;
  for (int part : nu) {
    size_t stop = start + static_cast<size_t>(part);
    // Bubble sort, descending; count swaps.
    for (size_t i = start; i < stop; ++i)
      for (size_t j = start; j + 1 < stop - (i - start); ++j) {
        if (t[j] == t[j + 1]) return std::nullopt;
        if (t[j] < t[j + 1]) {
          std::swap(t[j], t[j + 1]);
          sign = -sign;
        }
      }
    for (size_t i = start; i + 1 < stop; ++i)
      if (t[i] == t[i + 1]) return std::nullopt;
    start = stop;
  }
  return std::make_pair(std::move(t), sign);
}

struct Wedge {
  std::map<Tuple, Rational> terms;

  static Wedge basis(const Tuple& t) {
    Wedge w;
    w.terms[t] = 1;
    return w;
  }

  void add(const Tuple& t, const Rational& c) {
    if (c == 0) return;
    Rational& slot = terms[t];
    slot += c;
    if (slot == 0) terms.erase(t);
  }

  Wedge& operator+=(const Wedge& o) {
    for (const auto& [t, c] : o.terms) add(t, c);
    return *this;
  }
  Wedge operator+(const Wedge& o) const {
    Wedge r = *this;
    r += o;
    return r;
  }
  Wedge operator-(const Wedge& o) const {
    Wedge r = *this;
    for (const auto& [t, c] : o.terms) r.add(t, -c);
    return r;
  }
  Wedge scaled(const Rational& c) const {
    Wedge r;
    if (c == 0) return r;
    for (const auto& [t, k] : terms) r.terms[t] = k * c;
    return r;
  }
  bool operator==(const Wedge& o) const { return terms == o.terms; }
  bool is_zero() const { return terms.empty(); }
};

// Apply a single-letter rule u_m -> coeff(m) * u_{m + shift} by the Leibniz
// rule across all wedge slots, then straighten.
template <typename Rule>
Wedge apply_letterwise(const std::vector<int>& nu, const Wedge& w, Rule rule,
                       long long shift) {
  Wedge out;
  for (const auto& [t, c] : w.terms) {
    for (size_t r = 0; r < t.size(); ++r) {
      if (!rule(t[r])) continue;
      Tuple moved = t;
      moved[r] += shift;
      auto norm = straighten(nu, std::move(moved));
      if (!norm) continue;
      out.add(norm->first, c * norm->second);
    }
  }
  return out;
}

// f_i(u_m) = [m = i mod e] u_{m+1}.
inline Wedge apply_f(int e, int i, const std::vector<int>& nu,
                     const Wedge& w) {
  return apply_letterwise(
      nu, w, [&](long long m) { return mod(m, e) == mod(i, e); }, +1);
}

// e_i(u_m) = [m = i+1 mod e] u_{m-1}.
inline Wedge apply_e(int e, int i, const std::vector<int>& nu,
                     const Wedge& w) {
  return apply_letterwise(
      nu, w, [&](long long m) { return mod(m - 1, e) == mod(i, e); }, -1);
}

// h_i acts diagonally: basis la gets sum_r ([la_r = i] - [la_r = i+1]).
inline Wedge apply_h(int e, int i, const std::vector<int>& nu,
                     const Wedge& w) {
  Wedge out;
  for (const auto& [t, c] : w.terms) {
    long long ev = 0;
    for (long long m : t) {
      if (mod(m, e) == mod(i, e)) ++ev;
      if (mod(m, e) == mod(i + 1, e)) --ev;
    }
    out.add(t, c * ev);
  }
  return out;
}

// The level-rank / doubling embedding on wedge bases: apply Upsilon to every
// slot.  Upsilon is strictly increasing, so nu-dominance is preserved and no
// signs appear.
inline Wedge embed_upsilon(int e, int k, const Wedge& w) {
  Wedge out;
  for (const auto& [t, c] : w.terms)
    out.add(lattice::upsilon_tuple(e, k, t), c);
  return out;
}

// The images of f_r and e_r under the doubling embedding sl-hat_e ->
// sl-hat_{e+1}: plain generators with a shifted index away from k, and
// commutators at r = k:
//   f_k -> [f_{k+1}, f_k] = f_{k+1} f_k - f_k f_{k+1},
//   e_k -> [e_k, e_{k+1}] = e_k e_{k+1} - e_{k+1} e_k.
inline Wedge apply_f_doubled(int e, int k, int r, const std::vector<int>& nu,
                             const Wedge& w) {
  if (r == k)
    return apply_f(e + 1, k + 1, nu, apply_f(e + 1, k, nu, w)) -
           apply_f(e + 1, k, nu, apply_f(e + 1, k + 1, nu, w));
  return apply_f(e + 1, r < k ? r : r + 1, nu, w);
}

inline Wedge apply_e_doubled(int e, int k, int r, const std::vector<int>& nu,
                             const Wedge& w) {
  if (r == k)
    return apply_e(e + 1, k, nu, apply_e(e + 1, k + 1, nu, w)) -
           apply_e(e + 1, k + 1, nu, apply_e(e + 1, k, nu, w));
  return apply_e(e + 1, r < k ? r : r + 1, nu, w);
}

// ---------------------------------------------------------------------
// Multipartitions.

// l components, each a partition (weakly decreasing positive parts).
using Multipartition = std::vector<std::vector<int>>;

inline int total_size(const Multipartition& la) {
  int n = 0;
  for (const auto& p : la)
    for (int x : p) n += x;
  return n;
}

namespace detail {
inline void partitions_rec(int d, int max_part, int max_len,
                           std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(d, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(d - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

inline std::vector<std::vector<int>> partitions(int d, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  detail::partitions_rec(d, d, max_len, cur, out);
  return out;
}

// All l-multipartitions of d; if row_limits is non-null, component r is
// restricted to at most row_limits[r] rows (the set P^nu_d).
inline std::vector<Multipartition> multipartitions(
    int l, int d, const std::vector<int>* row_limits = nullptr) {
  std::vector<Multipartition> out;
  Multipartition cur(l);
  // Distribute d among components.
  std::vector<int> sizes(l, 0);
  std::function<void(int, int)> rec = [&](int comp, int rest) {
    if (comp == l) {
      if (rest != 0) return;
      // Expand each component size into partitions.
      std::vector<std::vector<std::vector<int>>> choices(l);
      for (int r = 0; r < l; ++r)
        choices[r] =
            partitions(sizes[r], row_limits ? (*row_limits)[r] : sizes[r]);
      std::function<void(int)> pick = [&](int r) {
        if (r == l) {
          out.push_back(cur);
          return;
        }
        for (const auto& p : choices[r]) {
          cur[r] = p;
          pick(r + 1);
        }
      };
      pick(0);
      return;
    }
    for (int s = 0; s <= rest; ++s) {
      sizes[comp] = s;
      rec(comp + 1, rest - s);
    }
  };
  rec(0, d);
  return out;
}

// Residue of the box in row i, column j (1-based) of component r (0-based):
// nu_r + j - i mod e.  The deformed residue keeps the integer and the
// component index.
inline long long box_residue(int e, int charge, int i, int j) {
  return mod(charge + j - i, e);
}

struct DeformedResidue {
  long long content;  // charge + j - i, not reduced
  int component;
  auto operator<=>(const DeformedResidue&) const = default;
};

// Residue content of a multipartition: counts of boxes per residue class.
// This labels the block P^l_alpha containing la.
inline std::map<long long, int> block_content(int e,
                                              const std::vector<int>& nu,
                                              const Multipartition& la) {
  std::map<long long, int> alpha;
  for (size_t r = 0; r < la.size(); ++r)
    for (size_t i = 0; i < la[r].size(); ++i)
      for (int j = 1; j <= la[r][i]; ++j)
        ++alpha[box_residue(e, nu[r], static_cast<int>(i) + 1, j)];
  return alpha;
}

inline std::map<DeformedResidue, int> deformed_block_content(
    const std::vector<int>& nu, const Multipartition& la) {
  std::map<DeformedResidue, int> alpha;
  for (size_t r = 0; r < la.size(); ++r)
    for (size_t i = 0; i < la[r].size(); ++i)
      for (int j = 1; j <= la[r][i]; ++j)
        ++alpha[DeformedResidue{nu[r] + j - static_cast<int>(i) - 1,
                                static_cast<int>(r)}];
  return alpha;
}

// Weight dictionary: a multipartition with at most nu_r rows in component r
// maps to the nu-dominant tuple lambda + rho_nu (rows padded with zeros).
inline Tuple to_weight(const std::vector<int>& nu, const Multipartition& la) {
  Tuple t;
  for (size_t r = 0; r < nu.size(); ++r)
    for (int i = 1; i <= nu[r]; ++i) {
      long long part =
          i <= static_cast<int>(la[r].size()) ? la[r][i - 1] : 0;
      t.push_back(part + nu[r] - i + 1);
    }
  return t;
}

inline std::optional<Multipartition> from_weight(const std::vector<int>& nu,
                                                 const Tuple& t) {
  Multipartition la(nu.size());
  size_t pos = 0;
  for (size_t r = 0; r < nu.size(); ++r) {
    for (int i = 1; i <= nu[r]; ++i) {
      long long part = t[pos++] - (nu[r] - i + 1);
      if (part < 0) return std::nullopt;
      if (part > 0) la[r].push_back(static_cast<int>(part));
    }
    // Rows must be weakly decreasing for a valid partition.
    for (size_t i = 0; i + 1 < la[r].size(); ++i)
      if (la[r][i] < la[r][i + 1]) return std::nullopt;
  }
  return la;
}

}  // namespace fock
