// Graded K-theory shadows of the functors between parabolic blocks: free
// Laurent-polynomial modules on Verma-class bases indexed by truncated
// coset sets, the matrices of the collapsing functor F and the graded
// splitting functor E, the shift assignment making their composition the
// balanced q-integer multiple of the identity, and the simple-support /
// index-set bookkeeping that shadows the duality theorem.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "affine_weyl.hpp"
#include "laurent.hpp"

namespace kth {

using aweyl::AffinePerm;
using laurent::Laurent;
using linalg::Rational;

// The basis ^vJ^nu_mu: minimal coset representatives w of wW_mu with
// w <= v whose weight w(1_mu) is nu-dominant.  An empty nu disables the
// dominance filter, giving the plain ^vJ_mu.
struct KBasis {
  int e = 0;
  std::vector<int> mu, nu;
  AffinePerm v;
  std::vector<AffinePerm> elems;

  std::optional<size_t> find(const AffinePerm& w) const {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == w) return i;
    return std::nullopt;
  }
};

inline KBasis k_basis(int e, const std::vector<int>& mu,
                      const std::vector<int>& nu, const AffinePerm& v) {
  KBasis b{e, mu, nu, v, {}};
  std::vector<long long> pt = aweyl::one_mu(mu);
  std::vector<int> gens = aweyl::parabolic_generators(e, pt);
  for (const AffinePerm& w : aweyl::truncated_min_reps(v, gens))
    if (nu.empty() || aweyl::is_nu_dominant(nu, aweyl::act_negative(w, e, pt)))
      b.elems.push_back(w);
  std::sort(b.elems.begin(), b.elems.end(),
            [](const AffinePerm& a, const AffinePerm& c) {
              auto la = a.length(), lc = c.length();
              return la != lc ? la < lc : a < c;
            });
  return b;
}

// A matrix with Laurent entries between two based blocks, column major in
// meaning: column j records the image of the j-th domain basis element.
struct GradedMatrix {
  KBasis row, col;
  std::map<std::pair<size_t, size_t>, Laurent> entries;

  Laurent at(size_t i, size_t j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? Laurent() : it->second;
  }
};

inline GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b) {
  GradedMatrix r{a.row, b.col, {}};
  for (const auto& [ij, c1] : a.entries)
    for (const auto& [jk, c2] : b.entries)
      if (ij.second == jk.first) {
        Laurent& slot = r.entries[{ij.first, jk.second}];
        slot += c1 * c2;
        if (slot.is_zero()) r.entries.erase({ij.first, jk.second});
      }
  return r;
}

inline bool is_scalar_identity(const GradedMatrix& m, const Laurent& c) {
  if (m.row.elems.size() != m.col.elems.size()) return false;
  for (size_t i = 0; i < m.row.elems.size(); ++i)
    for (size_t j = 0; j < m.col.elems.size(); ++j)
      if (m.at(i, j) != (i == j ? c : Laurent())) return false;
  return true;
}

// Specialization q = 1, as a rational matrix in the same sparse format.
inline std::map<std::pair<size_t, size_t>, Rational> at_q_one(
    const GradedMatrix& m) {
  std::map<std::pair<size_t, size_t>, Rational> out;
  for (const auto& [ij, c] : m.entries)
    if (c.eval_at_one() != 0) out[ij] = c.eval_at_one();
  return out;
}

// A matrix together with the domain elements whose image left the
// truncated target basis; a nonempty escape list signals that the bound v
// is not positioned compatibly with the target parabolic.
struct MatrixReport {
  GradedMatrix m;
  std::vector<AffinePerm> escaped;
  bool ok() const { return escaped.empty(); }
};

// Collapsing matrix (ungraded, entries in {0,1}): requires W_from inside
// W_to; sends w in ^vJ_from to the minimal representative of wW_to.
inline MatrixReport collapse_matrix(int e, const std::vector<int>& from,
                                    const std::vector<int>& to,
                                    const AffinePerm& v) {
  MatrixReport r{{k_basis(e, to, {}, v), k_basis(e, from, {}, v), {}}, {}};
  std::vector<int> to_gens = aweyl::parabolic_generators(e, aweyl::one_mu(to));
  for (size_t j = 0; j < r.m.col.elems.size(); ++j) {
    AffinePerm rep = aweyl::min_coset_rep(r.m.col.elems[j], to_gens);
    if (auto i = r.m.row.find(rep))
      r.m.entries[{*i, j}] = Laurent::monomial(0);
    else
      r.escaped.push_back(r.m.col.elems[j]);
  }
  return r;
}

// Graded splitting matrix: requires W_to inside W_from; the column of w in
// ^vJ_from is the sum of q^{l(z)} (wz) over the shortest representatives z
// of W_from / W_to.
inline MatrixReport split_matrix(int e, const std::vector<int>& from,
                                 const std::vector<int>& to,
                                 const AffinePerm& v) {
  MatrixReport r{{k_basis(e, to, {}, v), k_basis(e, from, {}, v), {}}, {}};
  int N = v.n();
  std::vector<int> from_gens =
      aweyl::parabolic_generators(e, aweyl::one_mu(from));
  std::vector<int> to_gens = aweyl::parabolic_generators(e, aweyl::one_mu(to));
  std::vector<AffinePerm> zs = aweyl::relative_min_reps(N, from_gens, to_gens);
  for (size_t j = 0; j < r.m.col.elems.size(); ++j)
    for (const AffinePerm& z : zs) {
      AffinePerm u = r.m.col.elems[j] * z;
      if (auto i = r.m.row.find(u))
        r.m.entries[{*i, j}] +=
            Laurent::monomial(static_cast<int>(z.length()));
      else
        r.escaped.push_back(u);
    }
  return r;
}

// Verma matrix of F (case W_mu inside W_mu', i.e. mu_k = 1).
inline MatrixReport matrix_F(int e, const std::vector<int>& mu,
                             const std::vector<int>& mu_prime,
                             const AffinePerm& v) {
  return collapse_matrix(e, mu, mu_prime, v);
}

// Graded Verma matrix of E (same case): ^vJ_{mu'} to ^vJ_mu.
inline MatrixReport matrix_E_graded(int e, const std::vector<int>& mu,
                                    const std::vector<int>& mu_prime,
                                    const AffinePerm& v) {
  return split_matrix(e, mu_prime, mu, v);
}

// Shift assignment c on the collapse domain so that the composition
// (diag q^{c}) . collapse . split equals [t]_q Id balanced, where t is the
// relative coset size.  Infeasibility is a valid, explained output.
struct ShiftSolution {
  bool ok = false;
  int t = 0;  // number of balanced summands
  std::map<AffinePerm, int> c;
  std::string failure;
};

inline ShiftSolution solve_shifts(const MatrixReport& collapse,
                                  const MatrixReport& split) {
  ShiftSolution sol;
  if (!collapse.ok() || !split.ok()) {
    sol.failure = "image escapes the truncated basis";
    return sol;
  }
  const KBasis& small = split.m.col;  // == collapse.m.row as index sets
  const KBasis& big = split.m.row;    // == collapse.m.col
  if (collapse.m.row.elems != small.elems ||
      collapse.m.col.elems != big.elems) {
    sol.failure = "mismatched bases between collapse and split";
    return sol;
  }
  // Gather each split column as (big index, degree) pairs.
  std::vector<std::vector<std::pair<int, size_t>>> cols(small.elems.size());
  for (const auto& [ij, cf] : split.m.entries) {
    if (cf.coeffs().size() != 1 || cf.coeffs().begin()->second != 1) {
      sol.failure = "split entry is not a single monomial";
      return sol;
    }
    cols[ij.second].push_back({cf.coeffs().begin()->first, ij.first});
  }
  size_t t = cols.empty() ? 0 : cols[0].size();
  std::set<size_t> assigned;
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != t) {
      sol.failure = "columns of unequal support size";
      return sol;
    }
    std::sort(cols[j].begin(), cols[j].end());
    for (size_t r = 0; r < t; ++r) {
      auto [len, u] = cols[j][r];
      if (!assigned.insert(u).second) {
        sol.failure = "conflicting constraints on a basis element";
        return sol;
      }
      // c(u) + len = 2r - t + 1.
      sol.c[big.elems[u]] = 2 * static_cast<int>(r) -
                            static_cast<int>(t) + 1 - len;
    }
  }
  if (assigned.size() != big.elems.size()) {
    sol.failure = "cosets do not partition the truncated basis";
    return sol;
  }
  sol.t = static_cast<int>(t);
  sol.ok = true;
  return sol;
}

// Apply the solved shifts to the collapse matrix: entry (i, j) becomes
// q^{c(col_j)}.
inline GradedMatrix shifted_collapse(const MatrixReport& collapse,
                                     const ShiftSolution& sol) {
  GradedMatrix m = collapse.m;
  for (auto& [ij, cf] : m.entries)
    cf = cf * Laurent::monomial(sol.c.at(m.col.elems[ij.second]));
  return m;
}

// End-to-end check of the composition identity for a solved instance.
inline bool composition_identity_holds(const MatrixReport& collapse,
                                       const MatrixReport& split,
                                       const ShiftSolution& sol) {
  if (!sol.ok) return false;
  return is_scalar_identity(mat_mul(shifted_collapse(collapse, sol), split.m),
                            laurent::q_integer(sol.t));
}

// The truncated positive-level index set ^uJ^{dom}_{nu,+}: longest coset
// representatives w of wW_nu with w <= u whose weight w(1^+_nu) under the
// positive level-l action is dom-dominant.
inline std::set<AffinePerm> positive_index_set(const std::vector<int>& nu,
                                               const std::vector<int>& dom,
                                               const AffinePerm& u) {
  long long l = static_cast<long long>(nu.size());
  std::vector<long long> pt = aweyl::one_mu_plus(nu);
  std::vector<int> nu_gens =
      aweyl::stabilizer_generators(l, pt, aweyl::act_positive);
  std::set<AffinePerm> out;
  for (const AffinePerm& w : aweyl::bruhat_interval_below(u))
    if (aweyl::is_max_coset_rep(w, nu_gens) &&
        aweyl::is_nu_dominant(dom, aweyl::act_positive(w, l, pt)))
      out.insert(w);
  return out;
}

// Bookkeeping for the duality theorem at the level of index sets: the
// simple-module support of F is the sub-basis ^vJ^nu_{mu'} of ^vJ^nu_mu,
// and transporting it by w -> w^{-1} must reproduce the inclusion of the
// positive-level index sets.
struct DualityReport {
  bool precondition_ok = false;      // v lies in J^nu_mu
  bool support_is_subbasis = false;  // ^vJ^nu_{mu'} inside ^vJ^nu_mu
  bool inverse_bijection = false;    // inverses of ^vJ^nu_mu fill ^{v^-1}J^mu_{nu,+}
  bool inclusion_pattern = false;    // transported support = ^{v^-1}J^{mu'}_{nu,+}
  size_t support_size = 0;
  size_t basis_size = 0;
  bool ok() const {
    return precondition_ok && support_is_subbasis && inverse_bijection &&
           inclusion_pattern;
  }
};

inline DualityReport duality_bookkeeping(int e, const std::vector<int>& mu,
                                         const std::vector<int>& mu_prime,
                                         const std::vector<int>& nu,
                                         const AffinePerm& v) {
  DualityReport rep;
  std::vector<long long> pt = aweyl::one_mu(mu);
  std::vector<int> mu_gens = aweyl::parabolic_generators(e, pt);
  rep.precondition_ok = aweyl::is_min_coset_rep(v, mu_gens) &&
                        aweyl::is_nu_dominant(nu, aweyl::act_negative(v, e, pt));
  if (!rep.precondition_ok) return rep;

  KBasis full = k_basis(e, mu, nu, v);
  KBasis support = k_basis(e, mu_prime, nu, v);
  rep.basis_size = full.elems.size();
  rep.support_size = support.elems.size();

  std::set<AffinePerm> full_set(full.elems.begin(), full.elems.end());
  rep.support_is_subbasis = true;
  for (const AffinePerm& w : support.elems)
    if (!full_set.count(w)) rep.support_is_subbasis = false;

  std::set<AffinePerm> full_inv, support_inv;
  for (const AffinePerm& w : full.elems) full_inv.insert(w.inverse());
  for (const AffinePerm& w : support.elems) support_inv.insert(w.inverse());

  AffinePerm u = v.inverse();
  rep.inverse_bijection = (full_inv == positive_index_set(nu, mu, u));
  rep.inclusion_pattern = (support_inv == positive_index_set(nu, mu_prime, u));
  return rep;
}

// Truncation-change identity at positive level: for v in J^nu_{mu'} w_{mu'},
//   ^{w_{mu'} v^{-1}} J^{mu'}_{nu,+}
//     = ^{w_mu v^{-1}} J^mu_{nu,+}  intersected with  J^{mu'}_{nu,+},
// where the last set is the untruncated one (membership test only).
inline bool truncation_change_holds(int e, const std::vector<int>& mu,
                                    const std::vector<int>& mu_prime,
                                    const std::vector<int>& nu,
                                    const AffinePerm& v) {
  int N = v.n();
  long long l = static_cast<long long>(nu.size());
  std::vector<long long> ptp = aweyl::one_mu_plus(nu);
  std::vector<int> nu_gens =
      aweyl::stabilizer_generators(l, ptp, aweyl::act_positive);
  AffinePerm w_mu = aweyl::longest_element(
      N, aweyl::parabolic_generators(e, aweyl::one_mu(mu)));
  AffinePerm w_mup = aweyl::longest_element(
      N, aweyl::parabolic_generators(e, aweyl::one_mu(mu_prime)));

  std::set<AffinePerm> lhs =
      positive_index_set(nu, mu_prime, w_mup * v.inverse());
  std::set<AffinePerm> rhs;
  for (const AffinePerm& w : positive_index_set(nu, mu, w_mu * v.inverse()))
    if (aweyl::is_nu_dominant(mu_prime, aweyl::act_positive(w, l, ptp)))
      rhs.insert(w);
  return lhs == rhs;
}

}  // namespace kth
