// The extended affine symmetric group on N letters and its level-e actions
// on Z^N, together with the parabolic combinatorics used downstream:
// lengths, Bruhat order, minimal/maximal coset representatives, dominance
// conditions and the various truncated index sets.
//
// An element is a bijection u : Z -> Z with u(i + N) = u(i) + N, stored by
// its window [u(1), ..., u(N)].  The finite-affine part W~ consists of the
// elements whose window sums to N(N+1)/2; every element factors uniquely
// as w * pi^n with w in W~, where pi is the shift i -> i - 1.

#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "lattice.hpp"

namespace aweyl {

using lattice::floordiv;
using lattice::mod;

class AffinePerm {
 public:
  AffinePerm() = default;
  explicit AffinePerm(std::vector<long long> window)
      : window_(std::move(window)) {
    assert(is_valid());
  }

  static AffinePerm identity(int n) {
    std::vector<long long> w(n);
    std::iota(w.begin(), w.end(), 1);
    return AffinePerm(std::move(w));
  }

  // Simple reflection s_r, r in Z/N.  s_0 has window [0, 2, ..., N-1, N+1].
  static AffinePerm simple(int n, int r) {
    r = static_cast<int>(mod(r, n));
    AffinePerm s = identity(n);
    if (r == 0) {
      s.window_[0] = 0;
      s.window_[n - 1] = n + 1;
    } else {
      std::swap(s.window_[r - 1], s.window_[r]);
    }
    return s;
  }

  // pi: i -> i - 1, window [0, 1, ..., N-1].  Satisfies pi s_{i+1} = s_i pi.
  static AffinePerm pi(int n) {
    std::vector<long long> w(n);
    std::iota(w.begin(), w.end(), 0);
    return AffinePerm(std::move(w));
  }

  static AffinePerm pi_power(int n, long long k) {
    std::vector<long long> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1 - k;
    return AffinePerm(std::move(w));
  }

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<long long>& window() const { return window_; }

  long long operator()(long long i) const {
    int N = n();
    long long r = mod(i - 1, N);  // i = r+1 + q*N
    long long q = floordiv(i - 1, N);
    return window_[r] + q * N;
  }

  AffinePerm operator*(const AffinePerm& o) const {
    assert(n() == o.n());
    std::vector<long long> w(n());
    for (int i = 1; i <= n(); ++i) w[i - 1] = (*this)(o(i));
    return AffinePerm(std::move(w));
  }

  AffinePerm inverse() const {
    int N = n();
    std::vector<long long> w(N);
    for (int i = 1; i <= N; ++i) {
      long long j = window_[i - 1];
      long long r = mod(j - 1, N);
      long long q = floordiv(j - 1, N);
      w[r] = i - q * N;
    }
    return AffinePerm(std::move(w));
  }

  auto operator<=>(const AffinePerm& o) const = default;

  // pi-power n in the factorization u = w * pi^n with w in W~.
  long long pi_exponent() const {
    long long N = n(), sum = 0;
    for (long long v : window_) sum += v;
    return (N * (N + 1) / 2 - sum) / N;
  }

  bool in_finite_affine() const { return pi_exponent() == 0; }

  // The W~ part w = u * pi^{-n}.
  AffinePerm finite_affine_part() const {
    return *this * pi_power(n(), -pi_exponent());
  }

  // Coxeter length, extended to the whole group by l(w pi^n) = l(w).
  long long length() const {
    AffinePerm w = finite_affine_part();
    long long N = n(), len = 0;
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j)
        len += std::llabs(floordiv(w.window_[j - 1] - w.window_[i - 1], N));
    return len;
  }

  // Right descent: l(u s_r) < l(u), i.e. u(r) > u(r+1).
  bool right_descent(int r) const { return (*this)(r) > (*this)(r + 1); }

  // A reduced word for the W~ part, as indices in Z/N; the pi part is
  // reported separately by pi_exponent().
  std::vector<int> reduced_word() const {
    AffinePerm w = finite_affine_part();
    std::vector<int> word;
    long long len = w.length();
    while (len > 0) {
      for (int r = 0; r < n(); ++r) {
        if (w.right_descent(r)) {
          w = w * simple(n(), r);
          word.push_back(r);
          --len;
          break;
        }
      }
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

 private:
  bool is_valid() const {
    int N = n();
    std::set<long long> residues;
    for (long long v : window_) residues.insert(mod(v, N));
    return static_cast<int>(residues.size()) == N;
  }

  std::vector<long long> window_;
};

// ---------------------------------------------------------------------
// Level-e actions on Z^N.
//
// Negative action: s_0(la) = (la_N - e, la_2, ..., la_1 + e),
//                  pi(la)  = (la_2, ..., la_N, la_1 + e).
// Concretely (u * la)_j = la_r + m e where u^{-1}(j) = r + m N, r in [1,N].

inline std::vector<long long> act_negative(const AffinePerm& u, long long e,
                                           const std::vector<long long>& la) {
  int N = u.n();
  assert(static_cast<int>(la.size()) == N);
  AffinePerm inv = u.inverse();
  std::vector<long long> out(N);
  for (int j = 1; j <= N; ++j) {
    long long i = inv(j);
    long long r = mod(i - 1, N);
    long long m = floordiv(i - 1, N);
    out[j - 1] = la[r] + m * e;
  }
  return out;
}

// Positive action: u . la = -(u * (-la)) under the negative action.
inline std::vector<long long> act_positive(const AffinePerm& u, long long e,
                                           const std::vector<long long>& la) {
  std::vector<long long> neg(la.size());
  for (size_t i = 0; i < la.size(); ++i) neg[i] = -la[i];
  std::vector<long long> res = act_negative(u, e, neg);
  for (auto& v : res) v = -v;
  return res;
}

// e-anti-dominance: la_1 <= ... <= la_N <= la_1 + e.
inline bool is_antidominant(long long e, const std::vector<long long>& la) {
  for (size_t r = 0; r + 1 < la.size(); ++r)
    if (la[r] > la[r + 1]) return false;
  return la.empty() || la.back() <= la.front() + e;
}

// e-dominance: la_1 >= ... >= la_N >= la_1 - e.
inline bool is_dominant(long long e, const std::vector<long long>& la) {
  for (size_t r = 0; r + 1 < la.size(); ++r)
    if (la[r] < la[r + 1]) return false;
  return la.empty() || la.back() >= la.front() - e;
}

// The anti-dominant representative of the orbit of la under the negative
// e-action, together with a group element g with g(la) antidominant.
inline std::pair<std::vector<long long>, AffinePerm> antidominant_rep(
    long long e, std::vector<long long> la) {
  int N = static_cast<int>(la.size());
  AffinePerm g = AffinePerm::identity(N);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r = 0; r < N; ++r) {
      // Move toward the antidominant chamber: sort ascending, and fold the
      // ends together while they are more than e apart.
      bool move = r == 0 ? la[N - 1] > la[0] + e : la[r - 1] > la[r];
      if (!move) continue;
      AffinePerm s = AffinePerm::simple(N, r);
      la = act_negative(s, e, la);
      g = s * g;
      changed = true;
    }
  }
  assert(is_antidominant(e, la));
  return {la, g};
}

// ---------------------------------------------------------------------
// Bruhat order.  Elements compare only within the same pi-coset; on W~ we
// use the standard recursion u <= v iff u = v or, for a right descent s of
// v: (us <= vs) when l(us) < l(u), else (u <= vs).

inline bool bruhat_leq_finite_affine(const AffinePerm& u, const AffinePerm& v) {
  if (u == v) return true;
  long long lu = u.length(), lv = v.length();
  if (lu >= lv) return false;
  int r = -1;
  for (int i = 0; i < v.n(); ++i)
    if (v.right_descent(i)) {
      r = i;
      break;
    }
  assert(r >= 0);
  AffinePerm s = AffinePerm::simple(v.n(), r);
  AffinePerm vs = v * s;
  if (u.right_descent(r)) return bruhat_leq_finite_affine(u * s, vs);
  return bruhat_leq_finite_affine(u, vs);
}

inline bool bruhat_leq(const AffinePerm& u, const AffinePerm& v) {
  if (u.pi_exponent() != v.pi_exponent()) return false;
  return bruhat_leq_finite_affine(u.finite_affine_part(),
                                  v.finite_affine_part());
}

// All elements of the Bruhat interval [id, v] (subwords of a reduced word of
// the W~ part, with the pi part reattached).
inline std::set<AffinePerm> bruhat_interval_below(const AffinePerm& v) {
  int N = v.n();
  std::vector<int> word = v.reduced_word();
  AffinePerm shift = AffinePerm::pi_power(N, v.pi_exponent());
  std::set<AffinePerm> current{AffinePerm::identity(N)};
  for (int r : word) {
    std::set<AffinePerm> next = current;
    for (const AffinePerm& u : current)
      next.insert(u * AffinePerm::simple(N, r));
    current = std::move(next);
  }
  std::set<AffinePerm> out;
  for (const AffinePerm& u : current) out.insert(u * shift);
  return out;
}

// ---------------------------------------------------------------------
// Parabolic data attached to a composition mu = (mu_1, ..., mu_e) of N.

// 1_mu = (1^{mu_1}, 2^{mu_2}, ..., e^{mu_e}).
inline std::vector<long long> one_mu(const std::vector<int>& mu) {
  std::vector<long long> la;
  for (size_t r = 0; r < mu.size(); ++r)
    la.insert(la.end(), mu[r], static_cast<long long>(r + 1));
  return la;
}

// Variant used at k = 0: 1_mu = (0^{mu_e}, 1^{mu_1}, ..., (e-1)^{mu_{e-1}}).
inline std::vector<long long> one_mu_zero_convention(
    const std::vector<int>& mu) {
  std::vector<long long> la(mu.back(), 0);
  for (size_t r = 0; r + 1 < mu.size(); ++r)
    la.insert(la.end(), mu[r], static_cast<long long>(r + 1));
  return la;
}

// 1^+_mu = (e^{mu_1}, (e-1)^{mu_2}, ..., 1^{mu_e}), for the positive action.
inline std::vector<long long> one_mu_plus(const std::vector<int>& mu) {
  std::vector<long long> la;
  long long e = static_cast<long long>(mu.size());
  for (size_t r = 0; r < mu.size(); ++r)
    la.insert(la.end(), mu[r], e - static_cast<long long>(r));
  return la;
}

// Indices r in Z/N with s_r fixing the given point (under the chosen
// action); for (anti)dominant points these generate the full stabilizer.
template <typename Action>
std::vector<int> stabilizer_generators(long long e,
                                       const std::vector<long long>& point,
                                       Action act) {
  int N = static_cast<int>(point.size());
  std::vector<int> gens;
  for (int r = 0; r < N; ++r)
    if (act(AffinePerm::simple(N, r), e, point) == point) gens.push_back(r);
  return gens;
}

inline std::vector<int> parabolic_generators(long long e,
                                             const std::vector<long long>& pt) {
  return stabilizer_generators(e, pt, act_negative);
}

// The full (finite) parabolic subgroup generated by the given simple
// reflections.
inline std::set<AffinePerm> parabolic_subgroup(int N,
                                               const std::vector<int>& gens) {
  std::set<AffinePerm> grp{AffinePerm::identity(N)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<AffinePerm> todo(grp.begin(), grp.end());
    for (const AffinePerm& w : todo)
      for (int r : gens) {
        AffinePerm ws = w * AffinePerm::simple(N, r);
        if (grp.insert(ws).second) grew = true;
      }
  }
  return grp;
}

// Minimal coset representative of w W_J (J given by simple generators).
inline AffinePerm min_coset_rep(AffinePerm w, const std::vector<int>& gens) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r : gens)
      if (w.right_descent(r)) {
        w = w * AffinePerm::simple(w.n(), r);
        changed = true;
      }
  }
  return w;
}

// Maximal coset representative of w W_J.
inline AffinePerm max_coset_rep(AffinePerm w, const std::vector<int>& gens) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int r : gens)
      if (!w.right_descent(r)) {
        w = w * AffinePerm::simple(w.n(), r);
        changed = true;
      }
  }
  return w;
}

inline bool is_min_coset_rep(const AffinePerm& w, const std::vector<int>& gens) {
  for (int r : gens)
    if (w.right_descent(r)) return false;
  return true;
}

inline bool is_max_coset_rep(const AffinePerm& w, const std::vector<int>& gens) {
  for (int r : gens)
    if (!w.right_descent(r)) return false;
  return true;
}

// Longest element of the finite parabolic subgroup.
inline AffinePerm longest_element(int N, const std::vector<int>& gens) {
  return max_coset_rep(AffinePerm::identity(N), gens);
}

// ^vJ_J: minimal coset representatives below v in Bruhat order.
inline std::vector<AffinePerm> truncated_min_reps(const AffinePerm& v,
                                                  const std::vector<int>& gens) {
  std::vector<AffinePerm> out;
  for (const AffinePerm& u : bruhat_interval_below(v))
    if (is_min_coset_rep(u, gens)) out.push_back(u);
  return out;
}

// nu-dominance of a tuple: strictly decreasing away from the block
// boundaries given by the partial sums of nu.
inline bool is_nu_dominant(const std::vector<int>& nu,
                           const std::vector<long long>& la) {
  std::set<size_t> boundary;
  size_t s = 0;
  for (int part : nu) {
    s += static_cast<size_t>(part);
    boundary.insert(s);
  }
  for (size_t r = 1; r < la.size(); ++r)
    if (!boundary.count(r) && la[r - 1] <= la[r]) return false;
  return true;
}

// Shortest representatives of W_{J'} / W_J for nested parabolics J <= J'.
inline std::vector<AffinePerm> relative_min_reps(int N,
                                                 const std::vector<int>& big,
                                                 const std::vector<int>& small) {
  std::vector<AffinePerm> out;
  std::set<AffinePerm> seen;
  for (const AffinePerm& w : parabolic_subgroup(N, big)) {
    AffinePerm rep = min_coset_rep(w, small);
    if (seen.insert(rep).second) out.push_back(rep);
  }
  std::sort(out.begin(), out.end(),
            [](const AffinePerm& a, const AffinePerm& b) {
              auto la = a.length(), lb = b.length();
              return la != lb ? la < lb : a < b;
            });
  return out;
}

}  // namespace aweyl
