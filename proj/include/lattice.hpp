// Quiver combinatorics for the cyclic quiver Gamma_e and for l disjoint
// copies of the infinite linear quiver (vertices (a,b), a in Z, b a copy
// index), together with the lattice maps tying the two together:
//
//   * root and weight lattices, optionally extended by a deformation
//     direction chi,
//   * the doubling maps phi splitting one cyclic vertex k into two,
//   * the window map Upsilon on integers and the projections pi_e,
//   * weight-of-tuple maps wt_e / wt^chi_e and the offset beta.

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace lattice {

using linalg::Rational;

// A vertex.  Cyclic quivers use b == 0 and a in [0, e); the l-copy infinite
// quiver uses a in Z and b in [1, l].
struct Vertex {
  long long a = 0;
  int b = 0;
  auto operator<=>(const Vertex&) const = default;
};

inline Vertex cyc(long long a) { return Vertex{a, 0}; }

struct Quiver {
  enum Kind { kCyclic, kInfinityCopies };
  Kind kind;
  int param;  // e for cyclic, l for copies of the infinite quiver

  static Quiver cyclic(int e) { return Quiver{kCyclic, e}; }
  static Quiver infinity_copies(int l) { return Quiver{kInfinityCopies, l}; }

  int arrow_count(const Vertex& u, const Vertex& v) const {
    if (kind == kCyclic) {
      long long e = param;
      return (u.b == 0 && v.b == 0 && ((u.a + 1) % e + e) % e == v.a) ? 1 : 0;
    }
    return (u.b == v.b && v.a == u.a + 1) ? 1 : 0;
  }

  // Cartan matrix entry a_{uv} = 2 delta_{uv} - h_{uv} - h_{vu}.
  int cartan(const Vertex& u, const Vertex& v) const {
    return 2 * (u == v) - arrow_count(u, v) - arrow_count(v, u);
  }
};

// An element of a root or weight lattice: a finite integer combination of
// basis vectors indexed by vertices, plus an integer multiple of chi for
// the deformed weight lattice X^chi (chi == 0 for undeformed vectors).
struct LatticeVector {
  std::map<Vertex, long long> coeff;
  long long chi = 0;

  long long at(const Vertex& v) const {
    auto it = coeff.find(v);
    return it == coeff.end() ? 0 : it->second;
  }
  void add(const Vertex& v, long long c) {
    if (c == 0) return;
    long long& slot = coeff[v];
    slot += c;
    if (slot == 0) coeff.erase(v);
  }
  LatticeVector& operator+=(const LatticeVector& o) {
    for (const auto& [v, c] : o.coeff) add(v, c);
    chi += o.chi;
    return *this;
  }
  LatticeVector operator+(const LatticeVector& o) const {
    LatticeVector r = *this;
    r += o;
    return r;
  }
  LatticeVector operator-(const LatticeVector& o) const {
    LatticeVector r = *this;
    for (const auto& [v, c] : o.coeff) r.add(v, -c);
    r.chi -= o.chi;
    return r;
  }
  bool operator==(const LatticeVector& o) const = default;
};

inline LatticeVector basis_vector(const Vertex& v) {
  LatticeVector x;
  x.add(v, 1);
  return x;
}

// ---------------------------------------------------------------------
// Cyclic quiver: residues mod e, tuple weights.

inline long long mod(long long n, long long m) { return ((n % m) + m) % m; }
inline long long floordiv(long long n, long long m) {
  return (n - mod(n, m)) / m;
}

// The embedding iota^chi : Q_I -> X_I^chi, alpha_i -> eps_i - eps_{i+1} - chi,
// for the cyclic quiver Gamma_e.
inline LatticeVector iota_chi(int e, const LatticeVector& root) {
  LatticeVector x;
  for (const auto& [v, c] : root.coeff) {
    x.add(v, c);
    x.add(cyc(mod(v.a + 1, e)), -c);
    x.chi -= c;
  }
  return x;
}

// Invert iota^chi: find d with iota^chi(sum d_i alpha_i) == x, if it exists.
// The difference equations d_i - d_{i-1} = x_i determine d up to a constant,
// which the chi coordinate pins down when divisibility permits.
inline std::optional<LatticeVector> iota_chi_invert(int e,
                                                    const LatticeVector& x) {
  // partial[i] = d_i - d_0 for a putative solution with d_0 = 0.
  std::vector<long long> partial(e, 0);
  for (int i = 1; i < e; ++i) partial[i] = partial[i - 1] + x.at(cyc(i));
  // Consistency around the cycle: sum of all coordinates must vanish.
  if (partial[e - 1] + x.at(cyc(0)) != 0) return std::nullopt;
  long long s = 0;
  for (int i = 0; i < e; ++i) s += partial[i];
  // chi coordinate: -(e*d_0 + s) = x.chi.
  if (mod(-x.chi - s, e) != 0) return std::nullopt;
  long long d0 = (-x.chi - s) / e;
  LatticeVector d;
  for (int i = 0; i < e; ++i) d.add(cyc(i), partial[i] + d0);
  return d;
}

// Weight of an integer tuple: wt_e(lambda) = sum_r eps_{lambda_r mod e}.
inline LatticeVector wt_e(int e, const std::vector<long long>& lam) {
  LatticeVector x;
  for (long long v : lam) x.add(cyc(mod(v, e)), 1);
  return x;
}

// Deformed weight: wt_e plus (sum lambda_r) * chi.
inline LatticeVector wt_chi_e(int e, const std::vector<long long>& lam) {
  LatticeVector x = wt_e(e, lam);
  for (long long v : lam) x.chi += v;
  return x;
}

// Tuple (mu_1, ..., mu_e) read as sum mu_r eps_{r mod e}; the index e wraps
// to the vertex 0.
inline LatticeVector weight_from_tuple(int e,
                                       const std::vector<long long>& mu) {
  LatticeVector x;
  for (int r = 1; r <= e; ++r) x.add(cyc(mod(r, e)), mu[r - 1]);
  return x;
}

inline std::vector<long long> weight_to_tuple(int e, const LatticeVector& x) {
  std::vector<long long> mu(e);
  for (int r = 1; r <= e; ++r) mu[r - 1] = x.at(cyc(mod(r, e)));
  return mu;
}

// ---------------------------------------------------------------------
// Doubling Gamma_e at the vertex k, identified with Gamma_{e+1}:
// i^0 -> i (i < k), k^1 -> k, k^2 -> k+1, i^0 -> i+1 (i > k).

inline long long doubled_vertex(int k, long long i) {
  return i <= k ? i : i + 1;
}

// phi on the root lattice Q_{I_e} -> Q_{I_{e+1}}:
// alpha_i -> alpha_{i^0} (i != k), alpha_k -> alpha_{k^1} + alpha_{k^2}.
inline LatticeVector phi_root(int e, int k, const LatticeVector& root) {
  LatticeVector out;
  for (const auto& [v, c] : root.coeff) {
    if (v.a == k) {
      out.add(cyc(k), c);
      out.add(cyc(k + 1), c);
    } else {
      out.add(cyc(doubled_vertex(k, v.a)), c);
    }
  }
  out.chi = root.chi;
  return out;
}

// phi on the weight lattice X_{I_e}^chi -> X_{I_{e+1}}^chi:
// eps_i -> eps_{i'} where i' = i for i <= k and i' = i+1 for i > k,
// so no weight hits the slot k+1 (= k^2).
inline LatticeVector phi_weight(int e, int k, const LatticeVector& wt) {
  LatticeVector out;
  for (const auto& [v, c] : wt.coeff) out.add(cyc(doubled_vertex(k, v.a)), c);
  out.chi = wt.chi;
  return out;
}

// ---------------------------------------------------------------------
// The window map Upsilon: writing n = ae + b with b in [0, e),
// Upsilon(n) = a(e+1) + b for b <= k and a(e+1) + b + 1 for b > k.
// It is strictly increasing and misses exactly the residue k+1 mod e+1.

inline long long upsilon(int e, int k, long long n) {
  long long a = floordiv(n, e);
  long long b = n - a * e;
  return a * (e + 1) + b + (b > k ? 1 : 0);
}

inline std::vector<long long> upsilon_tuple(int e, int k,
                                            const std::vector<long long>& lam) {
  std::vector<long long> out(lam.size());
  for (size_t r = 0; r < lam.size(); ++r) out[r] = upsilon(e, k, lam[r]);
  return out;
}

// ---------------------------------------------------------------------
// The l-copy infinite quiver and its projection pi_e onto Gamma_e,
// (a, b) -> a mod e on vertices, extended linearly to lattices.

inline LatticeVector pi_e(int e, const LatticeVector& x) {
  LatticeVector out;
  for (const auto& [v, c] : x.coeff) out.add(cyc(mod(v.a, e)), c);
  out.chi = x.chi;
  return out;
}

// Doubling of the l-copy quiver along the vertex set {(a,b) : a = k mod e},
// identified with the l-copy quiver itself via Upsilon:
// roots: alpha_{(a,b)} -> alpha_{(Y(a),b)} + alpha_{(Y(a)+1,b)} on the split
// set, alpha_{(Y(a),b)} elsewhere; weights: eps_{(a,b)} -> eps_{(Y(a),b)}.
inline LatticeVector phi_root_copies(int e, int k, const LatticeVector& root) {
  LatticeVector out;
  for (const auto& [v, c] : root.coeff) {
    long long y = upsilon(e, k, v.a);
    out.add(Vertex{y, v.b}, c);
    if (mod(v.a, e) == k) out.add(Vertex{y + 1, v.b}, c);
  }
  out.chi = root.chi;
  return out;
}

inline LatticeVector phi_weight_copies(int e, int k,
                                       const LatticeVector& wt) {
  LatticeVector out;
  for (const auto& [v, c] : wt.coeff)
    out.add(Vertex{upsilon(e, k, v.a), v.b}, c);
  out.chi = wt.chi;
  return out;
}

// iota for the l-copy quiver: alpha_{(a,b)} -> eps_{(a,b)} - eps_{(a+1,b)}.
inline LatticeVector iota_copies(const LatticeVector& root) {
  LatticeVector x;
  for (const auto& [v, c] : root.coeff) {
    x.add(v, c);
    x.add(Vertex{v.a + 1, v.b}, -c);
  }
  return x;
}

// ---------------------------------------------------------------------
// rho_nu and the offset beta.

// rho_nu = (nu_1, nu_1 - 1, ..., 1, nu_2, nu_2 - 1, ..., 1, ...).
inline std::vector<long long> rho_nu(const std::vector<int>& nu) {
  std::vector<long long> rho;
  for (int part : nu)
    for (int v = part; v >= 1; --v) rho.push_back(v);
  return rho;
}

// beta in Q^+_{e+1} with iota^chi_{e+1}(beta) =
//   wt^chi_{e+1}(rho_nu) - wt^chi_{e+1}(Upsilon(rho_nu)).
inline LatticeVector beta_offset(const std::vector<int>& nu, int e, int k) {
  std::vector<long long> rho = rho_nu(nu);
  LatticeVector diff =
      wt_chi_e(e + 1, rho) - wt_chi_e(e + 1, upsilon_tuple(e, k, rho));
  std::optional<LatticeVector> d = iota_chi_invert(e + 1, diff);
  // Always invertible by construction (a telescoping sum of simple roots).
  return *d;
}

}  // namespace lattice
