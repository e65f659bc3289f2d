// Moment-graph model for centers of (truncated, parabolic) deformed blocks:
// tuples of polynomials indexed by ^vJ_mu subject to congruences along the
// reflections of the affine Weyl group,
//   z_w = z_{t w}  mod h_t   whenever w, t w both index vertices,
// over the graded base ring Q[tau_1, ..., tau_N, kap], where kap denotes
// kappa - e.  A reflection t sends i to j - nN and j to i + nN for a
// unique triple 1 <= i < j <= N, n in Z, and its label is
//   h_t = tau_j - tau_i - n kap,
// a homogeneous linear form; the simple reflections give back the forms
// h_r = tau_{r+1} - tau_r and h_0 = tau_N - tau_1 - kap.  All linear
// forms sit in cohomological degree 2 = polynomial degree 1.
//
// Everything is computed degreewise by exact linear algebra, with an
// explicit degree cutoff.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "affine_weyl.hpp"
#include "laurent.hpp"
#include "linalg.hpp"

namespace gkm {

using aweyl::AffinePerm;
using laurent::Laurent;
using linalg::Matrix;
using linalg::Rational;
using linalg::Vec;

// Sparse multivariate polynomial: exponent vector (length nvars) -> coeff.
using Mono = std::vector<int>;
using Poly = std::map<Mono, Rational>;

inline void poly_add(Poly& p, const Mono& m, const Rational& c) {
  if (c == 0) return;
  Rational& slot = p[m];
  slot += c;
  if (slot == 0) p.erase(m);
}
inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      poly_add(out, m, ca * cb);
    }
  return out;
}

// All monomials of total degree d in nvars variables, in a fixed order.
inline std::vector<Mono> monomials(int nvars, int d) {
  std::vector<Mono> out;
  Mono cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int rest) {
    if (var == nvars - 1) {
      cur[var] = rest;
      out.push_back(cur);
      return;
    }
    for (int k = rest; k >= 0; --k) {
      cur[var] = k;
      rec(var + 1, rest - k);
    }
  };
  if (nvars == 0) return out;
  rec(0, d);
  return out;
}

// Linear forms as coefficient vectors over the nvars = N + 1 variables.
// Variables 0..N-1 are tau_1..tau_N, variable N is kap = kappa - e.
inline Vec h_form(int n, int r) {
  Vec h(n + 1);
  if (r == 0) {
    h[n - 1] = 1;   // tau_N
    h[0] = -1;      // -tau_1
    h[n] = -1;      // -kap
  } else {
    h[r] = 1;       // tau_{r+1}
    h[r - 1] = -1;  // -tau_r
  }
  return h;
}

// Reflection recognition: t in the non-extended group with t^2 = id moving
// exactly one pair of window positions i < j; the label is the canonical
// form tau_j - tau_i - n kap.
inline std::optional<Vec> reflection_form(const AffinePerm& t) {
  int n = t.n();
  if (!t.in_finite_affine()) return std::nullopt;
  if (t * t != AffinePerm::identity(n)) return std::nullopt;
  std::vector<int> moved;
  for (int p = 1; p <= n; ++p)
    if (t(p) != p) moved.push_back(p);
  if (moved.size() != 2) return std::nullopt;
  int i = moved[0], j = moved[1];
  long long diff = j - t(i);
  if (diff % n != 0) return std::nullopt;
  long long shift = diff / n;
  if (t(j) != i + shift * n) return std::nullopt;
  Vec h(n + 1);
  h[j - 1] = 1;                          // tau_j
  h[i - 1] = -1;                         // -tau_i
  h[n] = -Rational(shift);               // -n kap
  return h;
}

// Substitute the pivot variable of the linear form h (set h = 0) into a
// polynomial; the result vanishes iff p = 0 mod h.
inline Poly reduce_mod_linear(const Poly& p, const Vec& h) {
  size_t pivot = h.size();
  for (size_t i = 0; i < h.size(); ++i)
    if (h[i] != 0) {
      pivot = i;
      break;
    }
  // Substitution: x_pivot = -(sum_{i != pivot} h_i x_i) / h_pivot.
  Poly subst;
  for (size_t i = 0; i < h.size(); ++i) {
    if (i == pivot || h[i] == 0) continue;
    Mono m(h.size(), 0);
    m[i] = 1;
    poly_add(subst, m, -h[i] / h[pivot]);
  }
  Poly out;
  for (const auto& [m, c] : p) {
    Poly term;
    Mono base = m;
    int k = base[pivot];
    base[pivot] = 0;
    term[base] = c;
    for (int t = 0; t < k; ++t) term = poly_mul(term, subst);
    for (const auto& [mm, cc] : term) poly_add(out, mm, cc);
  }
  return out;
}

// ---------------------------------------------------------------------
// Moment graphs.

struct Edge {
  size_t i, j;  // vertex indices, i < j
  Vec label;
};

struct MomentGraph {
  int n;  // N
  std::vector<AffinePerm> vertices;
  std::vector<Edge> edges;
};

// Edges join two vertex cosets v_i W_mu, v_j W_mu whenever some reflection
// carries one onto the other; distinct labels between the same pair give
// distinct edges.
inline MomentGraph build_graph(const std::vector<AffinePerm>& verts, int n,
                               const std::vector<int>& gens) {
  MomentGraph g;
  g.n = n;
  g.vertices = verts;
  std::set<AffinePerm> para = aweyl::parabolic_subgroup(n, gens);
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      std::set<Vec> labels;
      for (const AffinePerm& x : para) {
        auto h = reflection_form(verts[j] * x * verts[i].inverse());
        if (h && labels.insert(*h).second) g.edges.push_back({i, j, *h});
      }
    }
  return g;
}

// Vertex set ^vJ_mu (minimal representatives below v), with v normalized
// to the longest representative of its coset.
inline MomentGraph parabolic_graph(int e, const std::vector<int>& mu,
                                   const AffinePerm& v) {
  std::vector<int> gens = aweyl::parabolic_generators(e, aweyl::one_mu(mu));
  AffinePerm vmax = aweyl::max_coset_rep(v, gens);
  std::vector<AffinePerm> verts = aweyl::truncated_min_reps(vmax, gens);
  std::sort(verts.begin(), verts.end(),
            [](const AffinePerm& a, const AffinePerm& b) {
              auto la = a.length(), lb = b.length();
              return la != lb ? la < lb : a < b;
            });
  return build_graph(verts, v.n(), gens);
}

// Full interval ^vJ = {w <= v}, used for the W_mu-invariants model.
inline MomentGraph interval_graph(const AffinePerm& v) {
  std::set<AffinePerm> below = aweyl::bruhat_interval_below(v);
  return build_graph({below.begin(), below.end()}, v.n(), {});
}

// ---------------------------------------------------------------------
// Graded sections: in each degree d the space of tuples (z_w) of
// homogeneous degree-d polynomials with z_i = z_j mod label on each edge.
// Coordinates: vertex-major, then the order of monomials(nvars, d).

struct CenterDegree {
  int degree;
  std::vector<Mono> monos;
  std::vector<Vec> basis;
};

// Optional extra identifications z_x = z_y (used for invariants).
inline CenterDegree center_degree(const MomentGraph& g, int d,
                                  const std::vector<std::pair<size_t, size_t>>&
                                      identifications = {}) {
  int nvars = g.n + 1;
  CenterDegree out;
  out.degree = d;
  out.monos = monomials(nvars, d);
  size_t nm = out.monos.size();
  size_t ncols = g.vertices.size() * nm;

  std::vector<Vec> rows;
  for (const Edge& edge : g.edges) {
    // Reduction of each degree-d monomial modulo the label; the constraint
    // is that the reduction of z_i - z_j vanishes identically.
    std::map<Mono, size_t> row_index;
    std::vector<Vec> block;
    auto row_of = [&](const Mono& m) -> Vec& {
      auto it = row_index.find(m);
      if (it == row_index.end()) {
        row_index[m] = block.size();
        block.emplace_back(ncols);
        return block.back();
      }
      return block[it->second];
    };
    for (size_t m = 0; m < nm; ++m) {
      Poly p;
      p[out.monos[m]] = 1;
      for (const auto& [mm, cc] : reduce_mod_linear(p, edge.label)) {
        Vec& row = row_of(mm);
        row[edge.i * nm + m] += cc;
        row[edge.j * nm + m] -= cc;
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  for (const auto& [i, j] : identifications)
    for (size_t m = 0; m < nm; ++m) {
      Vec row(ncols);
      row[i * nm + m] = 1;
      row[j * nm + m] = -1;
      rows.push_back(std::move(row));
    }

  if (rows.empty()) {
    for (size_t c = 0; c < ncols; ++c) {
      Vec v(ncols);
      v[c] = 1;
      out.basis.push_back(std::move(v));
    }
    return out;
  }
  out.basis = linalg::kernel_basis(Matrix::from_rows(rows));
  return out;
}

// Section tuples as vectors of polynomials, for multiplication.
inline std::vector<Poly> to_polys(const MomentGraph& g, const CenterDegree& cd,
                                  const Vec& v) {
  size_t nm = cd.monos.size();
  std::vector<Poly> out(g.vertices.size());
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (size_t m = 0; m < nm; ++m)
      poly_add(out[i], cd.monos[m], v[i * nm + m]);
  return out;
}

inline Vec from_polys(const MomentGraph& g, const std::vector<Mono>& monos,
                      const std::vector<Poly>& z) {
  std::map<Mono, size_t> mono_index;
  for (size_t i = 0; i < monos.size(); ++i) mono_index[monos[i]] = i;
  Vec v(g.vertices.size() * monos.size());
  for (size_t i = 0; i < z.size(); ++i)
    for (const auto& [m, c] : z[i]) v[i * monos.size() + mono_index.at(m)] = c;
  return v;
}

// Pointwise product of section tuples.
inline std::vector<Poly> section_mul(const std::vector<Poly>& a,
                                     const std::vector<Poly>& b) {
  std::vector<Poly> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = poly_mul(a[i], b[i]);
  return out;
}

// Hilbert series of the centre up to the cutoff, in the polynomial-degree
// variable q (cohomological degree is twice the exponent).
inline std::vector<size_t> center_hilbert(const MomentGraph& g, int cutoff) {
  std::vector<size_t> dims;
  for (int d = 0; d <= cutoff; ++d)
    dims.push_back(center_degree(g, d).basis.size());
  return dims;
}

// Graded dimensions of Z / (R_+ Z), the shadow of the non-deformed centre:
// kill products of positive-degree diagonal base ring elements with
// lower-degree sections.
inline std::vector<size_t> diagonal_quotient_dims(const MomentGraph& g,
                                                  int cutoff) {
  std::vector<CenterDegree> degs;
  for (int d = 0; d <= cutoff; ++d) degs.push_back(center_degree(g, d));
  std::vector<size_t> out;
  int nvars = g.n + 1;
  for (int d = 0; d <= cutoff; ++d) {
    std::vector<Vec> products;
    for (int j = 0; j < d; ++j)
      for (const Mono& m : monomials(nvars, d - j)) {
        Poly scalar;
        scalar[m] = 1;
        for (const Vec& z : degs[j].basis) {
          std::vector<Poly> zp = to_polys(g, degs[j], z);
          std::vector<Poly> prod(zp.size());
          for (size_t i = 0; i < zp.size(); ++i)
            prod[i] = poly_mul(zp[i], scalar);
          products.push_back(from_polys(g, degs[d].monos, prod));
        }
      }
    out.push_back(degs[d].basis.size() - linalg::span_dim(products));
  }
  return out;
}

// Poincare polynomial of the cell decomposition: sum over w in ^vJ_mu of
// q^{l(v_min) - l(w)}, where v_min is the shortest representative of vW_mu.
inline Laurent cell_poincare(int e, const std::vector<int>& mu,
                             const AffinePerm& v) {
  std::vector<int> gens = aweyl::parabolic_generators(e, aweyl::one_mu(mu));
  AffinePerm vmin = aweyl::min_coset_rep(v, gens);
  AffinePerm vmax = aweyl::max_coset_rep(v, gens);
  Laurent p;
  for (const AffinePerm& w : aweyl::truncated_min_reps(vmax, gens))
    p += Laurent::monomial(static_cast<int>(vmin.length() - w.length()));
  return p;
}

// Cohomology-normalized Poincare series of the quotient: the diagonal
// quotient is graded by cell dimension (constants in degree 0 correspond
// to the point cell), while the centre's grading shifts by 2l(vw_mu) -
// 2l(w), i.e. by codimension; the dictionary is reversal within the top
// degree l(v_min).
inline Laurent normalized_quotient_poincare(int e, const std::vector<int>& mu,
                                            const AffinePerm& v) {
  std::vector<int> gens = aweyl::parabolic_generators(e, aweyl::one_mu(mu));
  AffinePerm vmax = aweyl::max_coset_rep(v, gens);
  int top = static_cast<int>(aweyl::min_coset_rep(vmax, gens).length());
  std::vector<size_t> dims =
      diagonal_quotient_dims(parabolic_graph(e, mu, v), top + 1);
  Laurent out;
  for (int d = 0; d < static_cast<int>(dims.size()); ++d)
    out += Laurent::monomial(top - d, Rational(dims[d]));
  return out;
}

// ---------------------------------------------------------------------
// The W_mu-invariants model: sections over the full interval ^vJ with the
// extra identifications z_x = z_{x s_r} for the simple generators of W_mu.
// Requires v to be the longest representative of vW_mu, so the interval is
// stable under right multiplication by W_mu.

inline std::vector<size_t> invariants_hilbert(int e, const std::vector<int>& mu,
                                              const AffinePerm& v, int cutoff) {
  std::vector<int> gens = aweyl::parabolic_generators(e, aweyl::one_mu(mu));
  MomentGraph g = interval_graph(v);
  std::map<AffinePerm, size_t> index;
  for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;
  std::vector<std::pair<size_t, size_t>> ident;
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (int r : gens) {
      AffinePerm x = g.vertices[i] * AffinePerm::simple(g.n, r);
      auto it = index.find(x);
      if (it != index.end() && it->second > i) ident.emplace_back(i, it->second);
    }
  std::vector<size_t> dims;
  for (int d = 0; d <= cutoff; ++d)
    dims.push_back(center_degree(g, d, ident).basis.size());
  return dims;
}

// ---------------------------------------------------------------------
// The inclusion of the centre attached to the larger parabolic W_{mu'}
// (so J_{mu'} is the smaller index set) into the one attached to W_mu:
// a tuple over ^vJ_{mu'} extends to ^vJ_mu, constant on W_{mu'}-cosets.

struct SubcenterInclusion {
  MomentGraph big;                 // over ^vJ_mu
  MomentGraph small;               // over ^vJ_{mu'}
  std::vector<size_t> vertex_map;  // index into small.vertices per big vertex
};

inline SubcenterInclusion subcenter_inclusion(int e, const std::vector<int>& mu,
                                              const std::vector<int>& mu_prime,
                                              const AffinePerm& v) {
  SubcenterInclusion inc;
  inc.big = parabolic_graph(e, mu, v);
  inc.small = parabolic_graph(e, mu_prime, v);
  std::vector<int> gens_prime =
      aweyl::parabolic_generators(e, aweyl::one_mu(mu_prime));
  std::map<AffinePerm, size_t> index;
  for (size_t i = 0; i < inc.small.vertices.size(); ++i)
    index[inc.small.vertices[i]] = i;
  for (const AffinePerm& w : inc.big.vertices)
    inc.vertex_map.push_back(index.at(aweyl::min_coset_rep(w, gens_prime)));
  return inc;
}

inline std::vector<Poly> include_section(const SubcenterInclusion& inc,
                                         const std::vector<Poly>& z_small) {
  std::vector<Poly> out(inc.big.vertices.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = z_small[inc.vertex_map[i]];
  return out;
}

// Decomposition of the big centre as a free graded module over the small
// one, with one generator in each degree 0, 1, ..., m.  Returns the chosen
// generators and whether freeness was verified degreewise up to the cutoff.

struct Decomposition {
  bool ok = false;
  std::vector<std::vector<Poly>> generators;  // generators[r] has degree r
  std::string failure;
};

inline Decomposition decompose_over_subcenter(const SubcenterInclusion& inc,
                                              int m, int cutoff) {
  Decomposition out;
  std::vector<CenterDegree> big_deg, small_deg;
  for (int d = 0; d <= cutoff; ++d) {
    big_deg.push_back(center_degree(inc.big, d));
    small_deg.push_back(center_degree(inc.small, d));
  }
  // Images of the small centre's basis inside the big one, as sections.
  std::vector<std::vector<std::vector<Poly>>> included(cutoff + 1);
  for (int d = 0; d <= cutoff; ++d)
    for (const Vec& z : small_deg[d].basis)
      included[d].push_back(
          include_section(inc, to_polys(inc.small, small_deg[d], z)));

  // Products of the already-chosen generators with the included subalgebra,
  // in a fixed degree, as coordinate vectors.
  auto products_in_degree = [&](int d) {
    std::vector<Vec> prods;
    for (size_t r = 0; r < out.generators.size(); ++r) {
      int j = d - static_cast<int>(r);
      if (j < 0) continue;
      for (const std::vector<Poly>& zb : included[j])
        prods.push_back(from_polys(inc.big, big_deg[d].monos,
                                   section_mul(zb, out.generators[r])));
    }
    return prods;
  };

  for (int r = 0; r <= m; ++r) {
    if (r > cutoff) {
      out.failure = "cutoff below generator degree";
      return out;
    }
    std::vector<Vec> span = products_in_degree(r);
    bool found = false;
    for (const Vec& cand : big_deg[r].basis)
      if (!linalg::in_span(span, cand)) {
        out.generators.push_back(to_polys(inc.big, big_deg[r], cand));
        found = true;
        break;
      }
    if (!found) {
      out.failure =
          "no generator outside the submodule in degree " + std::to_string(r);
      return out;
    }
  }

  for (int d = 0; d <= cutoff; ++d) {
    size_t expected = 0;
    for (int r = 0; r <= m && r <= d; ++r)
      expected += small_deg[d - r].basis.size();
    std::vector<Vec> prods = products_in_degree(d);
    if (expected != big_deg[d].basis.size() ||
        linalg::span_dim(prods) != expected) {
      out.failure = "rank mismatch in degree " + std::to_string(d);
      return out;
    }
  }
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------
// Restriction / induction bookkeeping on graded characters (cohomological
// shift convention: <n> multiplies the character by q^n).

inline Laurent res_character(const Laurent& ch, int m) {
  return ch.shifted(-m);  // Res~ = <-mu_{k+1}>
}
inline Laurent ind_character(const Laurent& ch, int m) {
  Laurent out;
  for (int r = 0; r <= m; ++r) out += ch.shifted(2 * r);
  return out;
}

}  // namespace gkm
