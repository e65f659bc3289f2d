// Homological layer over expanded graded algebras: finite dimensional
// graded modules, minimal graded projective resolutions of the simples,
// linearity (Koszulity) checks, Ext computations with Yoneda products in
// low degree, linear complexes built from modules over the quadratic dual,
// the tensor functor along an idempotent truncation, and the termwise
// compatibility of that functor with the linear-complex construction.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "quadratic.hpp"

namespace kos {

using linalg::Matrix;
using linalg::Rational;
using linalg::Vec;
using quad::Algebra;
using quad::Arrow;

// ---------------------------------------------------------------------
// Graded left modules.  Component k lives in internal degree lo + k; each
// basis element carries a vertex label (the idempotent acting as identity
// on it), and every degree-1 basis element g of the algebra acts by a
// matrix M_k -> M_{k+1}.  g with block (s, t) sends vertex-t vectors to
// vertex-s vectors and kills the rest.
struct Module {
  int lo = 0;
  std::vector<std::vector<int>> vert;    // per component: vertex labels
  std::vector<std::vector<Matrix>> act;  // act[k][g]: M_k -> M_{k+1}

  int components() const { return static_cast<int>(vert.size()); }
  size_t dim(int k) const {
    return (k >= 0 && k < components()) ? vert[k].size() : 0;
  }
  size_t total_dim() const {
    size_t s = 0;
    for (const auto& v : vert) s += v.size();
    return s;
  }
};

// Truncation of the free module  ⊕_j  A e_{v_j} <shift_j>  to components
// 0..top (internal degrees lo = 0 upward).  Basis of component d: pairs
// (j, b) with b a basis element of A of degree d - shift_j and dst(b) = v_j.
// Optionally reports the basis triples (j, deg, idx) per component.
inline Module free_truncated(const Algebra& A,
                             const std::vector<std::pair<int, int>>& gens,
                             int top,
                             std::vector<std::vector<std::array<int, 3>>>*
                                 basis_out = nullptr) {
  Module M;
  M.lo = 0;
  M.vert.resize(top + 1);
  std::vector<std::vector<std::array<int, 3>>> basis(top + 1);
  std::vector<std::map<std::array<int, 3>, size_t>> index(top + 1);
  for (int d = 0; d <= top; ++d)
    for (size_t j = 0; j < gens.size(); ++j) {
      int ad = d - gens[j].second;
      if (ad < 0 || ad > A.cutoff) continue;
      for (size_t i = 0; i < A.blocks[ad].size(); ++i)
        if (A.blocks[ad][i].dst == gens[j].first) {
          index[d][{static_cast<int>(j), ad, static_cast<int>(i)}] =
              basis[d].size();
          basis[d].push_back({static_cast<int>(j), ad, static_cast<int>(i)});
          M.vert[d].push_back(A.blocks[ad][i].src);
        }
    }
  M.act.resize(top);
  for (int d = 0; d < top; ++d) {
    M.act[d].resize(A.dim(1), Matrix(basis[d + 1].size(), basis[d].size()));
    for (size_t g = 0; g < A.dim(1); ++g)
      for (size_t c = 0; c < basis[d].size(); ++c) {
        auto [j, ad, i] = basis[d][c];
        if (ad + 1 > A.cutoff) continue;
        const Vec& p = A.product(1, static_cast<int>(g), ad, i);
        for (size_t k = 0; k < p.size(); ++k)
          if (p[k] != 0) {
            auto it = index[d + 1].find({j, ad + 1, static_cast<int>(k)});
            if (it != index[d + 1].end())
              M.act[d][g].at(it->second, c) = p[k];
          }
      }
  }
  if (basis_out) *basis_out = std::move(basis);
  return M;
}

namespace detail {

using quad::detail::echelon;
using quad::detail::reduce_mod;

// Split vectors into vertex-homogeneous components, dropping zeros.
inline std::vector<Vec> vertex_split(const std::vector<Vec>& vs,
                                     const std::vector<int>& vert) {
  std::vector<Vec> out;
  for (const Vec& v : vs) {
    std::map<int, Vec> parts;
    for (size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) {
        auto it = parts.try_emplace(vert[c], Vec(v.size())).first;
        it->second[c] = v[c];
      }
    for (auto& [lbl, p] : parts) out.push_back(std::move(p));
  }
  return out;
}

inline Vec mat_apply(const Matrix& m, const Vec& v) {
  Vec out(m.rows());
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
  return out;
}

}  // namespace detail

// Quotient of F by the submodule generated by the given homogeneous
// vectors (component index, coordinates in that component of F).
inline Module quotient_module(
    const Module& F,
    const std::vector<std::pair<int, Vec>>& subgens) {
  int n = F.components();
  // Degreewise closure of the submodule under the degree-1 action.
  std::vector<std::vector<Vec>> rows(n);
  std::vector<std::vector<size_t>> pivots(n);
  std::vector<std::vector<Vec>> cur(n);
  for (const auto& [k, v] : subgens)
    for (Vec& part : detail::vertex_split({v}, F.vert[k]))
      cur[k].push_back(std::move(part));
  for (int k = 0; k < n; ++k) {
    if (k > 0)
      for (const Vec& v : rows[k - 1])
        for (const Matrix& m : F.act[k - 1]) {
          Vec im = detail::mat_apply(m, v);
          if (std::any_of(im.begin(), im.end(),
                          [](const Rational& x) { return x != 0; }))
            cur[k].push_back(std::move(im));
        }
    std::vector<Vec> span = std::move(cur[k]);
    span.insert(span.end(), rows[k].begin(), rows[k].end());
    std::tie(rows[k], pivots[k]) =
        detail::echelon(std::move(span), F.dim(k));
  }
  Module Q;
  Q.lo = F.lo;
  Q.vert.resize(n);
  std::vector<std::vector<int>> sel(n);
  for (int k = 0; k < n; ++k) {
    std::vector<bool> is_pivot(F.dim(k), false);
    for (size_t c : pivots[k]) is_pivot[c] = true;
    sel[k].assign(F.dim(k), -1);
    for (size_t c = 0; c < F.dim(k); ++c)
      if (!is_pivot[c]) {
        sel[k][c] = static_cast<int>(Q.vert[k].size());
        Q.vert[k].push_back(F.vert[k][c]);
      }
  }
  Q.act.resize(n - 1 >= 0 ? n - 1 : 0);
  for (int k = 0; k + 1 < n; ++k) {
    Q.act[k].resize(F.act[k].size(),
                    Matrix(Q.dim(k + 1), Q.dim(k)));
    for (size_t g = 0; g < F.act[k].size(); ++g)
      for (size_t c = 0; c < F.dim(k); ++c) {
        if (sel[k][c] < 0) continue;
        Vec unit(F.dim(k));
        unit[c] = 1;
        Vec im = detail::mat_apply(F.act[k][g], unit);
        detail::reduce_mod(im, rows[k + 1], pivots[k + 1]);
        for (size_t r = 0; r < im.size(); ++r)
          if (im[r] != 0 && sel[k + 1][r] >= 0)
            Q.act[k][g].at(sel[k + 1][r], sel[k][c]) = im[r];
      }
  }
  return Q;
}

// Does M satisfy the axioms of a graded module over A?  Checks vertex
// compatibility of the action matrices and that every quadratic relation
// of A (the kernel of multiplication on composable degree-1 pairs) acts by
// zero.  For algebras presented by quadratic relations this is the full
// module condition through the computed degrees.
inline bool is_valid_module(const Algebra& A, const Module& M) {
  for (int k = 0; k + 1 < M.components(); ++k) {
    if (M.act[k].size() != A.dim(1)) return false;
    for (size_t g = 0; g < A.dim(1); ++g) {
      const Arrow& b = A.blocks[1][g];
      const Matrix& m = M.act[k][g];
      for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
          if (m.at(r, c) != 0 &&
              (M.vert[k][c] != b.dst || M.vert[k + 1][r] != b.src))
            return false;
    }
  }
  auto [pairs, kern] = quad::degree2_kernel(A);
  for (int k = 0; k + 2 < M.components(); ++k)
    for (const Vec& rel : kern) {
      Matrix acc(M.dim(k + 2), M.dim(k));
      for (size_t c = 0; c < pairs.size(); ++c) {
        if (rel[c] == 0) continue;
        // The word (g, h) is the path g-then-h, i.e. the product g.h;
        // as an operator (g.h) m = g.(h.m).
        const Matrix prod = M.act[k + 1][pairs[c][0]] * M.act[k][pairs[c][1]];
        for (size_t r = 0; r < acc.rows(); ++r)
          for (size_t cc = 0; cc < acc.cols(); ++cc)
            acc.at(r, cc) += rel[c] * prod.at(r, cc);
      }
      for (size_t r = 0; r < acc.rows(); ++r)
        for (size_t cc = 0; cc < acc.cols(); ++cc)
          if (acc.at(r, cc) != 0) return false;
    }
  return true;
}

// ---------------------------------------------------------------------
// Linear complexes.  Given a finite dimensional algebra A, its quadratic
// dual Adual (degree-1 bases index-aligned: dual generator g is the star
// dual of the g-th degree-1 element of A), and a graded Adual-module M,
// the complex has terms X^k = A<k> (x)_{A_0} M_k and boundary
// d(x (x) m) = sum_g (x . a_g) (x) (g . m).
struct LinearComplex {
  // Per term: basis (adeg, aidx, midx); boundary matrices X^k -> X^{k+1}.
  std::vector<std::vector<std::array<int, 3>>> basis;
  std::vector<Matrix> delta;
  bool square_zero = true;
  int violating_term = -1;  // first k with delta_{k+1} delta_k != 0
};

inline LinearComplex linear_complex(const Algebra& A, const Algebra& Adual,
                                    const Module& M) {
  LinearComplex X;
  int n = M.components();
  X.basis.resize(n);
  std::vector<std::map<std::array<int, 3>, size_t>> index(n);
  for (int k = 0; k < n; ++k)
    for (int ad = 0; ad <= A.cutoff; ++ad)
      for (size_t i = 0; i < A.dim(ad); ++i)
        for (size_t m = 0; m < M.dim(k); ++m)
          if (A.blocks[ad][i].dst == M.vert[k][m]) {
            index[k][{ad, static_cast<int>(i), static_cast<int>(m)}] =
                X.basis[k].size();
            X.basis[k].push_back({ad, static_cast<int>(i),
                                  static_cast<int>(m)});
          }
  for (int k = 0; k + 1 < n; ++k) {
    Matrix d(X.basis[k + 1].size(), X.basis[k].size());
    for (size_t c = 0; c < X.basis[k].size(); ++c) {
      auto [ad, i, m] = X.basis[k][c];
      for (size_t g = 0; g < Adual.dim(1); ++g) {
        if (A.blocks[1][g].src != A.blocks[ad][i].dst) continue;
        if (ad + 1 > A.cutoff) continue;
        const Vec& xa = A.product(ad, i, 1, static_cast<int>(g));
        const Matrix& gm = M.act[k][g];
        for (size_t xi = 0; xi < xa.size(); ++xi) {
          if (xa[xi] == 0) continue;
          for (size_t r = 0; r < gm.rows(); ++r) {
            if (gm.at(r, m) == 0) continue;
            auto it = index[k + 1].find(
                {ad + 1, static_cast<int>(xi), static_cast<int>(r)});
            if (it != index[k + 1].end())
              d.at(it->second, c) += xa[xi] * gm.at(r, m);
          }
        }
      }
    }
    X.delta.push_back(std::move(d));
  }
  for (size_t k = 0; k + 1 < X.delta.size(); ++k) {
    Matrix sq = X.delta[k + 1] * X.delta[k];
    for (size_t r = 0; r < sq.rows(); ++r)
      for (size_t c = 0; c < sq.cols(); ++c)
        if (sq.at(r, c) != 0) {
          X.square_zero = false;
          if (X.violating_term < 0) X.violating_term = static_cast<int>(k);
        }
  }
  return X;
}

// ---------------------------------------------------------------------
// Minimal graded projective resolutions of the simple modules.

// A graded projective  ⊕_j A e_{v_j} <shift_j>.
struct Projective {
  std::vector<std::pair<int, int>> gens;  // (vertex, shift)
};

// Basis of the degree-d component: triples (summand j, deg, basis index).
inline std::vector<std::array<int, 3>> proj_basis(const Algebra& A,
                                                  const Projective& P,
                                                  int d) {
  std::vector<std::array<int, 3>> out;
  for (size_t j = 0; j < P.gens.size(); ++j) {
    int ad = d - P.gens[j].second;
    if (ad < 0 || ad > A.cutoff) continue;
    for (size_t i = 0; i < A.dim(ad); ++i)
      if (A.blocks[ad][i].dst == P.gens[j].first)
        out.push_back({static_cast<int>(j), ad, static_cast<int>(i)});
  }
  return out;
}

struct Resolution {
  int vertex = 0;   // resolved simple
  int degree_cutoff = 0;
  std::vector<Projective> steps;          // steps[0] = A e_vertex
  std::vector<std::vector<Vec>> lifts;    // per step r >= 1: image in P^{r-1}
                                          // of each generator, in the
                                          // proj_basis coordinates of its
                                          // degree
  bool linear_to(int n) const {
    for (int r = 0; r <= n && r < static_cast<int>(steps.size()); ++r)
      for (const auto& [v, d] : steps[r].gens)
        if (d != r) return false;
    return true;
  }
};

inline Resolution minimal_resolution(const Algebra& A, int vertex, int nsteps,
                                     int degree_cutoff) {
  Resolution R;
  R.vertex = vertex;
  R.degree_cutoff = degree_cutoff;
  R.steps.push_back({{{vertex, 0}}});
  R.lifts.push_back({});

  // Current kernel K ⊆ P^{r-1}, degreewise echelon bases (vertex split).
  std::vector<std::vector<Vec>> K(degree_cutoff + 1);
  for (int d = 1; d <= degree_cutoff; ++d) {
    auto pb = proj_basis(A, R.steps[0], d);
    for (size_t c = 0; c < pb.size(); ++c) {
      Vec v(pb.size());
      v[c] = 1;
      K[d].push_back(std::move(v));
    }
  }
  for (int r = 1; r <= nsteps; ++r) {
    const Projective& Pprev = R.steps.back();
    // Vertex labels of P^{r-1} coordinates per degree.
    std::vector<std::vector<int>> pvert(degree_cutoff + 1);
    std::vector<std::vector<std::array<int, 3>>> pb(degree_cutoff + 1);
    std::vector<std::map<std::array<int, 3>, size_t>> pidx(degree_cutoff + 1);
    for (int d = 0; d <= degree_cutoff; ++d) {
      pb[d] = proj_basis(A, Pprev, d);
      for (size_t c = 0; c < pb[d].size(); ++c) {
        pidx[d][pb[d][c]] = c;
        pvert[d].push_back(A.blocks[pb[d][c][1]][pb[d][c][2]].src);
      }
    }
    auto left_mult = [&](size_t g, int d, const Vec& v) {
      Vec out(pb[d + 1].size());
      for (size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        auto [j, ad, i] = pb[d][c];
        if (ad + 1 > A.cutoff) continue;
        const Vec& p = A.product(1, static_cast<int>(g), ad, i);
        for (size_t k = 0; k < p.size(); ++k)
          if (p[k] != 0) {
            auto it = pidx[d + 1].find({j, ad + 1, static_cast<int>(k)});
            if (it != pidx[d + 1].end()) out[it->second] += v[c] * p[k];
          }
      }
      return out;
    };
    // Minimal generators: per degree, kernel vectors extending A_1 . K.
    Projective Pnew;
    std::vector<Vec> new_lifts;
    std::vector<std::vector<Vec>> gen_vecs(degree_cutoff + 1);
    for (int d = 0; d <= degree_cutoff; ++d) {
      std::vector<Vec> rad;
      if (d > 0)
        for (const Vec& v : K[d - 1])
          for (size_t g = 0; g < A.dim(1); ++g) {
            Vec im = left_mult(g, d - 1, v);
            if (std::any_of(im.begin(), im.end(),
                            [](const Rational& x) { return x != 0; }))
              rad.push_back(std::move(im));
          }
      auto [rrows, rpiv] = detail::echelon(std::move(rad), pb[d].size());
      for (const Vec& v : detail::vertex_split(K[d], pvert[d])) {
        Vec red = v;
        detail::reduce_mod(red, rrows, rpiv);
        if (std::all_of(red.begin(), red.end(),
                        [](const Rational& x) { return x == 0; }))
          continue;
        // Locate the vertex of this (vertex-homogeneous) generator.
        int vtx = -1;
        for (size_t c = 0; c < red.size(); ++c)
          if (red[c] != 0) {
            vtx = pvert[d][c];
            break;
          }
        Pnew.gens.push_back({vtx, d});
        new_lifts.push_back(red);
        gen_vecs[d].push_back(red);
        // Extend the echelon with red so later candidates add fresh rank.
        std::vector<Vec> joined = rrows;
        joined.push_back(red);
        std::tie(rrows, rpiv) = detail::echelon(std::move(joined),
                                                pb[d].size());
      }
    }
    if (Pnew.gens.empty()) break;  // resolution finished (kernel zero)
    R.steps.push_back(Pnew);
    R.lifts.push_back(new_lifts);
    // Next kernel: kernel of P^r -> P^{r-1} degreewise.
    std::vector<std::vector<Vec>> Knew(degree_cutoff + 1);
    for (int d = 0; d <= degree_cutoff; ++d) {
      auto nb = proj_basis(A, Pnew, d);
      if (nb.empty()) continue;
      Matrix map(pb[d].size(), nb.size());
      for (size_t c = 0; c < nb.size(); ++c) {
        auto [j, ad, i] = nb[c];
        // Image of (basis elt x of A) . gen_j  =  x . lift_j.
        const Vec& L = new_lifts[j];
        int ld = Pnew.gens[j].second;
        Vec img(pb[d].size());
        for (size_t cc = 0; cc < L.size(); ++cc) {
          if (L[cc] == 0) continue;
          auto [jj, aad, ii] = pb[ld][cc];
          if (ad + aad > A.cutoff) continue;
          const Vec& p = A.product(ad, i, aad, ii);
          for (size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0) {
              auto it = pidx[d].find({jj, ad + aad, static_cast<int>(k)});
              if (it != pidx[d].end()) img[it->second] += L[cc] * p[k];
            }
        }
        for (size_t rr = 0; rr < img.size(); ++rr) map.at(rr, c) = img[rr];
      }
      for (Vec& v : linalg::kernel_basis(map)) Knew[d].push_back(std::move(v));
    }
    K = std::move(Knew);
  }
  return R;
}

// Top nonzero degree of a finite algebra (0 if semisimple).
inline int top_degree(const Algebra& A) {
  int t = 0;
  for (int d = 0; d <= A.cutoff; ++d)
    if (!A.blocks[d].empty()) t = d;
  return t;
}

// Koszulity shadow: minimal resolutions of all simples are linear up to
// homological degree n.
struct KoszulReport {
  bool linear = true;
  std::vector<Resolution> resolutions;  // one per vertex
  int first_nonlinear_step = -1;
};

inline KoszulReport koszul_resolution_check(const Algebra& A, int n) {
  KoszulReport rep;
  int degcut = (n + 1) * std::max(top_degree(A), 1);
  for (int v = 0; v < A.nvert; ++v) {
    Resolution R = minimal_resolution(A, v, n, degcut);
    for (int r = 0; r <= n && r < static_cast<int>(R.steps.size()); ++r)
      for (const auto& [vx, d] : R.steps[r].gens)
        if (d != r) {
          rep.linear = false;
          if (rep.first_nonlinear_step < 0) rep.first_nonlinear_step = r;
        }
    rep.resolutions.push_back(std::move(R));
  }
  return rep;
}

// ---------------------------------------------------------------------
// Ext of the simples from the minimal resolutions, with the degree-(1,1)
// Yoneda product, compared against the quadratic dual.

struct ExtReport {
  // dims[r][l][m] = dim Ext^r(S_l, S_m) = #generators of P^r in the
  // resolution of S_l sitting at vertex m.
  std::vector<std::vector<std::vector<size_t>>> dims;
  bool dims_match_dual = true;      // against e_l (A!)_r e_m
  bool yoneda_surjective = true;    // Ext^1 . Ext^1 spans Ext^2 blockwise
  bool relation_dims_match = true;  // ker(Yoneda) dims = dual relation dims
};

// Yoneda product of two Ext^1 classes, computed by lifting a chain map
// through the minimal resolutions.  f is the class of generator j1 of
// step 1 of Rl (resolving S_l, generator at vertex mu); fp the class of
// generator j2 of step 1 of Rmu.  Returns the coordinates of fp o f in
// Hom(P^2_l, S_rho), i.e. a functional on the step-2 generators of Rl.
inline Vec yoneda_11(const Algebra& A, const Resolution& Rl,
                     const Resolution& Rmu, size_t j1, size_t j2) {
  int mu = Rl.steps[1].gens[j1].first;
  int d1 = Rl.steps[1].gens[j1].second;
  Vec out(Rl.steps.size() > 2 ? Rl.steps[2].gens.size() : 0);
  if (Rl.steps.size() <= 2 || Rmu.steps.size() <= 1) return out;
  // phi0: P^1_l -> P^0_mu = A e_mu sends generator j1 to e_mu, others to 0.
  // For each step-2 generator h of Rl with lift L_h in P^1_l, the value of
  // phi0(L_h) is the (j1)-summand block of L_h, an element of A e_mu.
  for (size_t h = 0; h < Rl.steps[2].gens.size(); ++h) {
    int eh = Rl.steps[2].gens[h].second;
    const Vec& L = Rl.lifts[2][h];
    auto pb1l = proj_basis(A, Rl.steps[1], eh);
    // rhs in (A e_mu)_{eh - d1} coordinates.
    std::vector<int> amu;  // basis indices of A_{eh-d1} with dst = mu
    int ad = eh - d1;
    if (ad < 0 || ad > A.cutoff) continue;
    std::map<int, size_t> amu_idx;
    for (size_t i = 0; i < A.dim(ad); ++i)
      if (A.blocks[ad][i].dst == mu) {
        amu_idx[static_cast<int>(i)] = amu.size();
        amu.push_back(static_cast<int>(i));
      }
    Vec rhs(amu.size());
    for (size_t c = 0; c < L.size(); ++c) {
      if (L[c] == 0) continue;
      auto [j, aad, i] = pb1l[c];
      if (j == static_cast<int>(j1)) rhs[amu_idx.at(i)] = L[c];
    }
    // Solve d^1_mu x = rhs with x in (P^1_mu)_{eh - d1} coordinates.
    auto pb1m = proj_basis(A, Rmu.steps[1], ad);
    auto pb0m = proj_basis(A, Rmu.steps[0], ad);
    std::map<std::array<int, 3>, size_t> pb0m_idx;
    for (size_t c = 0; c < pb0m.size(); ++c) pb0m_idx[pb0m[c]] = c;
    // Express rhs in pb0m coordinates (P^0_mu = A e_mu, summand 0).
    Vec rhs0(pb0m.size());
    for (size_t c = 0; c < amu.size(); ++c)
      if (rhs[c] != 0) rhs0[pb0m_idx.at({0, ad, amu[c]})] = rhs[c];
    Matrix dmap(pb0m.size(), pb1m.size());
    for (size_t c = 0; c < pb1m.size(); ++c) {
      auto [j, aad, i] = pb1m[c];
      const Vec& Lg = Rmu.lifts[1][j];
      int ld = Rmu.steps[1].gens[j].second;
      auto pb0g = proj_basis(A, Rmu.steps[0], ld);
      for (size_t cc = 0; cc < Lg.size(); ++cc) {
        if (Lg[cc] == 0) continue;
        auto [jj, bbd, ii] = pb0g[cc];
        if (aad + bbd > A.cutoff) continue;
        const Vec& p = A.product(aad, i, bbd, ii);
        for (size_t k = 0; k < p.size(); ++k)
          if (p[k] != 0) {
            auto it = pb0m_idx.find({jj, aad + bbd, static_cast<int>(k)});
            if (it != pb0m_idx.end())
              dmap.at(it->second, c) += Lg[cc] * p[k];
          }
      }
    }
    std::optional<Vec> x = linalg::solve(dmap, rhs0);
    if (!x) continue;  // cannot happen for consistent data
    // Apply the functional fp: pick the degree-0 coefficient on summand j2.
    Rational val = 0;
    for (size_t c = 0; c < pb1m.size(); ++c) {
      auto [j, aad, i] = pb1m[c];
      if (j == static_cast<int>(j2) && aad == 0) val += (*x)[c];
    }
    out[h] = val;
  }
  return out;
}

inline ExtReport ext_algebra_check(const Algebra& A, const Algebra& Adual,
                                   int cutoff) {
  ExtReport rep;
  int degcut = (cutoff + 1) * std::max(top_degree(A), 1);
  std::vector<Resolution> res;
  for (int v = 0; v < A.nvert; ++v)
    res.push_back(minimal_resolution(A, v, cutoff, degcut));
  rep.dims.assign(cutoff + 1,
                  std::vector<std::vector<size_t>>(
                      A.nvert, std::vector<size_t>(A.nvert, 0)));
  for (int l = 0; l < A.nvert; ++l)
    for (int r = 0; r <= cutoff; ++r) {
      if (r >= static_cast<int>(res[l].steps.size())) continue;
      for (const auto& [v, d] : res[l].steps[r].gens) ++rep.dims[r][l][v];
    }
  auto hd = quad::hilbert_blocks(Adual);
  for (int r = 0; r <= std::min(cutoff, Adual.cutoff); ++r)
    for (int l = 0; l < A.nvert; ++l)
      for (int m = 0; m < A.nvert; ++m)
        if (rep.dims[r][l][m] != hd[r][l][m]) rep.dims_match_dual = false;

  // Degree-(1,1) Yoneda products vs the quadratic relations of A!.
  auto [dpairs, dkern] = quad::degree2_kernel(Adual);
  for (int l = 0; l < A.nvert; ++l)
    for (int rho = 0; rho < A.nvert; ++rho) {
      // Columns: composable Ext^1 pairs l -> mu -> rho.
      std::vector<Vec> images;
      size_t ncols = 0;
      size_t ext2 =
          res[l].steps.size() > 2 ? res[l].steps[2].gens.size() : 0;
      std::vector<size_t> ext2_rho;  // step-2 gens of res[l] at vertex rho
      for (size_t h = 0; h < ext2; ++h)
        if (res[l].steps[2].gens[h].first == rho)
          ext2_rho.push_back(h);
      for (int mu = 0; mu < A.nvert; ++mu) {
        if (res[l].steps.size() <= 1 || res[mu].steps.size() <= 1) continue;
        for (size_t j1 = 0; j1 < res[l].steps[1].gens.size(); ++j1) {
          if (res[l].steps[1].gens[j1].first != mu) continue;
          for (size_t j2 = 0; j2 < res[mu].steps[1].gens.size(); ++j2) {
            if (res[mu].steps[1].gens[j2].first != rho) continue;
            Vec full = yoneda_11(A, res[l], res[mu], j1, j2);
            Vec proj(ext2_rho.size());
            for (size_t k = 0; k < ext2_rho.size(); ++k)
              proj[k] = full.empty() ? Rational(0) : full[ext2_rho[k]];
            images.push_back(std::move(proj));
            ++ncols;
          }
        }
      }
      size_t rank = linalg::span_dim(images);
      if (rank != ext2_rho.size()) rep.yoneda_surjective = false;
      // Kernel dim of the Yoneda pairing vs. dual relation block dim.
      size_t yker = ncols - rank;
      size_t dker = 0;
      // Dual relation block: kernel vectors supported on composable dual
      // pairs from l to rho.
      std::vector<Vec> blockvecs;
      for (const Vec& v : dkern) {
        bool in_block = true;
        bool nonzero = false;
        for (size_t c = 0; c < dpairs.size(); ++c)
          if (v[c] != 0) {
            nonzero = true;
            if (Adual.blocks[1][dpairs[c][0]].src != l ||
                Adual.blocks[1][dpairs[c][1]].dst != rho)
              in_block = false;
          }
        if (nonzero && in_block) blockvecs.push_back(v);
      }
      dker = linalg::span_dim(blockvecs);
      if (yker != dker) rep.relation_dims_match = false;
    }
  return rep;
}

// ---------------------------------------------------------------------
// Tensor functor along an idempotent truncation, and the compatibility of
// the linear-complex construction with it.

// The quadratic cover of the corner algebra C = e_{L'} A e_{L'}: generators
// are the degree-1 basis of C, relations the kernel of multiplication.
inline quad::Presentation quadratic_cover(const Algebra& C) {
  quad::Presentation p;
  p.nvert = C.nvert;
  for (const Arrow& a : C.blocks[1]) p.arrows.push_back(a);
  auto [pairs, kern] = quad::degree2_kernel(C);
  // degree2_kernel and words2 enumerate composable pairs in the same
  // (lexicographic) order, so the coordinates coincide.
  p.relations = kern;
  return p;
}

// Degreewise matrices of the canonical homomorphism  Phi: A' -> C, where
// A' = expand(quadratic_cover(C)) and Phi is the identity on degree 1.
// Returns nullopt if the witness check fails (no such homomorphism).
inline std::optional<std::vector<Matrix>> cover_to_corner(
    const Algebra& Acover, const Algebra& C) {
  int n = std::min(Acover.cutoff, C.cutoff);
  std::vector<Matrix> phi(n + 1, Matrix(0, 0));
  phi[0] = Matrix::identity(C.dim(0));
  if (n >= 1) {
    if (Acover.dim(1) != C.dim(1)) return std::nullopt;
    phi[1] = Matrix::identity(C.dim(1));
  }
  for (int d = 2; d <= n; ++d) {
    // Products g . y with g in degree 1, y in degree d-1 span A'_d.
    std::vector<std::pair<size_t, size_t>> cols;
    for (size_t g = 0; g < Acover.dim(1); ++g)
      for (size_t y = 0; y < Acover.dim(d - 1); ++y)
        if (Acover.blocks[1][g].dst == Acover.blocks[d - 1][y].src)
          cols.push_back({g, y});
    Matrix P(Acover.dim(d), cols.size());
    Matrix Q(C.dim(d), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
      auto [g, y] = cols[c];
      const Vec& p = Acover.product(1, static_cast<int>(g), d - 1,
                                    static_cast<int>(y));
      for (size_t r = 0; r < p.size(); ++r) P.at(r, c) = p[r];
      // Q column: g . Phi_{d-1}(y) in C.
      Vec py(C.dim(d - 1));
      for (size_t r = 0; r < C.dim(d - 1); ++r) py[r] = phi[d - 1].at(r, y);
      Vec img = C.multiply(1, [&] {
        Vec u(C.dim(1));
        u[g] = 1;
        return u;
      }(), d - 1, py);
      for (size_t r = 0; r < img.size(); ++r) Q.at(r, c) = img[r];
    }
    // Well-definedness witness: ker P must map to zero under Q.
    for (const Vec& k : linalg::kernel_basis(P)) {
      Vec img = detail::mat_apply(Q, k);
      if (std::any_of(img.begin(), img.end(),
                      [](const Rational& x) { return x != 0; }))
        return std::nullopt;
    }
    phi[d] = Matrix(C.dim(d), Acover.dim(d));
    for (size_t u = 0; u < Acover.dim(d); ++u) {
      Vec unit(Acover.dim(d));
      unit[u] = 1;
      std::optional<Vec> x = linalg::solve(P, unit);
      if (!x) return std::nullopt;  // A' not generated in degree 1: impossible
      Vec img = detail::mat_apply(Q, *x);
      for (size_t r = 0; r < img.size(); ++r) phi[d].at(r, u) = img[r];
    }
  }
  return phi;
}

// Is the algebra quadratic, i.e. does the expansion of its quadratic cover
// reproduce its graded dimensions?
inline bool is_quadratic(const Algebra& A) {
  Algebra cov = quad::expand(quadratic_cover(A), A.cutoff);
  for (int d = 0; d <= A.cutoff; ++d)
    if (cov.dim(d) != A.dim(d)) return false;
  return true;
}

// T(M) = A e_{L'} (x)_{A'} M for a graded module M over A' (vertices of M
// are the corner labels 0..|keep|-1).  psi maps the degree-1 basis of A'
// to degree-1 basis indices of A.  Returns the quotient dimensions per
// internal degree together with the induced module structure over A.
struct TensorResult {
  bool psi_ok = true;
  Module out;  // vertices are labels of A
};

inline TensorResult tensor_T(const Algebra& A, const std::vector<int>& keep,
                             const Algebra& Acover,
                             const std::vector<size_t>& psi,
                             const Module& M) {
  TensorResult res;
  std::map<int, int> relab;
  for (size_t i = 0; i < keep.size(); ++i) relab[keep[i]] = static_cast<int>(i);
  // psi-witness: quadratic relations of A' map to zero in A.
  auto [pairs, kern] = quad::degree2_kernel(Acover);
  for (const Vec& rel : kern) {
    Vec acc(A.dim(2));
    for (size_t c = 0; c < pairs.size(); ++c) {
      if (rel[c] == 0) continue;
      const Vec& p = A.product(1, static_cast<int>(psi[pairs[c][0]]), 1,
                               static_cast<int>(psi[pairs[c][1]]));
      for (size_t r = 0; r < p.size(); ++r) acc[r] += rel[c] * p[r];
    }
    if (std::any_of(acc.begin(), acc.end(),
                    [](const Rational& x) { return x != 0; })) {
      res.psi_ok = false;
      return res;
    }
  }
  int top = top_degree(A) + M.lo + M.components() - 1;
  // Raw space per degree: pairs (A basis x with dst in keep, m in M) with
  // matching vertex; then divide by x.psi(g) (x) m - x (x) (g.m).
  std::vector<std::vector<std::array<int, 3>>> raw(top + 1);
  std::vector<std::map<std::array<int, 3>, size_t>> idx(top + 1);
  for (int d = 0; d <= top; ++d)
    for (int ad = 0; ad <= std::min(A.cutoff, d); ++ad) {
      int k = d - ad - M.lo;
      if (k < 0 || k >= M.components()) continue;
      for (size_t i = 0; i < A.dim(ad); ++i) {
        auto it = relab.find(A.blocks[ad][i].dst);
        if (it == relab.end()) continue;
        for (size_t m = 0; m < M.dim(k); ++m)
          if (M.vert[k][m] == it->second) {
            idx[d][{ad, static_cast<int>(i), static_cast<int>(m)}] =
                raw[d].size();
            raw[d].push_back({ad, static_cast<int>(i), static_cast<int>(m)});
          }
      }
    }
  std::vector<std::vector<Vec>> rows(top + 1);
  std::vector<std::vector<size_t>> pivots(top + 1);
  for (int d = 1; d <= top; ++d) {
    std::vector<Vec> span;
    for (int ad = 0; ad < std::min(A.cutoff, d); ++ad) {
      int k = d - 1 - ad - M.lo;
      if (k < 0 || k + 1 >= M.components() + 1) continue;
      if (k >= M.components()) continue;
      for (size_t i = 0; i < A.dim(ad); ++i) {
        for (size_t g = 0; g < Acover.dim(1); ++g) {
          const Arrow& ga = A.blocks[1][psi[g]];
          if (A.blocks[ad][i].dst != ga.src) continue;
          for (size_t m = 0; m < M.dim(k); ++m) {
            if (M.vert[k][m] != relab.at(ga.dst)) continue;
            Vec v(raw[d].size());
            bool nonzero = false;
            const Vec& xp = A.product(ad, static_cast<int>(i), 1,
                                      static_cast<int>(psi[g]));
            for (size_t r = 0; r < xp.size(); ++r)
              if (xp[r] != 0) {
                auto it = idx[d].find({ad + 1, static_cast<int>(r),
                                       static_cast<int>(m)});
                if (it != idx[d].end()) {
                  v[it->second] += xp[r];
                  nonzero = true;
                }
              }
            if (k + 1 < M.components()) {
              const Matrix& gm = M.act[k][g];
              for (size_t r = 0; r < gm.rows(); ++r)
                if (gm.at(r, m) != 0) {
                  auto it = idx[d].find({ad, static_cast<int>(i),
                                         static_cast<int>(r)});
                  if (it != idx[d].end()) {
                    v[it->second] -= gm.at(r, m);
                    nonzero = true;
                  }
                }
            }
            if (nonzero) span.push_back(std::move(v));
          }
        }
      }
    }
    std::tie(rows[d], pivots[d]) =
        detail::echelon(std::move(span), raw[d].size());
  }
  res.out.lo = 0;
  res.out.vert.resize(top + 1);
  std::vector<std::vector<int>> sel(top + 1);
  for (int d = 0; d <= top; ++d) {
    std::vector<bool> is_pivot(raw[d].size(), false);
    for (size_t c : pivots[d]) is_pivot[c] = true;
    sel[d].assign(raw[d].size(), -1);
    for (size_t c = 0; c < raw[d].size(); ++c)
      if (!is_pivot[c]) {
        sel[d][c] = static_cast<int>(res.out.vert[d].size());
        res.out.vert[d].push_back(A.blocks[raw[d][c][0]][raw[d][c][1]].src);
      }
  }
  res.out.act.resize(top);
  for (int d = 0; d < top; ++d) {
    res.out.act[d].resize(A.dim(1), Matrix(res.out.dim(d + 1),
                                           res.out.dim(d)));
    for (size_t g = 0; g < A.dim(1); ++g)
      for (size_t c = 0; c < raw[d].size(); ++c) {
        if (sel[d][c] < 0) continue;
        auto [ad, i, m] = raw[d][c];
        if (ad + 1 > A.cutoff) continue;
        const Vec& p = A.product(1, static_cast<int>(g), ad, i);
        Vec v(raw[d + 1].size());
        for (size_t r = 0; r < p.size(); ++r)
          if (p[r] != 0) {
            auto it = idx[d + 1].find({ad + 1, static_cast<int>(r), m});
            if (it != idx[d + 1].end()) v[it->second] += p[r];
          }
        detail::reduce_mod(v, rows[d + 1], pivots[d + 1]);
        for (size_t r = 0; r < v.size(); ++r)
          if (v[r] != 0 && sel[d + 1][r] >= 0)
            res.out.act[d][g].at(sel[d + 1][r], sel[d][c]) = v[r];
      }
  }
  return res;
}

// Termwise compatibility square: for a module M over the common quadratic
// dual of the corner C = e_{L'} A e_{L'} and of its quadratic cover A',
// the homomorphism Phi: A' -> C intertwines the boundary maps of the two
// linear complexes.
struct PhiSquare {
  bool phi_ok = false;      // Phi well-defined (witness check)
  bool commutes = false;    // Phi o d' = d o Phi on every term
  bool squares_zero = false;
};

inline PhiSquare phi_compatibility(const Algebra& A,
                                   const std::vector<int>& keep,
                                   const Module& M) {
  PhiSquare out;
  Algebra C = quad::corner(A, keep);
  quad::Presentation cover = quadratic_cover(C);
  Algebra Acover = quad::expand(cover, C.cutoff);
  std::optional<std::vector<Matrix>> phi = cover_to_corner(Acover, C);
  if (!phi) return out;
  out.phi_ok = true;

  Algebra Adual = quad::expand(quad::quadratic_dual_of_algebra(C),
                               M.components());
  LinearComplex XC = linear_complex(C, Adual, M);
  LinearComplex XA = linear_complex(Acover, Adual, M);
  out.squares_zero = XC.square_zero && XA.square_zero;

  // Term maps Phi_k: X_A^k -> X_C^k, (x' (x) m) -> (Phi x') (x) m.
  out.commutes = true;
  int terms = static_cast<int>(XC.basis.size());
  std::vector<Matrix> term_map;
  std::vector<std::map<std::array<int, 3>, size_t>> cidx(terms);
  for (int k = 0; k < terms; ++k)
    for (size_t c = 0; c < XC.basis[k].size(); ++c)
      cidx[k][XC.basis[k][c]] = c;
  for (int k = 0; k < terms; ++k) {
    Matrix T(XC.basis[k].size(), XA.basis[k].size());
    for (size_t c = 0; c < XA.basis[k].size(); ++c) {
      auto [ad, i, m] = XA.basis[k][c];
      if (ad >= static_cast<int>(phi->size())) continue;
      const Matrix& pd = (*phi)[ad];
      for (size_t r = 0; r < pd.rows(); ++r)
        if (pd.at(r, i) != 0) {
          auto it = cidx[k].find({ad, static_cast<int>(r), m});
          if (it != cidx[k].end()) T.at(it->second, c) += pd.at(r, i);
        }
    }
    term_map.push_back(std::move(T));
  }
  for (int k = 0; k + 1 < terms; ++k) {
    Matrix lhs = term_map[k + 1] * XA.delta[k];
    Matrix rhs = XC.delta[k] * term_map[k];
    for (size_t r = 0; r < lhs.rows(); ++r)
      for (size_t c = 0; c < lhs.cols(); ++c)
        if (lhs.at(r, c) != rhs.at(r, c)) out.commutes = false;
  }
  return out;
}

}  // namespace kos
