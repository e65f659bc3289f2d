// The acceptance suite: eleven verification criteria covering the whole
// toolkit, each returning a pass/fail result with a short detail string.
// Scales: smoke (trimmed grids, quick), desk (the full stated grids),
// extended (desk plus enlarged randomized sweeps).

#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fock.hpp"
#include "gkm.hpp"
#include "hecke.hpp"
#include "koszul.hpp"
#include "ktheory.hpp"
#include "quadratic.hpp"

namespace accept {

using aweyl::AffinePerm;
using laurent::Laurent;
using linalg::Rational;

enum class Scale { smoke, desk, extended };

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

inline AffinePerm word(int n, const std::vector<int>& letters) {
  AffinePerm w = AffinePerm::identity(n);
  for (int r : letters) w = w * AffinePerm::simple(n, r);
  return w;
}

inline std::vector<AffinePerm> ball(int n, int maxlen) {
  std::set<AffinePerm> seen{AffinePerm::identity(n)};
  std::vector<AffinePerm> frontier{AffinePerm::identity(n)};
  for (int l = 0; l < maxlen; ++l) {
    std::vector<AffinePerm> next;
    for (const AffinePerm& w : frontier)
      for (int r = 0; r < n; ++r) {
        AffinePerm x = AffinePerm::simple(n, r) * w;
        if (x.length() == w.length() + 1 && seen.insert(x).second)
          next.push_back(x);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<std::vector<int>> compositions(int n, int e) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(e);
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == e - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= rest; ++k) {
      cur[pos] = k;
      rec(pos + 1, rest - k);
    }
  };
  rec(0, n);
  return out;
}

// All nu-dominant tuples (strictly decreasing within each nu-block) with
// entries in [0, window).
inline std::vector<fock::Tuple> wedge_basis(const std::vector<int>& nu,
                                            int window) {
  std::vector<std::vector<fock::Tuple>> blocks;
  for (int part : nu) {
    std::vector<fock::Tuple> cur{{}};
    for (int slot = 0; slot < part; ++slot) {
      std::vector<fock::Tuple> next;
      for (const fock::Tuple& t : cur) {
        long long hi = t.empty() ? window : t.back();
        for (long long m = 0; m < hi; ++m) {
          fock::Tuple ext = t;
          ext.push_back(m);
          next.push_back(std::move(ext));
        }
      }
      cur = std::move(next);
    }
    blocks.push_back(std::move(cur));
  }
  std::vector<fock::Tuple> out{{}};
  for (const auto& blk : blocks) {
    std::vector<fock::Tuple> next;
    for (const fock::Tuple& head : out)
      for (const fock::Tuple& tail : blk) {
        fock::Tuple joined = head;
        joined.insert(joined.end(), tail.begin(), tail.end());
        next.push_back(std::move(joined));
      }
    out = std::move(next);
  }
  return out;
}

// Shared corpus of quadratic presentations (Koszul members).
inline quad::Presentation rel_pres(int nvert,
                                   std::vector<quad::Arrow> arrows,
                                   bool kill_all_squares) {
  quad::Presentation p{nvert, std::move(arrows), {}};
  if (kill_all_squares) {
    size_t w2 = quad::words2(p).size();
    for (size_t c = 0; c < w2; ++c) {
      linalg::Vec v(w2);
      v[c] = 1;
      p.relations.push_back(std::move(v));
    }
  }
  return p;
}

inline quad::Presentation dual_numbers() {
  return rel_pres(1, {{0, 0}}, true);
}

inline quad::Presentation exterior_two_vars() {
  quad::Presentation p{1, {{0, 0}, {0, 0}}, {}};
  linalg::Vec xx(4), yy(4), mix(4);
  xx[0] = 1;
  yy[3] = 1;
  mix[1] = 1;
  mix[2] = 1;
  p.relations = {xx, yy, mix};
  return p;
}

inline quad::Presentation line_rsz() {
  return rel_pres(3, {{0, 1}, {1, 2}}, true);
}

inline quad::Presentation two_cycle_rsz() {
  return rel_pres(2, {{0, 1}, {1, 0}}, true);
}

inline quad::Presentation three_cycle_rsz() {
  return rel_pres(3, {{0, 1}, {1, 2}, {2, 0}}, true);
}

inline quad::Presentation random_presentation(std::mt19937& rng) {
  quad::Presentation p;
  p.nvert = 2 + static_cast<int>(rng() % 3);
  int narrows = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < narrows; ++i) {
    int s = static_cast<int>(rng() % p.nvert);
    int d = static_cast<int>(rng() % p.nvert);
    if (s == d) d = (d + 1) % p.nvert;
    p.arrows.push_back({s, d});
  }
  std::vector<std::array<int, 2>> w2 = quad::words2(p);
  if (!w2.empty()) {
    int nrel = static_cast<int>(rng() % (w2.size() + 1));
    for (int r = 0; r < nrel; ++r) {
      std::array<int, 2> seed = w2[rng() % w2.size()];
      int s = p.arrows[seed[0]].src, d = p.arrows[seed[1]].dst;
      linalg::Vec v(w2.size());
      for (size_t c = 0; c < w2.size(); ++c)
        if (p.arrows[w2[c][0]].src == s && p.arrows[w2[c][1]].dst == d)
          v[c] = Rational(static_cast<int>(rng() % 5) - 2);
      p.relations.push_back(std::move(v));
    }
  }
  return p;
}

inline kos::Module random_module(const quad::Algebra& Ad, std::mt19937& rng,
                                 int top = 3) {
  std::vector<std::pair<int, int>> gens;
  int ngen = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < ngen; ++i)
    gens.push_back({static_cast<int>(rng() % Ad.nvert),
                    static_cast<int>(rng() % 2)});
  kos::Module F = kos::free_truncated(Ad, gens, top);
  std::vector<std::pair<int, linalg::Vec>> sub;
  int nsub = static_cast<int>(rng() % 3);
  for (int i = 0; i < nsub; ++i) {
    int k = 1 + static_cast<int>(rng() % top);
    if (F.dim(k) == 0) continue;
    linalg::Vec v(F.dim(k));
    for (auto& x : v) x = Rational(static_cast<int>(rng() % 3) - 1);
    sub.push_back({k, std::move(v)});
  }
  return kos::quotient_module(F, sub);
}

}  // namespace detail

// -----------------------------------------------------------------
// 1. Level-rank intertwining of the doubled operators.
inline Result criterion_1(Scale s) {
  Result r{1, "level-rank intertwining of doubled operators", true, "", 0};
  std::vector<int> es = s == Scale::smoke ? std::vector<int>{2}
                                          : std::vector<int>{2, 3};
  std::vector<std::vector<int>> nus{{2}, {3}, {2, 2}};
  int checked = 0;
  for (int e : es)
    for (int k = 0; k < e; ++k)
      for (const auto& nu : nus)
        for (const fock::Tuple& t :
             detail::wedge_basis(nu, 2 * (e + 1))) {
          fock::Wedge b = fock::Wedge::basis(t);
          fock::Wedge eb = fock::embed_upsilon(e, k, b);
          for (int op_r = 0; op_r < e; ++op_r) {
            bool f_ok = fock::embed_upsilon(e, k, fock::apply_f(e, op_r, nu, b)) ==
                        fock::apply_f_doubled(e, k, op_r, nu, eb);
            bool e_ok = fock::embed_upsilon(e, k, fock::apply_e(e, op_r, nu, b)) ==
                        fock::apply_e_doubled(e, k, op_r, nu, eb);
            if (!f_ok || !e_ok) r.pass = false;
            ++checked;
          }
        }
  r.detail = std::to_string(checked) + " operator/vector instances";
  return r;
}

// 2. Chevalley relation [e_i, f_j] = delta_ij h_i on wedge truncations.
inline Result criterion_2(Scale s) {
  Result r{2, "Chevalley relation on wedge truncations", true, "", 0};
  std::vector<int> es = s == Scale::smoke ? std::vector<int>{2}
                                          : std::vector<int>{2, 3};
  std::vector<std::vector<int>> nus{{2}, {3}, {2, 2}};
  int checked = 0;
  for (int e : es)
    for (const auto& nu : nus)
      for (const fock::Tuple& t : detail::wedge_basis(nu, 2 * e)) {
        fock::Wedge b = fock::Wedge::basis(t);
        for (int i = 0; i < e; ++i)
          for (int j = 0; j < e; ++j) {
            fock::Wedge lhs =
                fock::apply_e(e, i, nu, fock::apply_f(e, j, nu, b)) -
                fock::apply_f(e, j, nu, fock::apply_e(e, i, nu, b));
            fock::Wedge rhs =
                i == j ? fock::apply_h(e, i, nu, b) : fock::Wedge();
            if (!(lhs == rhs)) r.pass = false;
            ++checked;
          }
      }
  r.detail = std::to_string(checked) + " commutator instances";
  return r;
}

// 3. Center Hilbert series (normalized) equals the cell Poincare
//    polynomial across the small grid.
inline Result criterion_3(Scale s) {
  Result r{3, "center/cohomology agreement on the grid", true, "", 0};
  std::vector<int> ns = s == Scale::smoke ? std::vector<int>{2}
                                          : std::vector<int>{2, 3};
  int checked = 0;
  for (int n : ns) {
    std::vector<AffinePerm> vs =
        detail::ball(n, s == Scale::smoke ? 3 : (n == 2 ? 4 : 3));
    for (const AffinePerm& v : detail::ball(n, 2))
      vs.push_back(v * AffinePerm::pi(n));
    std::vector<int> es = s == Scale::smoke ? std::vector<int>{2}
                                            : std::vector<int>{2, 3};
    for (int e : es)
      for (const auto& mu : detail::compositions(n, e))
        for (const AffinePerm& v : vs) {
          gkm::MomentGraph g = gkm::parabolic_graph(e, mu, v);
          if (g.vertices.size() > 6) continue;
          if (gkm::normalized_quotient_poincare(e, mu, v) !=
              gkm::cell_poincare(e, mu, v))
            r.pass = false;
          ++checked;
        }
  }
  r.detail = std::to_string(checked) + " grid instances";
  return r;
}

// 4. Graded decomposition: P_mu = [mu_{k+1}+1] P_mu' (unbalanced) on all
//    mu_k = 1 instances of the grid.
inline Result criterion_4(Scale s) {
  Result r{4, "graded decomposition Poincare identity", true, "", 0};
  std::vector<int> ns = s == Scale::smoke ? std::vector<int>{2}
                                          : std::vector<int>{2, 3};
  int checked = 0;
  for (int n : ns) {
    std::vector<AffinePerm> vs = detail::ball(n, n == 2 ? 4 : 3);
    std::vector<int> es = s == Scale::smoke ? std::vector<int>{2}
                                            : std::vector<int>{2, 3};
    for (int e : es)
      for (const auto& mu : detail::compositions(n, e))
        for (int k = 1; k < e; ++k) {
          if (mu[k - 1] != 1) continue;
          std::vector<int> mup = mu;
          mup[k - 1] -= 1;
          mup[k] += 1;
          std::vector<int> mup_gens =
              aweyl::parabolic_generators(e, aweyl::one_mu(mup));
          std::set<AffinePerm> bounds;
          for (const AffinePerm& v : vs)
            bounds.insert(aweyl::max_coset_rep(v, mup_gens));
          for (const AffinePerm& v : bounds) {
            if (gkm::parabolic_graph(e, mu, v).vertices.size() > 6) continue;
            Laurent unbalanced;
            for (int t = 0; t <= mu[k]; ++t)
              unbalanced += Laurent::monomial(t);
            if (gkm::cell_poincare(e, mu, v) !=
                unbalanced * gkm::cell_poincare(e, mup, v))
              r.pass = false;
            ++checked;
          }
        }
  }
  r.detail = std::to_string(checked) + " mu_k = 1 instances";
  return r;
}

// 5. Composition identity F.E = [mu_{k+1}+1]_q Id with feasible balanced
//    shift solutions on the grid.
inline Result criterion_5(Scale s) {
  Result r{5, "composition identity and balanced shifts", true, "", 0};
  std::vector<int> ns = s == Scale::smoke ? std::vector<int>{2}
                                          : std::vector<int>{2, 3};
  int checked = 0;
  for (int n : ns) {
    std::vector<AffinePerm> vs =
        detail::ball(n, s == Scale::smoke ? 4 : (n == 2 ? 5 : 4));
    std::vector<int> es = s == Scale::smoke ? std::vector<int>{2}
                                            : std::vector<int>{2, 3};
    for (int e : es)
      for (const auto& mu : detail::compositions(n, e))
        for (int k = 1; k < e; ++k) {
          if (mu[k - 1] != 1) continue;
          std::vector<int> mup = mu;
          mup[k - 1] -= 1;
          mup[k] += 1;
          std::vector<int> mup_gens =
              aweyl::parabolic_generators(e, aweyl::one_mu(mup));
          std::set<AffinePerm> bounds;
          for (const AffinePerm& v : vs)
            bounds.insert(aweyl::max_coset_rep(v, mup_gens));
          for (const AffinePerm& v : bounds) {
            kth::MatrixReport f = kth::matrix_F(e, mu, mup, v);
            if (f.m.col.elems.size() > 12) continue;
            kth::MatrixReport eg = kth::matrix_E_graded(e, mu, mup, v);
            if (!f.ok() || !eg.ok()) {
              r.pass = false;
              continue;
            }
            kth::GradedMatrix fe = kth::mat_mul(f.m, eg.m);
            Laurent unbalanced;
            for (int t = 0; t <= mu[k]; ++t)
              unbalanced += Laurent::monomial(t);
            if (!kth::is_scalar_identity(fe, unbalanced)) r.pass = false;
            kth::ShiftSolution sol = kth::solve_shifts(f, eg);
            if (!sol.ok || sol.t != mu[k] + 1 ||
                !kth::composition_identity_holds(f, eg, sol))
              r.pass = false;
            ++checked;
          }
        }
  }
  r.detail = std::to_string(checked) + " grid instances";
  return r;
}

// 6. Index-set identities: inverse bijection and truncation-intersection.
inline Result criterion_6(Scale s) {
  Result r{6, "index-set bijection and truncation change", true, "", 0};
  int e = 2, n = 3;
  std::vector<int> mu = {1, 2}, mup = {0, 3}, nu = {2, 1};
  std::vector<long long> pt = aweyl::one_mu(mu);
  std::vector<int> mu_gens = aweyl::parabolic_generators(e, pt);
  int checked = 0;
  std::vector<int> bound_word =
      s == Scale::smoke ? std::vector<int>{0, 2, 1, 0}
                        : std::vector<int>{0, 2, 1, 0, 2};
  for (const AffinePerm& v :
       aweyl::bruhat_interval_below(detail::word(n, bound_word))) {
    if (!aweyl::is_min_coset_rep(v, mu_gens) ||
        !aweyl::is_nu_dominant(nu, aweyl::act_negative(v, e, pt)))
      continue;
    kth::DualityReport rep = kth::duality_bookkeeping(e, mu, mup, nu, v);
    if (!rep.precondition_ok || !rep.support_is_subbasis ||
        !rep.inverse_bijection || !rep.inclusion_pattern)
      r.pass = false;
    ++checked;
  }
  auto mup_gens = aweyl::parabolic_generators(e, aweyl::one_mu(mup));
  AffinePerm w_mup = aweyl::longest_element(n, mup_gens);
  std::set<AffinePerm> seen;
  std::vector<int> tc_word = s == Scale::smoke
                                 ? std::vector<int>{1, 0, 2, 1}
                                 : std::vector<int>{1, 0, 2, 1, 0, 2};
  for (const AffinePerm& u :
       aweyl::bruhat_interval_below(detail::word(n, tc_word))) {
    AffinePerm vmin = aweyl::min_coset_rep(u, mup_gens);
    if (!aweyl::is_nu_dominant(
            nu, aweyl::act_negative(vmin, e, aweyl::one_mu(mup))))
      continue;
    AffinePerm v = vmin * w_mup;
    if (!seen.insert(v).second) continue;
    if (!kth::truncation_change_holds(e, mu, mup, nu, v)) r.pass = false;
    ++checked;
  }
  r.detail = std::to_string(checked) + " bound instances";
  return r;
}

// 7. Quadratic duality corpus.
inline Result criterion_7(Scale s) {
  Result r{7, "quadratic duality corpus", true, "", 0};
  std::mt19937 rng(20260826);
  int nquivers = s == Scale::smoke ? 8 : (s == Scale::extended ? 40 : 24);
  for (int trial = 0; trial < nquivers; ++trial) {
    quad::Presentation p = detail::random_presentation(rng);
    quad::Presentation dd = quad::quadratic_dual(quad::quadratic_dual(p));
    size_t w2 = quad::words2(p).size();
    std::vector<linalg::Vec> orig = p.relations;
    for (linalg::Vec& v : orig) v.resize(w2);
    if (dd.arrows != p.arrows || !linalg::same_span(orig, dd.relations))
      r.pass = false;
    std::vector<int> keep;
    for (int v = 0; v < p.nvert; ++v)
      if (rng() % 2) keep.push_back(v);
    if (keep.empty() || keep.size() == static_cast<size_t>(p.nvert))
      keep = {0};
    if (!quad::check_dual_truncation(p, keep, 4).dims_match) r.pass = false;
  }
  // Hilbert test on the Koszul members and linearity on the
  // radical-square-zero family.
  std::vector<quad::Presentation> koszul{
      detail::dual_numbers(), detail::exterior_two_vars(),
      detail::line_rsz(), detail::two_cycle_rsz(),
      detail::three_cycle_rsz()};
  for (const auto& p : koszul) {
    quad::Algebra a = quad::expand(p, 5);
    quad::Algebra ad = quad::expand(quad::quadratic_dual(p), 5);
    if (!quad::hilbert_test(a, ad, 5)) r.pass = false;
  }
  for (const auto& p :
       {detail::line_rsz(), detail::two_cycle_rsz(),
        detail::three_cycle_rsz()}) {
    quad::Algebra a = quad::expand(p, 4);
    if (!kos::koszul_resolution_check(a, 4).linear) r.pass = false;
  }
  r.detail = std::to_string(nquivers) + " random quivers, 5 Koszul members";
  return r;
}

// 8. Linear complexes: d^2 = 0 on valid modules, nonzero on corrupted
//    ones, and the Phi-compatibility square.
inline Result criterion_8(Scale s) {
  Result r{8, "linear complexes and compatibility square", true, "", 0};
  std::mt19937 rng(424242);
  int nvalid = s == Scale::smoke ? 10 : (s == Scale::extended ? 100 : 50);
  int ncorrupt = s == Scale::smoke ? 3 : 10;
  int nsquare = s == Scale::smoke ? 2 : 5;
  std::vector<quad::Presentation> corpus{
      detail::dual_numbers(), detail::exterior_two_vars(),
      detail::line_rsz(), detail::two_cycle_rsz()};
  int done = 0;
  while (done < nvalid) {
    for (const auto& p : corpus) {
      if (done >= nvalid) break;
      quad::Algebra a = quad::expand(p, 4);
      quad::Algebra ad = quad::expand(quad::quadratic_dual(p), 4);
      kos::Module m = detail::random_module(ad, rng);
      if (!kos::is_valid_module(ad, m)) {
        r.pass = false;
        break;
      }
      if (!kos::linear_complex(a, ad, m).square_zero) r.pass = false;
      ++done;
    }
  }
  // Corrupted inputs over the exterior algebra.
  quad::Presentation p = detail::exterior_two_vars();
  quad::Algebra a = quad::expand(p, 4);
  quad::Algebra ad = quad::expand(quad::quadratic_dual(p), 4);
  int found = 0;
  for (int trial = 0; trial < 400 && found < ncorrupt; ++trial) {
    kos::Module m = detail::random_module(ad, rng);
    std::vector<std::tuple<int, size_t, size_t, size_t>> slots;
    for (int k = 0; k + 1 < m.components(); ++k)
      for (size_t g = 0; g < m.act[k].size(); ++g)
        for (size_t row = 0; row < m.dim(k + 1); ++row)
          for (size_t col = 0; col < m.dim(k); ++col)
            slots.push_back({k, g, row, col});
    if (slots.empty()) continue;
    auto [k, g, row, col] = slots[rng() % slots.size()];
    m.act[k][g].at(row, col) += 1 + static_cast<int>(rng() % 2);
    if (kos::is_valid_module(ad, m)) continue;
    if (kos::linear_complex(a, ad, m).square_zero) r.pass = false;
    ++found;
  }
  if (found < ncorrupt) r.pass = false;
  // Phi-compatibility squares.
  std::vector<std::pair<quad::Presentation, std::vector<int>>> instances{
      {detail::line_rsz(), {0, 1}},
      {detail::line_rsz(), {1, 2}},
      {quad::Presentation{3, {{0, 1}, {1, 2}}, {}}, {0, 2}},
      {detail::two_cycle_rsz(), {0}},
      {detail::three_cycle_rsz(), {0, 1}},
  };
  int squares = 0;
  for (const auto& [pp, keep] : instances) {
    if (squares >= nsquare) break;
    quad::Algebra aa = quad::expand(pp, 4);
    quad::Algebra c = quad::corner(aa, keep);
    quad::Algebra cdual =
        quad::expand(quad::quadratic_dual_of_algebra(c), 3);
    kos::Module m = detail::random_module(cdual, rng, 3);
    if (!kos::is_valid_module(cdual, m)) {
      r.pass = false;
      continue;
    }
    kos::PhiSquare sq = kos::phi_compatibility(aa, keep, m);
    if (!sq.phi_ok || !sq.commutes || !sq.squares_zero) r.pass = false;
    ++squares;
  }
  std::ostringstream os;
  os << done << " valid, " << found << " corrupted, " << squares
     << " squares";
  r.detail = os.str();
  return r;
}

// 9. Ext-algebra agrees with the quadratic dual on Koszul members.
inline Result criterion_9(Scale s) {
  Result r{9, "Ext algebra matches quadratic dual", true, "", 0};
  std::vector<quad::Presentation> koszul{
      detail::dual_numbers(), detail::exterior_two_vars(),
      detail::line_rsz(), detail::two_cycle_rsz(),
      detail::three_cycle_rsz()};
  int cutoff = s == Scale::smoke ? 3 : 4;
  for (const auto& p : koszul) {
    quad::Algebra a = quad::expand(p, cutoff);
    quad::Algebra ad = quad::expand(quad::quadratic_dual(p), cutoff);
    kos::ExtReport ext = kos::ext_algebra_check(a, ad, cutoff);
    if (!ext.dims_match_dual || !ext.yoneda_surjective ||
        !ext.relation_dims_match)
      r.pass = false;
  }
  r.detail = "5 Koszul members to cutoff " + std::to_string(cutoff);
  return r;
}

// 10. Hecke algebra checks.
inline Result criterion_10(Scale s) {
  Result r{10, "Hecke associativity, braid, cyclotomic dims, involution",
           true, "", 0};
  hecke::Params par;  // q = 2, Q = (3, 5)
  int d = 3;
  auto mul = [&](const hecke::Element& a, const hecke::Element& b) {
    return hecke::multiply(a, b, par);
  };
  // Random associativity triples.
  std::mt19937 rng(101);
  auto random_elem = [&]() {
    hecke::Element x = hecke::Element::one(d).scaled(
        Rational(static_cast<int>(rng() % 5) - 2));
    for (int terms = 0; terms < 2; ++terms) {
      int kind = static_cast<int>(rng() % 2);
      if (kind == 0)
        x = x + hecke::Element::T(d, 1 + static_cast<int>(rng() % (d - 1)))
                    .scaled(Rational(1 + static_cast<int>(rng() % 3)));
      else
        x = x + hecke::Element::X(d, 1 + static_cast<int>(rng() % d),
                                  static_cast<int>(rng() % 3) - 1);
    }
    return x;
  };
  int triples = s == Scale::smoke ? 20 : 100;
  for (int trial = 0; trial < triples; ++trial) {
    hecke::Element a = random_elem(), b = random_elem(), c = random_elem();
    if (!(mul(mul(a, b), c) == mul(a, mul(b, c)))) r.pass = false;
  }
  // Braid relation.
  {
    hecke::Element t1 = hecke::Element::T(d, 1), t2 = hecke::Element::T(d, 2);
    if (!(mul(mul(t1, t2), t1) == mul(mul(t2, t1), t2))) r.pass = false;
  }
  // Cyclotomic dimensions l^d d! for (l, d) = (1,2), (1,3), (2,2).
  hecke::Params par1;
  par1.Q = {3};
  if (hecke::cyclotomic_rank(hecke::build_cyclotomic(2, par1)) != 2)
    r.pass = false;
  if (s != Scale::smoke &&
      hecke::cyclotomic_rank(hecke::build_cyclotomic(3, par1)) != 6)
    r.pass = false;
  if (hecke::cyclotomic_rank(hecke::build_cyclotomic(2, par)) != 8)
    r.pass = false;
  // Iwahori-Matsumoto involution: generator images satisfy the relations.
  {
    hecke::Element it1 = hecke::involution_im(hecke::Element::T(d, 1), par);
    if (!(mul(it1, it1) ==
          it1.scaled(par.q - 1) + hecke::Element::one(d).scaled(par.q)))
      r.pass = false;
    hecke::Element ix1 = hecke::involution_im(hecke::Element::X(d, 1), par);
    hecke::Element ix2 = hecke::involution_im(hecke::Element::X(d, 2), par);
    if (!(mul(it1, ix2) == mul(ix1, it1) + ix2.scaled(par.q - 1)))
      r.pass = false;
    std::vector<hecke::Element> samples = {
        hecke::Element::T(d, 1), hecke::Element::X(d, 2),
        mul(hecke::Element::T(d, 2), hecke::Element::X(d, 1))};
    for (const auto& x : samples)
      if (!(hecke::involution_im(hecke::involution_im(x, par), par) == x))
        r.pass = false;
  }
  r.detail = std::to_string(triples) + " associativity triples";
  return r;
}

// 11. Upsilon equivariance.
inline Result criterion_11(Scale s) {
  Result r{11, "Upsilon equivariance and antidominance", true, "", 0};
  std::mt19937 rng(31415);
  int pairs = s == Scale::smoke ? 100 : (s == Scale::extended ? 1000 : 500);
  for (int trial = 0; trial < pairs; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    int e = 2 + static_cast<int>(rng() % 2);
    int k = static_cast<int>(rng() % e);
    std::vector<long long> la(n);
    for (auto& x : la) x = static_cast<long long>(rng() % 11) - 5;
    AffinePerm w = AffinePerm::identity(n);
    int len = static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i)
      w = w * AffinePerm::simple(n, static_cast<int>(rng() % n));
    w = w * AffinePerm::pi_power(n, static_cast<int>(rng() % 3) - 1);
    std::vector<long long> lhs =
        lattice::upsilon_tuple(e, k, aweyl::act_negative(w, e, la));
    std::vector<long long> rhs = aweyl::act_negative(
        w, e + 1, lattice::upsilon_tuple(e, k, la));
    if (lhs != rhs) r.pass = false;
    if (aweyl::is_antidominant(e, la) &&
        !aweyl::is_antidominant(e + 1, lattice::upsilon_tuple(e, k, la)))
      r.pass = false;
  }
  r.detail = std::to_string(pairs) + " random (lambda, w) pairs";
  return r;
}

inline std::vector<Result> run_all(Scale s) {
  std::vector<std::function<Result(Scale)>> fns{
      criterion_1, criterion_2, criterion_3, criterion_4,
      criterion_5, criterion_6, criterion_7, criterion_8,
      criterion_9, criterion_10, criterion_11};
  std::vector<Result> out;
  for (const auto& fn : fns) {
    auto t0 = std::chrono::steady_clock::now();
    Result r = fn(s);
    r.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace accept
