#include "doctest.h"
#include "koszul.hpp"

#include <random>

using kos::Module;
using linalg::Matrix;
using linalg::Rational;
using linalg::Vec;
using quad::Algebra;
using quad::Arrow;
using quad::Presentation;

namespace {

Vec rel(const Presentation& p,
        std::initializer_list<std::pair<size_t, int>> terms) {
  Vec v(quad::words2(p).size());
  for (auto [i, c] : terms) v[i] = c;
  return v;
}

// k[x] / x^n as a hand-built monomial algebra (not quadratic for n != 2).
Algebra truncated_polynomial(int n, int cutoff) {
  Algebra a;
  a.nvert = 1;
  a.cutoff = cutoff;
  a.finite = true;
  a.blocks.resize(cutoff + 1);
  for (int d = 0; d <= cutoff && d < n; ++d) a.blocks[d].push_back({0, 0});
  for (int d1 = 0; d1 <= cutoff; ++d1)
    for (int d2 = 0; d1 + d2 <= cutoff; ++d2)
      for (size_t i = 0; i < a.dim(d1); ++i)
        for (size_t j = 0; j < a.dim(d2); ++j) {
          Vec p(a.dim(d1 + d2));
          if (d1 + d2 < n) p[0] = 1;
          a.prod[{d1, static_cast<int>(i), d2, static_cast<int>(j)}] = p;
        }
  return a;
}

Presentation dual_numbers() {
  Presentation p{1, {{0, 0}}, {}};
  p.relations.push_back(rel(p, {{0, 1}}));
  return p;
}

Presentation exterior_two_vars() {
  // Loops x, y with relations xx, yy, xy + yx; the exterior algebra.
  Presentation p{1, {{0, 0}, {0, 0}}, {}};
  // words2 order: (x,x), (x,y), (y,x), (y,y).
  p.relations.push_back(rel(p, {{0, 1}}));
  p.relations.push_back(rel(p, {{3, 1}}));
  p.relations.push_back(rel(p, {{1, 1}, {2, 1}}));
  return p;
}

Presentation line_rsz() {
  Presentation p{3, {{0, 1}, {1, 2}}, {}};
  p.relations.push_back(rel(p, {{0, 1}}));
  return p;
}

Presentation two_cycle_rsz() {
  Presentation p{2, {{0, 1}, {1, 0}}, {}};
  p.relations.push_back(rel(p, {{0, 1}}));
  p.relations.push_back(rel(p, {{1, 1}}));
  return p;
}

size_t count_nonzero(const Matrix& m) {
  size_t n = 0;
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) != 0) ++n;
  return n;
}

// Random valid module over Ad: quotient of a truncated free module by the
// submodule generated by random homogeneous elements.
Module random_module(const Algebra& Ad, std::mt19937& rng, int top = 3) {
  std::vector<std::pair<int, int>> gens;
  int ngen = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < ngen; ++i)
    gens.push_back({static_cast<int>(rng() % Ad.nvert),
                    static_cast<int>(rng() % 2)});
  Module F = kos::free_truncated(Ad, gens, top);
  std::vector<std::pair<int, Vec>> sub;
  int nsub = static_cast<int>(rng() % 3);
  for (int i = 0; i < nsub; ++i) {
    int k = 1 + static_cast<int>(rng() % top);
    if (F.dim(k) == 0) continue;
    Vec v(F.dim(k));
    for (auto& x : v) x = Rational(static_cast<int>(rng() % 3) - 1);
    sub.push_back({k, std::move(v)});
  }
  return kos::quotient_module(F, sub);
}

}  // namespace

TEST_CASE("semisimple algebra: resolutions have length zero") {
  Presentation p{2, {}, {}};
  Algebra a = quad::expand(p, 3);
  kos::KoszulReport rep = kos::koszul_resolution_check(a, 4);
  CHECK(rep.linear);
  for (const kos::Resolution& r : rep.resolutions)
    CHECK(r.steps.size() == 1);
}

TEST_CASE("dual numbers: periodic linear resolution and Ext dims") {
  Algebra a = quad::expand(dual_numbers(), 4);
  kos::KoszulReport rep = kos::koszul_resolution_check(a, 4);
  CHECK(rep.linear);
  REQUIRE(rep.resolutions.size() == 1);
  CHECK(rep.resolutions[0].steps.size() == 5);

  Algebra ad = quad::expand(quad::quadratic_dual(dual_numbers()), 4);
  kos::ExtReport ext = kos::ext_algebra_check(a, ad, 4);
  for (int r = 0; r <= 4; ++r) CHECK(ext.dims[r][0][0] == 1);
  CHECK(ext.dims_match_dual);
  CHECK(ext.yoneda_surjective);
  CHECK(ext.relation_dims_match);
}

TEST_CASE("radical-square-zero line quiver is Koszul to degree 4") {
  Algebra a = quad::expand(line_rsz(), 4);
  kos::KoszulReport rep = kos::koszul_resolution_check(a, 4);
  CHECK(rep.linear);
  Algebra ad = quad::expand(quad::quadratic_dual(line_rsz()), 4);
  kos::ExtReport ext = kos::ext_algebra_check(a, ad, 4);
  CHECK(ext.dims_match_dual);
  CHECK(ext.yoneda_surjective);
  CHECK(ext.relation_dims_match);
  // Total Ext dimension matches the dual's total dimension (6).
  size_t total = 0;
  for (const auto& per_r : ext.dims)
    for (const auto& row : per_r)
      for (size_t d : row) total += d;
  CHECK(total == 6);
}

TEST_CASE("x^3 = 0 is non-quadratic with a non-linear second syzygy") {
  Algebra a = truncated_polynomial(3, 6);
  CHECK_FALSE(kos::is_quadratic(a));
  CHECK(kos::is_quadratic(truncated_polynomial(2, 4)));
  kos::KoszulReport rep = kos::koszul_resolution_check(a, 3);
  CHECK_FALSE(rep.linear);
  CHECK(rep.first_nonlinear_step == 2);
  // Step 1 is generated in degree 1 (by x); step 2 needs degree 3 (x^2).
  const kos::Resolution& r = rep.resolutions[0];
  REQUIRE(r.steps.size() >= 3);
  CHECK(r.steps[1].gens == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(r.steps[2].gens == std::vector<std::pair<int, int>>{{0, 3}});
}

TEST_CASE("exterior algebra is Koszul; dual is the polynomial ring") {
  Algebra a = quad::expand(exterior_two_vars(), 4);
  CHECK(a.total_dim() == 4);
  kos::KoszulReport rep = kos::koszul_resolution_check(a, 3);
  CHECK(rep.linear);
  Algebra ad = quad::expand(quad::quadratic_dual(exterior_two_vars()), 3);
  CHECK(ad.dim(2) == 3);  // symmetric square of two variables
  kos::ExtReport ext = kos::ext_algebra_check(a, ad, 3);
  CHECK(ext.dims_match_dual);
  CHECK(ext.yoneda_surjective);
  CHECK(ext.relation_dims_match);
  CHECK(quad::hilbert_test(a, ad, 3));
}

TEST_CASE("linear complex of a truncated polynomial module over x^2 = 0") {
  Algebra a = quad::expand(dual_numbers(), 3);
  Algebra ad = quad::expand(quad::quadratic_dual(dual_numbers()), 3);
  Module m = kos::free_truncated(ad, {{0, 0}}, 2);
  CHECK(m.dim(0) == 1);
  CHECK(m.dim(1) == 1);
  CHECK(m.dim(2) == 1);
  CHECK(kos::is_valid_module(ad, m));
  kos::LinearComplex x = kos::linear_complex(a, ad, m);
  CHECK(x.square_zero);
  REQUIRE(x.delta.size() == 2);
  // Each term is A (dim 2); each boundary is multiplication by x (rank 1).
  CHECK(x.basis[0].size() == 2);
  CHECK(x.basis[1].size() == 2);
  CHECK(count_nonzero(x.delta[0]) == 1);
  CHECK(count_nonzero(x.delta[1]) == 1);
  Matrix sq = x.delta[1] * x.delta[0];
  CHECK(count_nonzero(sq) == 0);
}

TEST_CASE("d^2 = 0 on random valid modules across the corpus") {
  std::mt19937 rng(424242);
  std::vector<Presentation> corpus{dual_numbers(), exterior_two_vars(),
                                   line_rsz(), two_cycle_rsz()};
  int checked = 0;
  for (const Presentation& p : corpus) {
    Algebra a = quad::expand(p, 4);
    Algebra ad = quad::expand(quad::quadratic_dual(p), 4);
    for (int trial = 0; trial < 13 && checked < 50; ++trial) {
      Module m = random_module(ad, rng);
      REQUIRE(kos::is_valid_module(ad, m));
      kos::LinearComplex x = kos::linear_complex(a, ad, m);
      CHECK(x.square_zero);
      ++checked;
    }
  }
  CHECK(checked == 50);
}

TEST_CASE("corrupted modules are detected: d^2 != 0") {
  // Over the exterior algebra the dual is the polynomial ring, whose
  // module condition is commutativity of the two action matrices; break
  // it and the complex must fail to square to zero.
  std::mt19937 rng(99);
  Presentation p = exterior_two_vars();
  Algebra a = quad::expand(p, 4);
  Algebra ad = quad::expand(quad::quadratic_dual(p), 4);
  int found = 0;
  for (int trial = 0; trial < 200 && found < 10; ++trial) {
    Module m = random_module(ad, rng);
    // Corrupt one vertex-compatible entry of one action matrix.
    std::vector<std::tuple<int, size_t, size_t, size_t>> slots;
    for (int k = 0; k + 1 < m.components(); ++k)
      for (size_t g = 0; g < m.act[k].size(); ++g)
        for (size_t r = 0; r < m.dim(k + 1); ++r)
          for (size_t c = 0; c < m.dim(k); ++c)
            slots.push_back({k, g, r, c});
    if (slots.empty()) continue;
    auto [k, g, r, c] = slots[rng() % slots.size()];
    m.act[k][g].at(r, c) += 1 + static_cast<int>(rng() % 2);
    if (kos::is_valid_module(ad, m)) continue;  // corruption was harmless
    kos::LinearComplex x = kos::linear_complex(a, ad, m);
    CHECK_FALSE(x.square_zero);
    CHECK(x.violating_term >= 0);
    ++found;
  }
  CHECK(found == 10);
}

TEST_CASE("tensor functor sends cover projectives to projectives") {
  // Full path algebra of 0 -> 1 -> 2, corner at {0, 1}.
  Presentation p{3, {{0, 1}, {1, 2}}, {}};
  Algebra a = quad::expand(p, 4);
  std::vector<int> keep{0, 1};
  Algebra c = quad::corner(a, keep);
  Algebra acover = quad::expand(kos::quadratic_cover(c), c.cutoff);
  std::vector<size_t> psi{0};  // the internal arrow 0 -> 1 is A_1 index 0

  for (int lam = 0; lam < 2; ++lam) {
    Module m = kos::free_truncated(acover, {{lam, 0}}, 3);
    kos::TensorResult t = kos::tensor_T(a, keep, acover, psi, m);
    REQUIRE(t.psi_ok);
    // T(A' e'_lam) = A e_{keep[lam]}: compare graded dimensions.
    for (int d = 0; d < t.out.components(); ++d) {
      size_t expect = 0;
      if (d <= a.cutoff)
        for (const Arrow& b : a.blocks[d])
          if (b.dst == keep[lam]) ++expect;
      CHECK(t.out.dim(d) == expect);
    }
  }
}

TEST_CASE("tensor functor: zero and simple modules") {
  Presentation p{3, {{0, 1}, {1, 2}}, {}};
  Algebra a = quad::expand(p, 4);
  std::vector<int> keep{0, 1};
  Algebra c = quad::corner(a, keep);
  Algebra acover = quad::expand(kos::quadratic_cover(c), c.cutoff);
  std::vector<size_t> psi{0};

  Module zero;
  zero.lo = 0;
  zero.vert = {{}};
  kos::TensorResult tz = kos::tensor_T(a, keep, acover, psi, zero);
  REQUIRE(tz.psi_ok);
  CHECK(tz.out.total_dim() == 0);

  // Simple at corner vertex 1 (original vertex 1): A e_1 has basis e_1
  // and the arrow 0 -> 1; the relation kills the image of the arrow, so
  // T(S'_1) is one-dimensional.
  Module s;
  s.lo = 0;
  s.vert = {{1}};
  kos::TensorResult ts = kos::tensor_T(a, keep, acover, psi, s);
  REQUIRE(ts.psi_ok);
  CHECK(ts.out.total_dim() == 1);
  CHECK(ts.out.dim(0) == 1);
  CHECK(ts.out.vert[0][0] == 1);

  // Simple at corner vertex 0: no arrows end at vertex 0, so T(S'_0) is
  // just A e_0 = span{e_0}.
  Module s0;
  s0.lo = 0;
  s0.vert = {{0}};
  kos::TensorResult t0 = kos::tensor_T(a, keep, acover, psi, s0);
  REQUIRE(t0.psi_ok);
  CHECK(t0.out.total_dim() == 1);
}

TEST_CASE("phi-compatibility square holds on five instances") {
  std::mt19937 rng(5150);
  std::vector<std::pair<Presentation, std::vector<int>>> instances{
      {line_rsz(), {0, 1}},
      {line_rsz(), {1, 2}},
      {quad::Presentation{3, {{0, 1}, {1, 2}}, {}}, {0, 2}},
      {two_cycle_rsz(), {0}},
      {exterior_two_vars(), {0}},
  };
  int checked = 0;
  for (const auto& [p, keep] : instances) {
    Algebra a = quad::expand(p, 4);
    Algebra c = quad::corner(a, keep);
    Algebra cdual = quad::expand(quad::quadratic_dual_of_algebra(c), 3);
    Module m = random_module(cdual, rng, 3);
    REQUIRE(kos::is_valid_module(cdual, m));
    kos::PhiSquare sq = kos::phi_compatibility(a, keep, m);
    CHECK(sq.phi_ok);
    CHECK(sq.commutes);
    CHECK(sq.squares_zero);
    ++checked;
  }
  CHECK(checked == 5);
}
