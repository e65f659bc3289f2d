#include "fock.hpp"

#include "doctest.h"

using namespace fock;

TEST_CASE("straightening") {
  std::vector<int> nu = {2};
  auto r = straighten(nu, {1, 3});
  REQUIRE(r.has_value());
  CHECK(r->first == Tuple{3, 1});
  CHECK(r->second == -1);
  CHECK_FALSE(straighten(nu, {3, 3}).has_value());
  CHECK(straighten(nu, {3, 1})->second == 1);

  // Blocks straighten independently; entries may match across blocks.
  std::vector<int> nu2 = {2, 2};
  auto r2 = straighten(nu2, {1, 3, 3, 1});
  REQUIRE(r2.has_value());
  CHECK(r2->first == Tuple{3, 1, 3, 1});
  CHECK(r2->second == -1);
  // Three-element block: (1,2,3) -> (3,2,1) is an odd permutation.
  auto r3 = straighten({3}, {1, 2, 3});
  CHECK(r3->first == Tuple{3, 2, 1});
  CHECK(r3->second == -1);
}

TEST_CASE("chevalley action on the vector representation") {
  int e = 2;
  std::vector<int> nu = {1};
  // f_0 u_0 = u_1, f_0 u_1 = 0, f_1 u_1 = u_2, e_0 u_1 = u_0, e_1 u_0 = 0.
  CHECK(apply_f(e, 0, nu, Wedge::basis({0})) == Wedge::basis({1}));
  CHECK(apply_f(e, 0, nu, Wedge::basis({1})).is_zero());
  CHECK(apply_f(e, 1, nu, Wedge::basis({1})) == Wedge::basis({2}));
  CHECK(apply_e(e, 0, nu, Wedge::basis({1})) == Wedge::basis({0}));
  // Residues wrap around: e_1 u_0 = u_{-1} since -1 = 1 mod 2.
  CHECK(apply_e(e, 1, nu, Wedge::basis({0})) == Wedge::basis({-1}));
  CHECK(apply_e(e, 0, nu, Wedge::basis({0})).is_zero());
  CHECK(apply_e(e, 1, nu, Wedge::basis({2})) == Wedge::basis({1}));
}

TEST_CASE("wedge Leibniz rule with signs") {
  int e = 2;
  std::vector<int> nu = {2};
  // f_0 (u_2 ^ u_1) = u_3 ^ u_1 (the slot u_2 moves; u_1 has residue 1).
  CHECK(apply_f(e, 0, nu, Wedge::basis({2, 1})) == Wedge::basis({3, 1}));
  // f_1 (u_2 ^ u_1) = u_2 ^ u_2 = 0.
  CHECK(apply_f(e, 1, nu, Wedge::basis({2, 1})).is_zero());
  // f_0 (u_3 ^ u_0): u_0 -> u_1 gives u_3 ^ u_1; u_3 is untouched.
  CHECK(apply_f(e, 0, nu, Wedge::basis({3, 0})) == Wedge::basis({3, 1}));
  // e_1 (u_2 ^ u_1): u_2 -> u_1 collides, u_1 -> u_0 survives.
  CHECK(apply_e(e, 1, nu, Wedge::basis({2, 1})).is_zero());
  CHECK(apply_e(e, 0, nu, Wedge::basis({2, 1})) == Wedge::basis({2, 0}));
}

TEST_CASE("chevalley relations [e_i, f_j] = delta_ij h_i") {
  for (int e : {2, 3}) {
    std::vector<int> nu = {2, 1};
    std::vector<Tuple> basis = {{3, 1, 2}, {5, 0, -1}, {2, 1, 0}, {4, 2, 3}};
    for (const Tuple& t : basis) {
      auto b = Wedge::basis(t);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) {
          Wedge lhs = apply_e(e, i, nu, apply_f(e, j, nu, b)) -
                      apply_f(e, j, nu, apply_e(e, i, nu, b));
          Wedge rhs = i == j ? apply_h(e, i, nu, b) : Wedge();
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("partition and multipartition enumeration") {
  CHECK(partitions(4, 4).size() == 5);
  CHECK(partitions(4, 2).size() == 3);  // (4), (3,1), (2,2)
  CHECK(multipartitions(2, 2).size() == 5);
  CHECK(multipartitions(1, 5).size() == 7);
  CHECK(multipartitions(3, 1).size() == 3);
  // Row limits cut the list down: P^nu_d.
  std::vector<int> nu = {1, 1};
  CHECK(multipartitions(2, 2, &nu).size() == 3);  // rows <= 1 each
}

TEST_CASE("residues and blocks") {
  // Single partition (2,1) with charge 0, e = 2: boxes (1,1) res 0,
  // (1,2) res 1, (2,1) res 1.
  std::vector<int> nu = {0};
  Multipartition la = {{2, 1}};
  auto alpha = block_content(2, nu, la);
  CHECK(alpha[0] == 1);
  CHECK(alpha[1] == 2);

  // Deformed residues remember the component and the integer content.
  std::vector<int> nu2 = {2, 1};
  Multipartition bi = {{1}, {1}};
  auto d = deformed_block_content(nu2, bi);
  CHECK(d[DeformedResidue{2, 0}] == 1);  // charge 2, box (1,1)
  CHECK(d[DeformedResidue{1, 1}] == 1);  // charge 1, box (1,1)

  // Blocks partition P^l_d: every multipartition has a content, and the
  // total count of boxes equals d.
  for (const auto& mp : multipartitions(2, 3)) {
    int boxes = 0;
    for (const auto& [res, c] : block_content(3, nu2, mp)) boxes += c;
    CHECK(boxes == 3);
  }
}

TEST_CASE("weight dictionary") {
  std::vector<int> nu = {2, 1};
  // Empty multipartition maps to rho_nu.
  Multipartition empty = {{}, {}};
  CHECK(to_weight(nu, empty) == Tuple{2, 1, 1});
  CHECK(to_weight(nu, empty) ==
        lattice::rho_nu(std::vector<int>(nu.begin(), nu.end())));

  Multipartition la = {{3, 1}, {2}};
  Tuple t = to_weight(nu, la);
  CHECK(t == Tuple{5, 2, 3});
  CHECK(aweyl::is_nu_dominant(nu, t));
  auto back = from_weight(nu, t);
  REQUIRE(back.has_value());
  CHECK(*back == la);

  // Round trip over all small multipartitions with row limits.
  std::vector<int> limits(nu.begin(), nu.end());
  for (const auto& mp : multipartitions(2, 3, &limits)) {
    Tuple w = to_weight(nu, mp);
    CHECK(aweyl::is_nu_dominant(nu, w));
    auto b = from_weight(nu, w);
    REQUIRE(b.has_value());
    CHECK(*b == mp);
  }
  // A non-dominant-compatible tuple fails: (1, 5, 1) has row 2 longer.
  CHECK_FALSE(from_weight(nu, {1, 5, 1}).has_value());
}

TEST_CASE("f_i adds boxes of residue i") {
  int e = 2, l = 2;
  std::vector<int> nu = {2, 1};
  std::vector<int> limits(nu.begin(), nu.end());
  for (int d = 0; d <= 3; ++d) {
    for (const auto& mp : multipartitions(l, d, &limits)) {
      for (int i = 0; i < e; ++i) {
        Wedge img = apply_f(e, i, nu, Wedge::basis(to_weight(nu, mp)));
        // Expected: sum over multipartitions obtained by adding one box of
        // residue i (with charges nu), all with coefficient +1.
        Wedge expect;
        for (const auto& big : multipartitions(l, d + 1, &limits)) {
          auto a = block_content(e, nu, big);
          auto b = block_content(e, nu, mp);
          ++b[lattice::mod(i, e)];
          if (a != b) continue;
          // One-box difference in shapes, componentwise.
          bool contains = true;
          for (int r = 0; r < l; ++r) {
            for (size_t row = 0; row < big[r].size(); ++row) {
              int small =
                  row < mp[r].size() ? mp[r][row] : 0;
              if (small > big[r][row]) contains = false;
            }
            if (mp[r].size() > big[r].size()) contains = false;
          }
          if (contains) expect.add(to_weight(nu, big), 1);
        }
        CHECK(img == expect);
      }
    }
  }
}

TEST_CASE("weight map compatibility between fock and lattice") {
  // wt_e(to_weight(la)) differs from wt_e(rho_nu) by the content of la:
  // each box of residue m contributes eps_{m+1} - eps_m.
  int e = 3;
  std::vector<int> nu = {2, 2};
  std::vector<int> limits(nu.begin(), nu.end());
  for (const auto& mp : multipartitions(2, 3, &limits)) {
    lattice::LatticeVector diff =
        lattice::wt_e(e, to_weight(nu, mp)) -
        lattice::wt_e(e, lattice::rho_nu({nu.begin(), nu.end()}));
    lattice::LatticeVector expect;
    for (const auto& [res, c] : block_content(e, nu, mp)) {
      expect.add(lattice::cyc(lattice::mod(res + 1, e)), c);
      expect.add(lattice::cyc(res), -c);
    }
    CHECK(diff == expect);
  }
}

TEST_CASE("level-rank embedding intertwines the doubled operators") {
  std::vector<int> nu = {2, 1};
  std::vector<Tuple> basis = {{3, 1, 2}, {5, 0, -1}, {2, 1, 0},
                              {4, 2, 3}, {6, -2, 1}};
  for (int e : {2, 3})
    for (int k = 0; k < e; ++k)
      for (const Tuple& t : basis) {
        Wedge b = Wedge::basis(t);
        Wedge eb = embed_upsilon(e, k, b);
        for (int r = 0; r < e; ++r) {
          CHECK(embed_upsilon(e, k, apply_f(e, r, nu, b)) ==
                apply_f_doubled(e, k, r, nu, eb));
          CHECK(embed_upsilon(e, k, apply_e(e, r, nu, b)) ==
                apply_e_doubled(e, k, r, nu, eb));
        }
      }
}

TEST_CASE("doubled operators on the vector representation") {
  // On U_e itself: the doubled f_k is the commutator [f_{k+1}, f_k] on
  // U_{e+1}, killing everything whose index is not k mod e+1 in the image.
  int e = 2, k = 1;
  std::vector<int> nu = {1};
  // u_1 has residue 1 = k; image u_3 (= Upsilon(1) for e=2,k=1: 1 -> 1).
  Wedge img = apply_f_doubled(e, k, k, nu, Wedge::basis({1}));
  CHECK(img == Wedge::basis({3}));
  // The skipped residue k+1 = 2 mod 3 is annihilated by every doubled f_r.
  for (int r = 0; r < e; ++r)
    CHECK(apply_f_doubled(e, k, r, nu, Wedge::basis({2})).is_zero());
}
