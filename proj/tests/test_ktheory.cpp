#include "doctest.h"
#include "ktheory.hpp"

#include <functional>

using aweyl::AffinePerm;
using kth::GradedMatrix;
using kth::KBasis;
using kth::MatrixReport;
using laurent::Laurent;
using linalg::Rational;

namespace {

AffinePerm word(int n, std::vector<int> letters) {
  AffinePerm w = AffinePerm::identity(n);
  for (int r : letters) w = w * AffinePerm::simple(n, r);
  return w;
}

// All elements of the non-extended affine Weyl group up to a given length.
std::vector<AffinePerm> ball(int n, int maxlen) {
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

// Compositions of n into e nonnegative parts.
std::vector<std::vector<int>> compositions(int n, int e) {
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

}  // namespace

TEST_CASE("basis enumeration with and without the dominance filter") {
  AffinePerm s1 = AffinePerm::simple(2, 1);
  KBasis plain = kth::k_basis(2, {1, 1}, {}, s1);
  REQUIRE(plain.elems.size() == 2);
  CHECK(plain.elems[0] == AffinePerm::identity(2));
  CHECK(plain.elems[1] == s1);

  // nu = (2): only s_1 maps 1_mu = (1,2) to the strictly decreasing (2,1).
  KBasis filtered = kth::k_basis(2, {1, 1}, {2}, s1);
  REQUIRE(filtered.elems.size() == 1);
  CHECK(filtered.elems[0] == s1);

  KBasis trivial = kth::k_basis(2, {1, 1}, {}, AffinePerm::identity(2));
  REQUIRE(trivial.elems.size() == 1);
  CHECK(trivial.elems[0] == AffinePerm::identity(2));
}

TEST_CASE("collapse matrix of F on the smallest instance") {
  // mu = (1,1), mu' = (0,2): both id and s_1 collapse onto id.
  AffinePerm s1 = AffinePerm::simple(2, 1);
  MatrixReport f = kth::matrix_F(2, {1, 1}, {0, 2}, s1);
  REQUIRE(f.ok());
  REQUIRE(f.m.row.elems.size() == 1);
  REQUIRE(f.m.col.elems.size() == 2);
  CHECK(f.m.at(0, 0) == Laurent::monomial(0));
  CHECK(f.m.at(0, 1) == Laurent::monomial(0));
}

TEST_CASE("graded split matrix of E on the smallest instance") {
  AffinePerm s1 = AffinePerm::simple(2, 1);
  MatrixReport e = kth::matrix_E_graded(2, {1, 1}, {0, 2}, s1);
  REQUIRE(e.ok());
  REQUIRE(e.m.row.elems.size() == 2);
  REQUIRE(e.m.col.elems.size() == 1);
  // Column of id is (id) + q (s_1).
  CHECK(e.m.at(0, 0) == Laurent::monomial(0));
  CHECK(e.m.at(1, 0) == Laurent::monomial(1));
  // Specialized at q = 1 the column sums to |W_{mu'} / W_mu| = 2.
  Rational sum = 0;
  for (const auto& [ij, c] : kth::at_q_one(e.m)) sum += c;
  CHECK(sum == 2);
}

TEST_CASE("shift solving reproduces the balanced composition identity") {
  AffinePerm s1 = AffinePerm::simple(2, 1);
  MatrixReport f = kth::matrix_F(2, {1, 1}, {0, 2}, s1);
  MatrixReport e = kth::matrix_E_graded(2, {1, 1}, {0, 2}, s1);

  // Ungraded composition: 2 Id.
  auto fe = kth::at_q_one(kth::mat_mul(f.m, e.m));
  REQUIRE(fe.size() == 1);
  CHECK(fe.at({0, 0}) == 2);

  kth::ShiftSolution sol = kth::solve_shifts(f, e);
  REQUIRE(sol.ok);
  CHECK(sol.t == 2);
  CHECK(sol.c.at(AffinePerm::identity(2)) == -1);
  CHECK(sol.c.at(s1) == 0);
  CHECK(kth::composition_identity_holds(f, e, sol));
}

TEST_CASE("degenerate quotient: t = 1 forces zero shifts") {
  // N = 2, e = 3, mu = (1,0,1) -> mu' = (0,1,1): both stabilizers are
  // trivial, so F is a bijection and the single summand has shift zero.
  AffinePerm v = word(2, {1, 0});
  MatrixReport f = kth::matrix_F(3, {1, 0, 1}, {0, 1, 1}, v);
  MatrixReport e = kth::matrix_E_graded(3, {1, 0, 1}, {0, 1, 1}, v);
  kth::ShiftSolution sol = kth::solve_shifts(f, e);
  REQUIRE(sol.ok);
  CHECK(sol.t == 1);
  for (const auto& [w, c] : sol.c) CHECK(c == 0);
  CHECK(kth::composition_identity_holds(f, e, sol));
}

TEST_CASE("mirror case: shifts on the split target") {
  // W_{mu'} inside W_mu: mu = (2,0), mu' = (1,1); the split goes from the
  // mu block and the collapse returns, with t = mu_1 = 2 summands.
  AffinePerm v = word(2, {0, 1});  // maximal in its W_mu-coset
  REQUIRE(aweyl::is_max_coset_rep(
      v, aweyl::parabolic_generators(2, aweyl::one_mu({2, 0}))));
  MatrixReport split = kth::split_matrix(2, {2, 0}, {1, 1}, v);
  MatrixReport collapse = kth::collapse_matrix(2, {1, 1}, {2, 0}, v);
  REQUIRE(split.ok());
  REQUIRE(collapse.ok());
  REQUIRE(split.m.row.elems.size() == 4);
  REQUIRE(split.m.col.elems.size() == 2);
  kth::ShiftSolution sol = kth::solve_shifts(collapse, split);
  REQUIRE(sol.ok);
  CHECK(sol.t == 2);
  CHECK(kth::composition_identity_holds(collapse, split, sol));
}

TEST_CASE("composition identity across the small grid") {
  for (int n : {2, 3}) {
    std::vector<AffinePerm> vs = ball(n, n == 2 ? 5 : 4);
    for (int e : {2, 3}) {
      for (const std::vector<int>& mu : compositions(n, e)) {
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
          int tested = 0;
          for (const AffinePerm& v : bounds) {
            MatrixReport f = kth::matrix_F(e, mu, mup, v);
            if (f.m.col.elems.size() > 12) continue;
            MatrixReport eg = kth::matrix_E_graded(e, mu, mup, v);
            REQUIRE(f.ok());
            REQUIRE(eg.ok());
            // Composition before shifting is (1 + q + ... + q^{mu_{k+1}}) Id,
            // hence (mu_{k+1} + 1) Id at q = 1.
            GradedMatrix fe = kth::mat_mul(f.m, eg.m);
            Laurent unbalanced;
            for (int r = 0; r <= mu[k]; ++r) unbalanced += Laurent::monomial(r);
            CHECK(kth::is_scalar_identity(fe, unbalanced));
            auto ungraded = kth::at_q_one(fe);
            for (size_t d = 0; d < fe.row.elems.size(); ++d)
              CHECK(ungraded.at({d, d}) == mu[k] + 1);
            kth::ShiftSolution sol = kth::solve_shifts(f, eg);
            REQUIRE(sol.ok);
            CHECK(sol.t == mu[k] + 1);
            CHECK(kth::composition_identity_holds(f, eg, sol));
            ++tested;
          }
          CHECK(tested >= 2);
        }
      }
    }
  }
}

TEST_CASE("duality bookkeeping on the trivial instance") {
  kth::DualityReport rep = kth::duality_bookkeeping(
      2, {1, 1}, {0, 2}, {1, 1}, AffinePerm::identity(2));
  CHECK(rep.precondition_ok);
  CHECK(rep.basis_size == 1);
  CHECK(rep.support_size == 1);
  CHECK(rep.ok());
}

TEST_CASE("duality bookkeeping matches the index-set inclusions") {
  // e = 2, l = 2, N = 3, mu = (1,2) -> mu' = (0,3), nu = (2,1).
  int e = 2, n = 3;
  std::vector<int> mu = {1, 2}, mup = {0, 3}, nu = {2, 1};
  std::vector<long long> pt = aweyl::one_mu(mu);
  std::vector<int> mu_gens = aweyl::parabolic_generators(e, pt);

  int tested = 0;
  for (const AffinePerm& v :
       aweyl::bruhat_interval_below(word(n, {0, 2, 1, 0, 2}))) {
    if (!aweyl::is_min_coset_rep(v, mu_gens) ||
        !aweyl::is_nu_dominant(nu, aweyl::act_negative(v, e, pt)))
      continue;
    kth::DualityReport rep = kth::duality_bookkeeping(e, mu, mup, nu, v);
    CHECK(rep.precondition_ok);
    CHECK(rep.support_is_subbasis);
    CHECK(rep.inverse_bijection);
    CHECK(rep.inclusion_pattern);
    CHECK(rep.support_size <= rep.basis_size);
    ++tested;
  }
  CHECK(tested >= 3);
}

TEST_CASE("precondition failure is reported, not asserted") {
  // id(1_mu) = (1,2,2) is not (2,1)-dominant, so v = id fails.
  kth::DualityReport rep = kth::duality_bookkeeping(
      2, {1, 2}, {0, 3}, {2, 1}, AffinePerm::identity(3));
  CHECK(!rep.precondition_ok);
  CHECK(!rep.ok());
}

TEST_CASE("split columns carry the relative coset lengths") {
  // mu = (1,2) -> mu' = (0,3) at N = 3: J^mu_{mu'} has lengths {0, 1, 2}.
  AffinePerm v = aweyl::max_coset_rep(
      word(3, {1, 2, 1}),
      aweyl::parabolic_generators(2, aweyl::one_mu({0, 3})));
  MatrixReport eg = kth::matrix_E_graded(2, {1, 2}, {0, 3}, v);
  REQUIRE(eg.ok());
  for (size_t j = 0; j < eg.m.col.elems.size(); ++j) {
    std::multiset<int> degs;
    for (const auto& [ij, c] : eg.m.entries)
      if (ij.second == j) {
        REQUIRE(c.coeffs().size() == 1);
        degs.insert(c.coeffs().begin()->first);
      }
    CHECK(degs == std::multiset<int>({0, 1, 2}));
  }
}

TEST_CASE("truncation-change identity at positive level") {
  // e = 2, l = 2, N = 3, mu = (1,2) -> mu' = (0,3), nu = (2,1); bounds v
  // range over J^nu_{mu'} w_{mu'}.
  int e = 2, n = 3;
  std::vector<int> mu = {1, 2}, mup = {0, 3}, nu = {2, 1};
  auto mup_gens = aweyl::parabolic_generators(e, aweyl::one_mu(mup));
  AffinePerm w_mup = aweyl::longest_element(n, mup_gens);

  int tested = 0;
  std::set<AffinePerm> seen;
  for (const AffinePerm& u :
       aweyl::bruhat_interval_below(word(n, {1, 0, 2, 1, 0, 2}))) {
    AffinePerm vmin = aweyl::min_coset_rep(u, mup_gens);
    if (!aweyl::is_nu_dominant(
            nu, aweyl::act_negative(vmin, e, aweyl::one_mu(mup))))
      continue;
    AffinePerm v = vmin * w_mup;
    if (!seen.insert(v).second) continue;
    CHECK(kth::truncation_change_holds(e, mu, mup, nu, v));
    ++tested;
  }
  CHECK(tested >= 2);
}

TEST_CASE("infeasibility certificates instead of silent failure") {
  AffinePerm s1 = AffinePerm::simple(2, 1);
  MatrixReport f = kth::matrix_F(2, {1, 1}, {0, 2}, s1);
  MatrixReport e = kth::matrix_E_graded(2, {1, 1}, {0, 2}, s1);

  // Mismatched bases (different bound) are rejected with an explanation.
  MatrixReport e_other =
      kth::matrix_E_graded(2, {1, 1}, {0, 2}, word(2, {0, 1}));
  kth::ShiftSolution bad = kth::solve_shifts(f, e_other);
  CHECK(!bad.ok);
  CHECK(!bad.failure.empty());

  // A doctored split entry with a two-term coefficient is rejected.
  MatrixReport doctored = e;
  doctored.m.entries[{0, 0}] += Laurent::monomial(3);
  kth::ShiftSolution bad2 = kth::solve_shifts(f, doctored);
  CHECK(!bad2.ok);
  CHECK(!bad2.failure.empty());
}
