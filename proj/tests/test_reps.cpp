#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gsnn/group.hpp"
#include "gsnn/reps.hpp"

using namespace gsnn;

namespace {

SignedPerm random_signed_perm(int n, std::mt19937_64& rng) {
  SignedPerm p = SignedPerm::identity(n);
  std::shuffle(p.perm.begin(), p.perm.end(), rng);
  for (int i = 0; i < n; ++i) p.sign[i] = (rng() & 1) ? 1 : -1;
  return p;
}

// Independent irreducibility oracle: breadth-first scan of the +/- orbit of
// every axis, with no shortcut through axis 0.
bool irreducible_oracle(const SignedPermRep& rho) {
  for (int i = 0; i < rho.degree; ++i) {
    std::vector<bool> hit(rho.degree, false);
    for (const SignedPerm& img : rho.images) hit[img.perm[i]] = true;
    for (bool b : hit)
      if (!b) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_rho basics") {
  SUBCASE("H = K = G gives the trivial degree-1 rep") {
    auto C4 = cyclic_perm_group<Rat>(4);
    auto T = transversal(C4.table, C4.whole(), C4.whole());
    auto rho = build_rho(C4.table, C4.whole(), C4.whole(), T);
    CHECK(rho.degree == 1);
    for (const auto& img : rho.images) {
      CHECK(img.perm == std::vector<int>{0});
      CHECK(img.sign == std::vector<int>{1});
    }
  }
  SUBCASE("the swap group with K = {e} gives the sign rep") {
    auto C2 = close_generators<Rat>({perm_matrix<Rat>({1, 0})}, 2);
    Subgroup e{{0}};
    auto T = transversal(C2.table, C2.whole(), e);
    auto rho = build_rho(C2.table, C2.whole(), e, T);
    CHECK(rho.degree == 1);
    CHECK(rho.images[1].sign == std::vector<int>{-1});
  }
  SUBCASE("the regular rep of C6 is an honest permutation rep of degree 6") {
    auto C6 = cyclic_perm_group<Rat>(6);
    Subgroup e{{0}};
    auto T = transversal(C6.table, e, e);
    auto rho = build_rho(C6.table, e, e, T);
    CHECK(rho.degree == 6);
    for (const auto& img : rho.images)
      for (int s : img.sign) CHECK(s == 1);
    CHECK(is_irreducible(rho));
  }
  SUBCASE("every pair class yields an irreducible homomorphism") {
    auto D6 = dihedral_perm_group<Rat>(6);
    for (const auto& cls : pair_classes(D6.table)) {
      auto T = transversal(D6.table, cls.H, cls.K);
      auto rho = build_rho(D6.table, cls.H, cls.K, T);
      CHECK(is_homomorphism(D6.table, rho));
      CHECK(is_irreducible(rho));
      CHECK(irreducible_oracle(rho));
    }
  }
}

TEST_CASE("factor_rho") {
  auto C6 = cyclic_perm_group<Rat>(6);
  auto subs = enumerate_subgroups(C6.table);
  Subgroup e{{0}}, r3 = subs[1];

  SUBCASE("trivial rep factors trivially") {
    auto T = transversal(C6.table, C6.whole(), C6.whole());
    auto f = factor_rho(build_rho(C6.table, C6.whole(), C6.whole(), T));
    for (int g = 0; g < 6; ++g) {
      CHECK(f.pi[g] == std::vector<int>{0});
      CHECK(f.zeta_left[g] == std::vector<int>{1});
    }
  }
  SUBCASE("factorization recomposes and the left/right factors agree with the images") {
    auto D6 = dihedral_perm_group<Rat>(6);
    for (const auto& cls : pair_classes(D6.table)) {
      auto rho = build_rho(D6.table, cls.H, cls.K, transversal(D6.table, cls.H, cls.K));
      auto f = factor_rho(rho);
      for (int g = 0; g < D6.order(); ++g) {
        for (int i = 0; i < rho.degree; ++i) {
          CHECK(rho.images[g].perm[i] == f.pi[g][i]);
          CHECK(rho.images[g].sign[i] == f.zeta_right[g][i]);
          CHECK(rho.images[g].sign[i] == f.zeta_left[g][f.pi[g][i]]);
        }
      }
    }
  }
  SUBCASE("the permutation part depends only on H") {
    auto rho_hh = build_rho(C6.table, r3, r3, transversal(C6.table, r3, r3));
    auto rho_he = build_rho(C6.table, r3, e, transversal(C6.table, r3, e));
    CHECK(factor_rho(rho_hh).pi == factor_rho(rho_he).pi);
  }
}

TEST_CASE("is_irreducible") {
  auto C6 = cyclic_perm_group<Rat>(6);
  Subgroup e{{0}};
  auto rho = build_rho(C6.table, e, e, transversal(C6.table, e, e));

  SUBCASE("degree-1 reps are irreducible") {
    auto t = build_rho(C6.table, C6.whole(), C6.whole(), transversal(C6.table, C6.whole(), C6.whole()));
    CHECK(is_irreducible(t));
  }
  SUBCASE("direct sums are reducible") {
    CHECK_FALSE(is_irreducible(direct_sum(rho, rho)));
  }
}

TEST_CASE("recover_pair") {
  auto D6 = dihedral_perm_group<Rat>(6);
  std::mt19937_64 rng(7);

  SUBCASE("round-trips build_rho with the all-ones twist") {
    for (const auto& cls : pair_classes(D6.table)) {
      auto rho = build_rho(D6.table, cls.H, cls.K, transversal(D6.table, cls.H, cls.K));
      auto rec = recover_pair(D6.table, rho);
      CHECK(rec.H == cls.H);
      CHECK(rec.K == cls.K);
      CHECK(rec.z == std::vector<int>(rho.degree, 1));
      CHECK(D6.order() % (rec.H.order() * rho.degree) == 0);
      CHECK(rec.H.order() / rec.K.order() <= 2);
    }
  }
  SUBCASE("type-2 reps force the all-ones twist") {
    for (const auto& cls : pair_classes(D6.table)) {
      if (cls.index != 2) continue;
      auto rho = build_rho(D6.table, cls.H, cls.K, transversal(D6.table, cls.H, cls.K));
      std::vector<int> z(rho.degree);
      for (int& v : z) v = (rng() & 1) ? 1 : -1;
      auto rec = recover_pair(D6.table, twist(rho, z));
      CHECK(rec.z == std::vector<int>(rho.degree, 1));
      CHECK(rec.H == cls.H);
      CHECK(rec.K == cls.K);
    }
  }
  SUBCASE("twisted type-1 reps reconstruct through the recovered z") {
    for (const auto& cls : pair_classes(D6.table)) {
      if (cls.index != 1) continue;
      auto rho = build_rho(D6.table, cls.H, cls.K, transversal(D6.table, cls.H, cls.K));
      std::vector<int> z(rho.degree);
      for (int& v : z) v = (rng() & 1) ? 1 : -1;
      auto twisted = twist(rho, z);
      auto rec = recover_pair(D6.table, twisted);
      CHECK(rec.H == cls.H);
      CHECK(rec.K == cls.K);
      CHECK(twist(twisted, rec.z) == rho);  // diag(z) rho diag(z) recovers the untwisted rep
    }
  }
  SUBCASE("conjugated copies land in the same class") {
    auto pcs = pair_classes(D6.table);
    for (const auto& cls : pcs) {
      auto rho = build_rho(D6.table, cls.H, cls.K, transversal(D6.table, cls.H, cls.K));
      int expected = conjugacy_class_id(D6.table, rho, pcs);
      for (int trial = 0; trial < 3; ++trial) {
        auto A = random_signed_perm(rho.degree, rng);
        CHECK(conjugacy_class_id(D6.table, conjugate_rep(rho, A), pcs) == expected);
      }
    }
  }
  SUBCASE("distinct pairs give distinct class ids") {
    auto pcs = pair_classes(D6.table);
    std::set<int> ids;
    for (const auto& cls : pcs) {
      auto rho = build_rho(D6.table, cls.H, cls.K, transversal(D6.table, cls.H, cls.K));
      ids.insert(conjugacy_class_id(D6.table, rho, pcs));
    }
    CHECK(ids.size() == pcs.size());
  }
  SUBCASE("reducible reps are rejected") {
    auto C6 = cyclic_perm_group<Rat>(6);
    Subgroup e{{0}};
    auto rho = build_rho(C6.table, e, e, transversal(C6.table, e, e));
    CHECK_THROWS_AS(recover_pair(C6.table, direct_sum(rho, rho)), NotIrreducible);
  }
}

TEST_CASE("rep_type") {
  auto C6 = cyclic_perm_group<Rat>(6);
  auto subs = enumerate_subgroups(C6.table);
  Subgroup e{{0}}, c6 = subs[3], c3 = subs[2];
  REQUIRE(c6.order() == 6);
  REQUIRE(c3.order() == 3);

  CHECK(rep_type(C6.table, build_rho(C6.table, c6, c6, transversal(C6.table, c6, c6))) == 1);
  CHECK(rep_type(C6.table, build_rho(C6.table, c6, c3, transversal(C6.table, c6, c3))) == 2);
  auto C2 = close_generators<Rat>({perm_matrix<Rat>({1, 0})}, 2);
  CHECK(rep_type(C2.table, build_rho(C2.table, C2.whole(), Subgroup{{0}},
                                     transversal(C2.table, C2.whole(), Subgroup{{0}}))) == 2);
}

TEST_CASE("orbit_decompose") {
  auto C6 = cyclic_perm_group<Rat>(6);
  auto subs = enumerate_subgroups(C6.table);
  Subgroup r3 = subs[1], c3 = subs[2];
  auto rho1 = build_rho(C6.table, r3, r3, transversal(C6.table, r3, r3));
  auto rho2 = build_rho(C6.table, c3, c3, transversal(C6.table, c3, c3));

  SUBCASE("an irreducible rep is its own single block") {
    auto blocks = orbit_decompose(rho1);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == rho1);
  }
  SUBCASE("an explicit direct sum splits back into its blocks") {
    auto blocks = orbit_decompose(direct_sum(rho1, rho2));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == rho1);
    CHECK(blocks[1] == rho2);
  }
  SUBCASE("conjugated direct sums split into blocks of the original classes") {
    auto pcs = pair_classes(C6.table);
    std::mt19937_64 rng(11);
    auto sum = direct_sum(rho1, rho2);
    int id1 = conjugacy_class_id(C6.table, rho1, pcs);
    int id2 = conjugacy_class_id(C6.table, rho2, pcs);
    for (int trial = 0; trial < 5; ++trial) {
      auto A = random_signed_perm(sum.degree, rng);
      auto blocks = orbit_decompose(conjugate_rep(sum, A));
      REQUIRE(blocks.size() == 2);
      std::multiset<int> got, want{id1, id2};
      for (const auto& b : blocks) {
        CHECK(is_homomorphism(C6.table, b));
        got.insert(conjugacy_class_id(C6.table, b, pcs));
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("class count equals pair class count across small groups") {
  for (int n : {3, 4, 6}) {
    auto G = dihedral_perm_group<Rat>(n);
    auto pcs = pair_classes(G.table);
    std::set<int> ids;
    for (const auto& cls : pcs) {
      auto rho = build_rho(G.table, cls.H, cls.K, transversal(G.table, cls.H, cls.K));
      ids.insert(conjugacy_class_id(G.table, rho, pcs));
    }
    CHECK(ids.size() == pcs.size());
  }
}
