#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsnn/group.hpp"
#include "gsnn/linalg.hpp"

using namespace gsnn;

namespace {

// Independent rank oracle: double-precision row elimination with partial
// pivoting, kept free of the exact elimination path it checks.
int rank_oracle(const MatQ& M) {
  int rows = M.rows(), cols = M.cols();
  std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[i][j] = M(i, j).get_d();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    for (int i = rank + 1; i < rows; ++i)
      if (std::fabs(a[i][c]) > std::fabs(a[p][c])) p = i;
    if (std::fabs(a[p][c]) < 1e-9) continue;
    std::swap(a[rank], a[p]);
    for (int i = rank + 1; i < rows; ++i) {
      double f = a[i][c] / a[rank][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("projector of subgroups") {
  auto C6 = cyclic_perm_group<Rat>(6);

  SUBCASE("trivial subgroup gives the identity") {
    CHECK(projector(C6, Subgroup{{0}}) == MatQ::identity(6));
  }
  SUBCASE("full cyclic group averages to the all-ones matrix / 6") {
    MatQ P = projector(C6, C6.whole());
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(P(i, j) == ratio(1, 6));
  }
  SUBCASE("half-turn subgroup mixes antipodal coordinates") {
    Subgroup r3 = close_subgroup(C6.table, {C6.table.mul(C6.generators[0], C6.table.mul(C6.generators[0], C6.generators[0]))});
    CHECK(r3.order() == 2);
    MatQ P = projector(C6, r3);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        Rat expect = (i == j || (j + 3) % 6 == i || (i + 3) % 6 == j) ? ratio(1, 2) : Rat(0);
        CHECK(P(i, j) == expect);
      }
  }
  SUBCASE("projectors are idempotent, symmetric, and absorb their members") {
    for (const Subgroup& A : enumerate_subgroups(C6.table)) {
      MatQ P = projector(C6, A);
      CHECK(P * P == P);
      CHECK(P.transpose() == P);
      for (int a : A.members) CHECK(C6.elems[a] * P == P);
    }
  }
  SUBCASE("nested subgroups: P_H P_K = P_H") {
    auto subs = enumerate_subgroups(C6.table);
    for (const Subgroup& H : subs)
      for (const Subgroup& K : subs) {
        if (!subgroup_leq(K, H)) continue;
        CHECK(projector(C6, H) * projector(C6, K) == projector(C6, H));
      }
  }
}

TEST_CASE("range_basis") {
  SUBCASE("zero matrix has empty range") {
    CHECK(range_basis(MatQ::zero(4, 4)).dim() == 0);
  }
  SUBCASE("identity has the full range") {
    auto B = range_basis(MatQ::identity(3));
    CHECK(B.dim() == 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(B.vectors[i][j] == Rat(i == j ? 1 : 0));
  }
  SUBCASE("difference of nested projectors, rank checked against an oracle") {
    auto C6 = cyclic_perm_group<Rat>(6);
    auto subs = enumerate_subgroups(C6.table);
    Subgroup r3 = subs[1];
    REQUIRE(r3.order() == 2);
    MatQ M = projector(C6, r3) - projector(C6, C6.whole());
    CHECK(rank_oracle(M) == 2);
    CHECK(range_basis(M).dim() == rank_oracle(M));
  }
}

TEST_CASE("subspace_leq") {
  SUBCASE("the empty subspace is contained in anything") {
    SubspaceBasis<Rat> empty{2, {}};
    SubspaceBasis<Rat> e1{2, {{Rat(1), Rat(0)}}};
    CHECK(subspace_leq(empty, e1));
    CHECK(subspace_leq(empty, empty));
  }
  SUBCASE("span{e1} vs span{e1+e2}") {
    SubspaceBasis<Rat> a{2, {{Rat(1), Rat(0)}}};
    SubspaceBasis<Rat> b{2, {{Rat(1), Rat(1)}}};
    CHECK_FALSE(subspace_leq(a, b));
  }
  SUBCASE("contained in the full space") {
    auto C6 = rotation2d_group(6);
    MatD Pe = projector(C6, Subgroup{{0}});
    Subgroup r3{{0, 3}};
    CHECK(is_subgroup(C6.table, r3));
    MatD M = Pe - projector(C6, r3);
    auto V = range_basis(M, 1e-9);
    auto full = range_basis(MatD::identity(2), 1e-9);
    CHECK(subspace_leq(V, full, 1e-9));
  }
  SUBCASE("dimension mismatch throws") {
    SubspaceBasis<Rat> a{2, {{Rat(1), Rat(0)}}};
    SubspaceBasis<Rat> b{3, {{Rat(1), Rat(0), Rat(0)}}};
    CHECK_THROWS_AS(subspace_leq(a, b), DimensionMismatch);
  }
}

TEST_CASE("projector_onto") {
  SUBCASE("empty basis gives the zero matrix") {
    CHECK(projector_onto(SubspaceBasis<Rat>{3, {}}) == MatQ::zero(3, 3));
  }
  SUBCASE("full standard basis gives the identity") {
    auto B = range_basis(MatQ::identity(3));
    CHECK(projector_onto(B) == MatQ::identity(3));
  }
  SUBCASE("swap example: ran(P_e - P_C2) projects onto the antisymmetric line") {
    std::vector<int> swap01{1, 0};
    auto C2 = close_generators<Rat>({perm_matrix<Rat>(swap01)}, 2);
    MatQ M = projector(C2, Subgroup{{0}}) - projector(C2, C2.whole());
    MatQ P = projector_onto(range_basis(M));
    MatQ expect(2, 2, {ratio(1, 2), ratio(-1, 2), ratio(-1, 2), ratio(1, 2)});
    CHECK(P == expect);
  }
  SUBCASE("range_basis after projector_onto recovers the subspace") {
    auto D6 = dihedral_perm_group<Rat>(6);
    for (const Subgroup& A : enumerate_subgroups(D6.table)) {
      auto V = range_basis(projector(D6, A));
      auto back = range_basis(projector_onto(V));
      CHECK(subspace_eq(V, back));
    }
  }
}

TEST_CASE("sign-twisted fixed space equals the projector difference") {
  // For |H:K| = 2 and h outside K, the projector onto
  // {v : Kv = v, hv = -v} equals P_K - P_H.
  auto D6 = dihedral_perm_group<Rat>(6);
  auto subs = enumerate_subgroups(D6.table);
  int checked = 0;
  for (const Subgroup& H : subs) {
    for (const Subgroup& K : index2_subgroups(D6.table, H, subs)) {
      for (int h : H.members) {
        if (K.contains(h)) continue;
        // stack (k - I) for k in K and (h + I); null space = the twisted fixed space
        std::vector<std::vector<Rat>> stacked;
        for (int k : K.members) {
          MatQ rowblock = D6.elems[k] - MatQ::identity(6);
          for (int r = 0; r < 6; ++r) stacked.push_back(rowblock.row(r));
        }
        MatQ hp = D6.elems[h] + MatQ::identity(6);
        for (int r = 0; r < 6; ++r) stacked.push_back(hp.row(r));
        MatQ A(static_cast<int>(stacked.size()), 6);
        for (int r = 0; r < static_cast<int>(stacked.size()); ++r) A.set_row(r, stacked[r]);
        MatQ tw = projector_onto(null_space(A));
        CHECK(tw == projector(D6, K) - projector(D6, H));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}
