#pragma once

#include <optional>
#include <vector>

#include "gsnn/group_table.hpp"
#include "gsnn/matrix.hpp"

namespace gsnn {

struct NotIrreducible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A signed permutation: x e_i = sign[i] * e_{perm[i]} (0-indexed).
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;  // entries in {-1, +1}

  int degree() const { return static_cast<int>(perm.size()); }
  bool operator==(const SignedPerm& o) const { return perm == o.perm && sign == o.sign; }

  static SignedPerm identity(int n) {
    SignedPerm p;
    p.perm.resize(n);
    p.sign.assign(n, 1);
    for (int i = 0; i < n; ++i) p.perm[i] = i;
    return p;
  }
};

SignedPerm compose(const SignedPerm& a, const SignedPerm& b);  // a after b
SignedPerm inverse(const SignedPerm& a);

template <class S>
Mat<S> signed_perm_matrix(const SignedPerm& p) {
  Mat<S> m(p.degree(), p.degree());
  for (int i = 0; i < p.degree(); ++i) m(p.perm[i], i) = S(p.sign[i]);
  return m;
}

// Homomorphism from a finite group into the signed permutations of degree n,
// stored densely: images[g] for every element index g.
struct SignedPermRep {
  int degree = 0;
  std::vector<SignedPerm> images;

  // Provenance when built from a subgroup pair; empty otherwise.
  std::optional<Subgroup> source_H;
  std::optional<Subgroup> source_K;

  bool operator==(const SignedPermRep& o) const {
    return degree == o.degree && images == o.images;
  }
};

// Factorization rho(g) = zeta_left(g) * pi(g) = pi(g) * zeta_right(g) into a
// permutation part and diagonal sign parts.
struct RepFactorization {
  std::vector<std::vector<int>> pi;          // permutation images
  std::vector<std::vector<int>> zeta_left;   // sign vector indexed by target axis
  std::vector<std::vector<int>> zeta_right;  // sign vector indexed by source axis
};

struct RecoveredPair {
  Subgroup H;
  Subgroup K;
  std::vector<int> z;  // entries in {-1, +1}
};

SignedPermRep build_rho(const GroupTable& t, const Subgroup& H, const Subgroup& K,
                        const Transversal& T);
bool is_homomorphism(const GroupTable& t, const SignedPermRep& rho);
RepFactorization factor_rho(const SignedPermRep& rho);
bool is_irreducible(const SignedPermRep& rho);
RecoveredPair recover_pair(const GroupTable& t, const SignedPermRep& rho);
int rep_type(const GroupTable& t, const SignedPermRep& rho);  // 1 or 2

// Index into `classes` of the pair class rho belongs to (NotIrreducible if
// reducible; throws if no class matches, which indicates a bug).
int conjugacy_class_id(const GroupTable& t, const SignedPermRep& rho,
                       const std::vector<SubgroupPairClass>& classes);

// diag(z) * rho(.) * diag(z)
SignedPermRep twist(const SignedPermRep& rho, const std::vector<int>& z);
// A^{-1} * rho(.) * A for a signed permutation A
SignedPermRep conjugate_rep(const SignedPermRep& rho, const SignedPerm& A);
SignedPermRep direct_sum(const SignedPermRep& a, const SignedPermRep& b);

// Restriction of rho to the +/- orbits of the coordinate axes, blocks ordered
// by least original axis.
std::vector<SignedPermRep> orbit_decompose(const SignedPermRep& rho);

}  // namespace gsnn
