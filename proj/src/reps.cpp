#include "gsnn/reps.hpp"

#include <algorithm>
#include <numeric>

namespace gsnn {

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  const int n = a.degree();
  SignedPerm c;
  c.perm.resize(n);
  c.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    c.perm[i] = a.perm[b.perm[i]];
    c.sign[i] = b.sign[i] * a.sign[b.perm[i]];
  }
  return c;
}

SignedPerm inverse(const SignedPerm& a) {
  const int n = a.degree();
  SignedPerm r;
  r.perm.resize(n);
  r.sign.resize(n);
  for (int i = 0; i < n; ++i) {
    r.perm[a.perm[i]] = i;
    r.sign[a.perm[i]] = a.sign[i];
  }
  return r;
}

SignedPermRep build_rho(const GroupTable& t, const Subgroup& H, const Subgroup& K,
                        const Transversal& T) {
  const int n = static_cast<int>(T.reps.size());
  SignedPermRep rho;
  rho.degree = n;
  rho.source_H = H;
  rho.source_K = K;
  rho.images.resize(t.order());

  for (int g = 0; g < t.order(); ++g) {
    SignedPerm& img = rho.images[g];
    img.perm.assign(n, -1);
    img.sign.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      int target = t.mul(g, T.reps[i]);  // g * g_i, lands in exactly one coset of K
      int j = -1, sign = 0;
      for (int c = 0; c < n && j < 0; ++c) {
        if (K.contains(t.mul(t.invof(T.reps[c]), target))) {
          j = c;
          sign = 1;
        } else if (T.h_flip &&
                   K.contains(t.mul(t.invof(t.mul(T.reps[c], *T.h_flip)), target))) {
          j = c;
          sign = -1;
        }
      }
      if (j < 0) throw InternalInconsistency("coset lookup failed in build_rho");
      img.perm[i] = j;
      img.sign[i] = sign;
    }
  }
  if (!is_homomorphism(t, rho)) throw InternalInconsistency("build_rho output is not a homomorphism");
  return rho;
}

bool is_homomorphism(const GroupTable& t, const SignedPermRep& rho) {
  if (static_cast<int>(rho.images.size()) != t.order()) return false;
  if (!(rho.images[0] == SignedPerm::identity(rho.degree))) return false;
  for (int a = 0; a < t.order(); ++a)
    for (int b = 0; b < t.order(); ++b)
      if (!(rho.images[t.mul(a, b)] == compose(rho.images[a], rho.images[b]))) return false;
  return true;
}

RepFactorization factor_rho(const SignedPermRep& rho) {
  RepFactorization f;
  const int n = rho.degree;
  f.pi.reserve(rho.images.size());
  f.zeta_left.reserve(rho.images.size());
  f.zeta_right.reserve(rho.images.size());
  for (const SignedPerm& img : rho.images) {
    std::vector<int> zl(n, 1);
    for (int i = 0; i < n; ++i) zl[img.perm[i]] = img.sign[i];
    f.pi.push_back(img.perm);
    f.zeta_left.push_back(std::move(zl));
    f.zeta_right.push_back(img.sign);
  }
  return f;
}

bool is_irreducible(const SignedPermRep& rho) {
  const int n = rho.degree;
  if (n == 0) return false;
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (const SignedPerm& img : rho.images) reached[img.perm[0]] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

RecoveredPair recover_pair(const GroupTable& t, const SignedPermRep& rho) {
  if (!is_irreducible(rho)) throw NotIrreducible("recover_pair requires an irreducible rep");
  RecoveredPair r;
  std::vector<int> h, k;
  r.z.assign(rho.degree, -1);
  for (int g = 0; g < t.order(); ++g) {
    const SignedPerm& img = rho.images[g];
    if (img.perm[0] == 0) {
      h.push_back(g);
      if (img.sign[0] == 1) k.push_back(g);
    }
    if (img.sign[0] == 1) r.z[img.perm[0]] = 1;
  }
  r.H = Subgroup{std::move(h)};
  r.K = Subgroup{std::move(k)};
  return r;
}

int rep_type(const GroupTable& t, const SignedPermRep& rho) {
  RecoveredPair p = recover_pair(t, rho);
  return p.H.order() / p.K.order();
}

int conjugacy_class_id(const GroupTable& t, const SignedPermRep& rho,
                       const std::vector<SubgroupPairClass>& classes) {
  RecoveredPair p = recover_pair(t, rho);
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    for (const auto& member : classes[c].class_members)
      if (member.first == p.H && member.second == p.K) return c;
  }
  throw std::runtime_error("recovered pair not found in any class");
}

SignedPermRep twist(const SignedPermRep& rho, const std::vector<int>& z) {
  SignedPermRep out = rho;
  for (SignedPerm& img : out.images)
    for (int i = 0; i < rho.degree; ++i) img.sign[i] *= z[i] * z[img.perm[i]];
  out.source_H.reset();
  out.source_K.reset();
  return out;
}

SignedPermRep conjugate_rep(const SignedPermRep& rho, const SignedPerm& A) {
  SignedPermRep out;
  out.degree = rho.degree;
  SignedPerm Ainv = inverse(A);
  out.images.reserve(rho.images.size());
  for (const SignedPerm& img : rho.images) out.images.push_back(compose(Ainv, compose(img, A)));
  return out;
}

SignedPermRep direct_sum(const SignedPermRep& a, const SignedPermRep& b) {
  SignedPermRep out;
  out.degree = a.degree + b.degree;
  out.images.resize(a.images.size());
  for (size_t g = 0; g < a.images.size(); ++g) {
    SignedPerm& img = out.images[g];
    img.perm.resize(out.degree);
    img.sign.resize(out.degree);
    for (int i = 0; i < a.degree; ++i) {
      img.perm[i] = a.images[g].perm[i];
      img.sign[i] = a.images[g].sign[i];
    }
    for (int i = 0; i < b.degree; ++i) {
      img.perm[a.degree + i] = a.degree + b.images[g].perm[i];
      img.sign[a.degree + i] = b.images[g].sign[i];
    }
  }
  return out;
}

std::vector<SignedPermRep> orbit_decompose(const SignedPermRep& rho) {
  const int n = rho.degree;
  std::vector<int> owner(n, -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < n; ++i) {
    if (owner[i] >= 0) continue;
    std::vector<int> orbit{i};
    owner[i] = static_cast<int>(orbits.size());
    for (size_t head = 0; head < orbit.size(); ++head) {
      for (const SignedPerm& img : rho.images) {
        int j = img.perm[orbit[head]];
        if (owner[j] < 0) {
          owner[j] = owner[i];
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<SignedPermRep> blocks;
  for (const auto& orbit : orbits) {
    std::vector<int> local(n, -1);
    for (size_t k = 0; k < orbit.size(); ++k) local[orbit[k]] = static_cast<int>(k);
    SignedPermRep block;
    block.degree = static_cast<int>(orbit.size());
    block.images.resize(rho.images.size());
    for (size_t g = 0; g < rho.images.size(); ++g) {
      SignedPerm& img = block.images[g];
      img.perm.resize(orbit.size());
      img.sign.resize(orbit.size());
      for (size_t k = 0; k < orbit.size(); ++k) {
        img.perm[k] = local[rho.images[g].perm[orbit[k]]];
        img.sign[k] = rho.images[g].sign[orbit[k]];
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace gsnn
