#include "gsnn/group_table.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsnn {

bool GroupTable::associativity_holds() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

bool Subgroup::contains(int e) const {
  return std::binary_search(members.begin(), members.end(), e);
}

Subgroup close_subgroup(const GroupTable& t, std::vector<int> seed) {
  std::set<int> got{0};
  std::vector<int> frontier{0};
  for (int s : seed)
    if (got.insert(s).second) frontier.push_back(s);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier) {
      for (int b : got) {
        for (int p : {t.mul(a, b), t.mul(b, a)})
          if (got.insert(p).second) next.push_back(p);
      }
      int ia = t.invof(a);
      if (got.insert(ia).second) next.push_back(ia);
    }
    frontier = std::move(next);
  }
  return Subgroup{std::vector<int>(got.begin(), got.end())};
}

bool is_subgroup(const GroupTable& t, const Subgroup& S) {
  if (S.members.empty() || S.members[0] != 0) return false;
  for (int a : S.members) {
    if (!S.contains(t.invof(a))) return false;
    for (int b : S.members)
      if (!S.contains(t.mul(a, b))) return false;
  }
  return true;
}

bool subgroup_leq(const Subgroup& A, const Subgroup& B) {
  return std::includes(B.members.begin(), B.members.end(), A.members.begin(), A.members.end());
}

std::vector<Subgroup> enumerate_subgroups(const GroupTable& t) {
  const int n = t.order();
  std::set<Subgroup> found;
  found.insert(Subgroup{{0}});
  for (int g = 1; g < n; ++g) found.insert(close_subgroup(t, {g}));

  // Extend every known subgroup by one outside element until nothing new appears.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> snapshot(found.begin(), found.end());
    for (const Subgroup& S : snapshot) {
      if (S.order() == n) continue;
      for (int g = 1; g < n; ++g) {
        if (S.contains(g)) continue;
        std::vector<int> seed = S.members;
        seed.push_back(g);
        Subgroup bigger = close_subgroup(t, std::move(seed));
        if (found.insert(bigger).second) grew = true;
      }
    }
  }
  return std::vector<Subgroup>(found.begin(), found.end());
}

std::vector<Subgroup> index2_subgroups(const GroupTable& t, const Subgroup& H,
                                       const std::vector<Subgroup>& all_subgroups) {
  (void)t;
  std::vector<Subgroup> out;
  for (const Subgroup& K : all_subgroups)
    if (2 * K.order() == H.order() && subgroup_leq(K, H)) out.push_back(K);
  return out;
}

Subgroup conjugate_subgroup(const GroupTable& t, const Subgroup& S, int g) {
  std::vector<int> m;
  m.reserve(S.members.size());
  for (int x : S.members) m.push_back(t.conj(x, g));
  std::sort(m.begin(), m.end());
  return Subgroup{std::move(m)};
}

SubgroupClasses subgroup_classes(const GroupTable& t) {
  SubgroupClasses sc;
  sc.subgroups = enumerate_subgroups(t);

  std::map<Subgroup, int> id_of;
  for (int i = 0; i < static_cast<int>(sc.subgroups.size()); ++i) id_of[sc.subgroups[i]] = i;

  sc.class_of.assign(sc.subgroups.size(), -1);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(sc.subgroups.size()); ++i) {
    if (sc.class_of[i] >= 0) continue;
    std::set<int> orbit;
    for (int g = 0; g < t.order(); ++g) orbit.insert(id_of.at(conjugate_subgroup(t, sc.subgroups[i], g)));
    int cid = static_cast<int>(classes.size());
    classes.emplace_back(orbit.begin(), orbit.end());
    for (int j : classes.back()) sc.class_of[j] = cid;
  }

  // Order classes by (subgroup order, class size, least member set); the
  // singleton (normal) classes come first among equals so that naming is
  // stable across different matrix realizations of the same group.
  std::vector<int> perm(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) perm[i] = static_cast<int>(i);
  auto key = [&](int c) {
    const Subgroup& rep = sc.subgroups[classes[c][0]];
    return std::make_tuple(rep.order(), classes[c].size(), rep.members);
  };
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return key(a) < key(b); });

  sc.classes.resize(classes.size());
  std::vector<int> new_id(classes.size());
  for (size_t i = 0; i < perm.size(); ++i) {
    sc.classes[i] = classes[perm[i]];
    new_id[perm[i]] = static_cast<int>(i);
  }
  for (int& c : sc.class_of) c = new_id[c];
  return sc;
}

bool pairs_conjugate(const GroupTable& t, const Subgroup& H1, const Subgroup& K1,
                     const Subgroup& H2, const Subgroup& K2) {
  if (H1.order() != H2.order() || K1.order() != K2.order()) return false;
  for (int g = 0; g < t.order(); ++g)
    if (conjugate_subgroup(t, H1, g) == H2 && conjugate_subgroup(t, K1, g) == K2) return true;
  return false;
}

std::vector<SubgroupPairClass> pair_classes(const GroupTable& t) {
  SubgroupClasses sc = subgroup_classes(t);

  std::vector<std::pair<Subgroup, Subgroup>> pairs;
  for (const Subgroup& H : sc.subgroups) {
    pairs.emplace_back(H, H);
    for (const Subgroup& K : index2_subgroups(t, H, sc.subgroups)) pairs.emplace_back(H, K);
  }

  std::vector<SubgroupPairClass> out;
  std::set<std::pair<Subgroup, Subgroup>> seen;
  for (const auto& p : pairs) {
    if (seen.count(p)) continue;
    std::set<std::pair<Subgroup, Subgroup>> orbit;
    for (int g = 0; g < t.order(); ++g)
      orbit.insert({conjugate_subgroup(t, p.first, g), conjugate_subgroup(t, p.second, g)});
    for (const auto& q : orbit) seen.insert(q);

    SubgroupPairClass cls;
    cls.class_members.assign(orbit.begin(), orbit.end());
    // Representative: least H in the class, then least K among pairs with it.
    cls.H = cls.class_members[0].first;
    cls.K = cls.class_members[0].second;
    for (const auto& q : cls.class_members) {
      if (q.first < cls.H || (q.first == cls.H && q.second < cls.K)) {
        cls.H = q.first;
        cls.K = q.second;
      }
    }
    cls.index = cls.H.order() / cls.K.order();
    out.push_back(std::move(cls));
  }

  auto subgroup_key = [&](const Subgroup& s) {
    int id = static_cast<int>(std::lower_bound(sc.subgroups.begin(), sc.subgroups.end(), s) -
                              sc.subgroups.begin());
    int cid = sc.class_of[id];
    return std::make_tuple(cid, s.members);
  };
  std::sort(out.begin(), out.end(), [&](const SubgroupPairClass& a, const SubgroupPairClass& b) {
    return std::make_tuple(subgroup_key(a.H), subgroup_key(a.K)) <
           std::make_tuple(subgroup_key(b.H), subgroup_key(b.K));
  });
  return out;
}

Transversal transversal(const GroupTable& t, const Subgroup& H, const Subgroup& K) {
  if (!subgroup_leq(K, H)) throw InvalidPair("transversal: K is not a subgroup of H");
  int index = H.order() / K.order();
  if (index > 2 || H.order() % K.order() != 0)
    throw InvalidPair("transversal: |H:K| must be 1 or 2");

  Transversal T;
  std::vector<bool> covered(t.order(), false);
  for (int g = 0; g < t.order(); ++g) {
    if (covered[g]) continue;
    T.reps.push_back(g);
    for (int h : H.members) covered[t.mul(g, h)] = true;
  }
  if (index == 2) {
    for (int h : H.members)
      if (!K.contains(h)) { T.h_flip = h; break; }
  }
  return T;
}

int coset_rep_index(const GroupTable& t, const Transversal& T, const Subgroup& H, int x) {
  for (int i = 0; i < static_cast<int>(T.reps.size()); ++i)
    if (H.contains(t.mul(t.invof(T.reps[i]), x))) return i;
  return -1;
}

}  // namespace gsnn
