#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsnn {

struct InvalidPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Multiplication table of a finite group over element indices.
// Index 0 is always the identity.
struct GroupTable {
  std::vector<std::vector<int>> mult;
  std::vector<int> inv;

  int order() const { return static_cast<int>(inv.size()); }
  int mul(int a, int b) const { return mult[a][b]; }
  int invof(int a) const { return inv[a]; }
  int conj(int x, int g) const { return mul(mul(inv[g], x), g); }  // g^{-1} x g

  bool associativity_holds() const;
};

// A subgroup is a sorted index set containing the identity.
struct Subgroup {
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int e) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const {
    return members.size() != o.members.size() ? members.size() < o.members.size()
                                              : members < o.members;
  }
};

// Ordered coset representatives of G/H with reps[0] = identity.
// h_flip is the least element of H \ K when |H:K| = 2, absent otherwise.
struct Transversal {
  std::vector<int> reps;
  std::optional<int> h_flip;
};

// Conjugacy class of nested subgroup pairs (H, K), |H:K| <= 2, under
// simultaneous conjugation. The representative pair has the least H in its
// subgroup class, and the least K among pairs with that H.
struct SubgroupPairClass {
  Subgroup H;
  Subgroup K;
  std::vector<std::pair<Subgroup, Subgroup>> class_members;
  int index = 1;  // |H:K|
};

Subgroup close_subgroup(const GroupTable& t, std::vector<int> seed);
std::vector<Subgroup> enumerate_subgroups(const GroupTable& t);
std::vector<Subgroup> index2_subgroups(const GroupTable& t, const Subgroup& H,
                                       const std::vector<Subgroup>& all_subgroups);
Subgroup conjugate_subgroup(const GroupTable& t, const Subgroup& S, int g);
bool is_subgroup(const GroupTable& t, const Subgroup& S);
bool subgroup_leq(const Subgroup& A, const Subgroup& B);

// Conjugacy classes of subgroups, each sorted; classes ordered by
// (order, class size, least member). This ordering drives architecture names.
struct SubgroupClasses {
  std::vector<Subgroup> subgroups;          // all subgroups, sorted by (order, members)
  std::vector<std::vector<int>> classes;    // indices into `subgroups`
  std::vector<int> class_of;                // subgroup index -> class index
};
SubgroupClasses subgroup_classes(const GroupTable& t);

std::vector<SubgroupPairClass> pair_classes(const GroupTable& t);

// True iff (H1,K1) and (H2,K2) are simultaneously conjugate.
bool pairs_conjugate(const GroupTable& t, const Subgroup& H1, const Subgroup& K1,
                     const Subgroup& H2, const Subgroup& K2);

Transversal transversal(const GroupTable& t, const Subgroup& H, const Subgroup& K);

// Index of the coset representative r in T with x in r*H, or -1.
int coset_rep_index(const GroupTable& t, const Transversal& T, const Subgroup& H, int x);

}  // namespace gsnn
