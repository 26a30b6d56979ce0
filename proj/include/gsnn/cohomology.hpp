#pragma once

#include <string>
#include <vector>

#include "gsnn/group_table.hpp"
#include "gsnn/reps.hpp"

namespace gsnn {

// 1-cocycle of G with values in F2^n, n = |G:H|, one vector per group element.
// values[g][j] = 1 records a sign flip of the rep on target axis j.
struct Cocycle {
  Subgroup H;
  std::vector<std::vector<uint8_t>> values;
};

struct CohomologyClass {
  Subgroup H;
  Subgroup K;  // canonical label of the class
  Cocycle representative;
  bool is_zero = false;
};

// First cohomology group of G with coefficients twisted over G/H, materialized
// with an explicit addition table. classes[0] is the zero class (K = H).
struct CohomologyGroup {
  Subgroup H;
  Transversal T;
  std::vector<std::vector<int>> pi;  // permutation action on F2^n, shared by all classes
  std::vector<CohomologyClass> classes;
  std::vector<std::vector<int>> addition;
};

Cocycle cocycle_of(const GroupTable& t, const SignedPermRep& rho);
bool cocycle_condition_holds(const GroupTable& t, const std::vector<std::vector<int>>& pi,
                             const Cocycle& c);

CohomologyGroup cohomology_group(const GroupTable& t, const Subgroup& H,
                                 const std::vector<Subgroup>& all_subgroups);

// Partition of the class indices into orbits under the module automorphisms;
// classes share an orbit exactly when their (H, K) pairs are conjugate.
std::vector<std::vector<int>> aut_orbits(const GroupTable& t, const CohomologyGroup& ring);

inline bool is_zero_class(const CohomologyClass& c) { return c.K == c.H; }

// Cayley-style illustration: one node per coset, one colored arc set per
// generator, dashed arcs where the generator flips the sign at that node.
std::string cohomology_dot(const SignedPermRep& rho, const std::vector<int>& generators,
                           const std::string& graph_name);

}  // namespace gsnn
