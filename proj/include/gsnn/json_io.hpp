#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gsnn/architect.hpp"
#include "gsnn/cohomology.hpp"
#include "gsnn/group.hpp"
#include "gsnn/morphisms.hpp"
#include "gsnn/reps.hpp"

namespace gsnn {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- group specs ----------------------------------------------------------

// {"kind": "cyclic-perm"|"dihedral-perm"|"product"|"rotation2d"|"dihedral2d"|
//  "generators", ...}; permutations are 1-indexed image arrays.
bool spec_requires_float(const json& spec);

template <class S>
FiniteGroup<S> group_from_spec(const json& spec, int max_order = kDefaultMaxGroupOrder,
                               Tolerances tol = {});

// --- scalar encoding -------------------------------------------------------

inline json scalar_to_json(const Rat& q) { return q.get_str(); }  // "p/q"
inline json scalar_to_json(double v) { return v; }

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  Rat q(j.get<std::string>());
  q.canonicalize();
  return q;
}

template <class S>
json vector_to_json(const std::vector<S>& v) {
  json a = json::array();
  for (const S& x : v) a.push_back(scalar_to_json(x));
  return a;
}

// --- reps -------------------------------------------------------------------

json rep_to_json(const SignedPermRep& rho);
SignedPermRep rep_from_json(const json& j);

// --- cohomology --------------------------------------------------------------

json cohomology_to_json(const CohomologyGroup& ring, const SubgroupClasses& sc);

// --- architectures ------------------------------------------------------------

json pattern_to_json(const ConstraintPattern& p);

template <class S>
json architecture_to_json(const ArchitectureSpec<S>& a) {
  json j;
  j["schema"] = kSchemaVersion;
  j["name"] = a.name;
  j["H"] = json{{"id", a.H_id}, {"order", a.H.order()}, {"members", a.H.members}};
  j["K"] = json{{"id", a.K_id}, {"order", a.K.order()}, {"members", a.K.members}};
  j["type"] = a.type();
  j["hidden"] = a.hidden;
  j["transversal"] = a.transversal.reps;
  json basis = json::array();
  for (const auto& v : a.weight_space.vectors) basis.push_back(vector_to_json(v));
  j["weight_space_basis"] = basis;
  j["rep"] = rep_to_json(a.rep);
  if (a.pattern) j["pattern"] = pattern_to_json(*a.pattern);
  j["cohomology"] = json{{"ring", a.H_id}, {"class", a.K_id}, {"is_zero", a.cohomology_zero}};
  return j;
}

template <class S>
std::string summary_csv(const std::vector<ArchitectureSpec<S>>& archs) {
  std::string out = "name,H_order,K_order,type,hidden\n";
  for (const auto& a : archs) {
    out += a.name + "," + std::to_string(a.H.order()) + "," + std::to_string(a.K.order()) + "," +
           std::to_string(a.type()) + "," + std::to_string(a.hidden) + "\n";
  }
  return out;
}

json morphism_graph_to_json(const MorphismGraph& g);

}  // namespace gsnn
