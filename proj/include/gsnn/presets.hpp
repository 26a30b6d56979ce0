#pragma once

#include <string>
#include <vector>

#include "gsnn/json_io.hpp"

namespace gsnn {

struct GroupPreset {
  std::string name;
  json spec;
};

// Named constructions for the survey table: one fixed permutation
// representation of every group of order at most 8, plus the two dihedral
// order-12 examples and the 2D rotation realizations.
const std::vector<GroupPreset>& table_presets();

// Lookup by preset name anywhere (table presets plus "D6", "C6-rot",
// "D6-rot15"); throws SpecError if unknown.
const GroupPreset& preset_by_name(const std::string& name);

}  // namespace gsnn
