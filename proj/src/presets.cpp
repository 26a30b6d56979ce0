#include "gsnn/presets.hpp"

namespace gsnn {

namespace {

json cyclic(int n) { return json{{"kind", "cyclic-perm"}, {"n", n}}; }
json dihedral(int n) { return json{{"kind", "dihedral-perm"}, {"n", n}}; }

std::vector<GroupPreset> make_presets() {
  json c2 = cyclic(2);
  json q8 = json{{"kind", "generators"},
                 {"perms", json::array({json::array({3, 4, 2, 1, 7, 8, 6, 5}),
                                        json::array({5, 6, 8, 7, 2, 1, 3, 4}),
                                        json::array({7, 8, 5, 6, 4, 3, 2, 1})})}};
  std::vector<GroupPreset> p;
  p.push_back({"trivial", json{{"kind", "generators"}, {"m", 1}, {"perms", json::array()}}});
  p.push_back({"C2", c2});
  p.push_back({"C3", cyclic(3)});
  p.push_back({"C4", cyclic(4)});
  p.push_back({"C5", cyclic(5)});
  p.push_back({"C6", cyclic(6)});
  p.push_back({"C7", cyclic(7)});
  p.push_back({"C8", cyclic(8)});
  p.push_back({"C2^2", json{{"kind", "product"}, {"factors", json::array({c2, c2})}}});
  p.push_back({"C2^3", json{{"kind", "product"}, {"factors", json::array({c2, c2, c2})}}});
  p.push_back({"C2xC4", json{{"kind", "product"}, {"factors", json::array({c2, cyclic(4)})}}});
  p.push_back({"D3", dihedral(3)});
  p.push_back({"D4", dihedral(4)});
  p.push_back({"Q8", q8});
  return p;
}

std::vector<GroupPreset> make_all() {
  std::vector<GroupPreset> p = make_presets();
  p.push_back({"D6", dihedral(6)});
  p.push_back({"C6-rot", json{{"kind", "rotation2d"}, {"n", 6}}});
  p.push_back({"D6-rot15", json{{"kind", "dihedral2d"}, {"n", 6}, {"axis_deg", 15.0}}});
  return p;
}

}  // namespace

const std::vector<GroupPreset>& table_presets() {
  static const std::vector<GroupPreset> presets = make_presets();
  return presets;
}

const GroupPreset& preset_by_name(const std::string& name) {
  static const std::vector<GroupPreset> all = make_all();
  for (const GroupPreset& p : all)
    if (p.name == name) return p;
  throw SpecError("unknown group preset: " + name);
}

}  // namespace gsnn
