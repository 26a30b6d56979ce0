#include "gsnn/json_io.hpp"

namespace gsnn {

bool spec_requires_float(const json& spec) {
  std::string kind = spec.at("kind").get<std::string>();
  if (kind == "rotation2d" || kind == "dihedral2d") return true;
  if (kind == "product") {
    for (const json& f : spec.at("factors"))
      if (spec_requires_float(f)) return true;
    return false;
  }
  if (kind == "generators") return spec.contains("matrices");
  return false;
}

namespace {

template <class S>
std::vector<Mat<S>> perm_generators(const json& spec) {
  std::vector<Mat<S>> gens;
  int m = spec.contains("m") ? spec.at("m").get<int>() : -1;
  if (spec.contains("perms")) {
    for (const json& p : spec.at("perms")) {
      std::vector<int> image1 = p.get<std::vector<int>>();
      if (m < 0) m = static_cast<int>(image1.size());
      if (static_cast<int>(image1.size()) != m)
        throw SpecError("generator permutations have inconsistent lengths");
      std::vector<int> img = to_zero_indexed(image1);
      for (int v : img)
        if (v < 0 || v >= m) throw SpecError("permutation image out of range");
      gens.push_back(perm_matrix<S>(img));
    }
  }
  if (m < 0) throw SpecError("generators spec needs \"m\" or at least one permutation");
  return gens;
}

}  // namespace

template <class S>
FiniteGroup<S> group_from_spec(const json& spec, int max_order, Tolerances tol) {
  std::string kind = spec.at("kind").get<std::string>();
  if (kind == "cyclic-perm") {
    int n = spec.at("n").get<int>();
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) img[j] = (j + 1) % n;
    return close_generators<S>({perm_matrix<S>(img)}, n, max_order, tol);
  }
  if (kind == "dihedral-perm") {
    int n = spec.at("n").get<int>();
    std::vector<int> rot(n), rev(n);
    for (int j = 0; j < n; ++j) {
      rot[j] = (j + 1) % n;
      rev[j] = n - 1 - j;
    }
    return close_generators<S>({perm_matrix<S>(rot), perm_matrix<S>(rev)}, n, max_order, tol);
  }
  if (kind == "product") {
    std::vector<FiniteGroup<S>> factors;
    for (const json& f : spec.at("factors")) factors.push_back(group_from_spec<S>(f, max_order, tol));
    return product_group<S>(factors, max_order);
  }
  if (kind == "generators") {
    std::vector<Mat<S>> gens = perm_generators<S>(spec);
    int m = spec.contains("m") ? spec.at("m").get<int>()
                               : (gens.empty() ? 0 : gens[0].rows());
    if (spec.contains("matrices")) {
      if constexpr (ScalarTraits<S>::exact) {
        for (const json& mj : spec.at("matrices")) {
          auto rows = mj.get<std::vector<std::vector<json>>>();
          if (m <= 0) m = static_cast<int>(rows.size());
          Mat<S> g(m, m);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) g(i, j) = rat_from_json(rows[i][j]);
          gens.push_back(std::move(g));
        }
      } else {
        for (const json& mj : spec.at("matrices")) {
          auto rows = mj.get<std::vector<std::vector<double>>>();
          if (m <= 0) m = static_cast<int>(rows.size());
          Mat<S> g(m, m);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) g(i, j) = rows[i][j];
          gens.push_back(std::move(g));
        }
      }
    }
    return close_generators<S>(gens, m, max_order, tol);
  }
  if constexpr (!ScalarTraits<S>::exact) {
    if (kind == "rotation2d") {
      return close_generators<double>({rotation2d_matrix(2 * std::numbers::pi / spec.at("n").get<int>())},
                                      2, max_order, tol);
    }
    if (kind == "dihedral2d") {
      double axis = spec.contains("axis_deg") ? spec.at("axis_deg").get<double>() : 0.0;
      return close_generators<double>(
          {rotation2d_matrix(2 * std::numbers::pi / spec.at("n").get<int>()),
           reflection2d_matrix(axis * std::numbers::pi / 180.0)},
          2, max_order, tol);
    }
  } else {
    if (kind == "rotation2d" || kind == "dihedral2d")
      throw SpecError("2D rotation groups need float mode");
  }
  throw SpecError("unknown group spec kind: " + kind);
}

template FiniteGroup<Rat> group_from_spec<Rat>(const json&, int, Tolerances);
template FiniteGroup<double> group_from_spec<double>(const json&, int, Tolerances);

json rep_to_json(const SignedPermRep& rho) {
  json j;
  j["degree"] = rho.degree;
  json images = json::array();
  for (const SignedPerm& img : rho.images) {
    std::vector<int> perm1(img.perm.size());
    for (size_t i = 0; i < img.perm.size(); ++i) perm1[i] = img.perm[i] + 1;
    images.push_back(json{{"perm", perm1}, {"signs", img.sign}});
  }
  j["images"] = images;
  return j;
}

SignedPermRep rep_from_json(const json& j) {
  SignedPermRep rho;
  rho.degree = j.at("degree").get<int>();
  for (const json& ij : j.at("images")) {
    SignedPerm p;
    p.perm = to_zero_indexed(ij.at("perm").get<std::vector<int>>());
    p.sign = ij.at("signs").get<std::vector<int>>();
    rho.images.push_back(std::move(p));
  }
  return rho;
}

json cohomology_to_json(const CohomologyGroup& ring, const SubgroupClasses& sc) {
  auto sub_id = [&](const Subgroup& s) {
    auto it = std::lower_bound(sc.subgroups.begin(), sc.subgroups.end(), s);
    return static_cast<int>(it - sc.subgroups.begin());
  };
  json j;
  j["schema"] = kSchemaVersion;
  j["H"] = sub_id(ring.H);
  json classes = json::array();
  for (const CohomologyClass& c : ring.classes)
    classes.push_back(json{{"K", sub_id(c.K)}, {"is_zero", c.is_zero}});
  j["classes"] = classes;
  j["addition"] = ring.addition;
  return j;
}

json pattern_to_json(const ConstraintPattern& p) {
  json rows = json::array();
  for (int i = 0; i < p.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < p.cols; ++j) {
      const PatternCell& c = p.at(i, j);
      if (c.color < 0)
        row.push_back(0);
      else
        row.push_back(json::array({c.color, c.sign}));
    }
    rows.push_back(row);
  }
  return json{{"rows", p.rows}, {"cols", p.cols}, {"cells", rows}};
}

json morphism_graph_to_json(const MorphismGraph& g) {
  json j;
  j["schema"] = kSchemaVersion;
  j["nodes"] = g.nodes;
  json incl = json::array();
  for (const auto& [a, b] : g.inclusion_edges)
    incl.push_back(json{{"from", g.nodes[a]}, {"to", g.nodes[b]}, {"kind", "candidate"}});
  j["inclusion_edges"] = incl;
  json tun = json::array();
  for (const auto& [a, b] : g.tunnel_edges)
    tun.push_back(json::array({g.nodes[a], g.nodes[b]}));
  j["tunnel_edges"] = tun;
  json layers = json::array();
  for (const auto& [order, ids] : g.layers) {
    json names = json::array();
    for (int i : ids) names.push_back(g.nodes[i]);
    layers.push_back(json{{"h_order", order}, {"nodes", names}});
  }
  j["layers"] = layers;
  return j;
}

}  // namespace gsnn
