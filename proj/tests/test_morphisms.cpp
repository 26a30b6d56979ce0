#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gsnn/morphisms.hpp"
#include "gsnn/presets.hpp"

using namespace gsnn;

namespace {

template <class S>
std::set<std::pair<std::string, std::string>> edge_names(
    const std::vector<ArchitectureSpec<S>>& archs, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& [a, b] : edges) out.insert({archs[a].name, archs[b].name});
  return out;
}

}  // namespace

TEST_CASE("tunnel_edges") {
  SUBCASE("cyclic permutation group: exactly the two same-row pairs") {
    auto C6 = cyclic_perm_group<Rat>(6);
    auto e = enumerate_architectures(C6);
    auto names = edge_names(e.archs, tunnel_edges(e.archs));
    CHECK(names == std::set<std::pair<std::string, std::string>>{{"1.0", "1.1"}, {"3.0", "3.1"}});
  }
  SUBCASE("dihedral rotation group: the two sign classes of the Klein row") {
    auto D6 = dihedral2d_group(6, 15.0);
    auto e = enumerate_architectures(D6);
    auto names = edge_names(e.archs, tunnel_edges(e.archs));
    CHECK(names.count({"4.2", "4.3"}) == 1);
  }
  SUBCASE("single-architecture rows give no tunnels") {
    auto C3 = cyclic_perm_group<Rat>(3);
    auto e = enumerate_architectures(C3);
    CHECK(tunnel_edges(e.archs).empty());
  }
  SUBCASE("tunnel endpoints have mutually orthogonal weight spaces") {
    auto D6 = group_from_spec<Rat>(preset_by_name("D6").spec);
    auto e = enumerate_architectures(D6);
    for (const auto& [a, b] : tunnel_edges(e.archs)) {
      for (const auto& va : e.archs[a].weight_space.vectors)
        for (const auto& vb : e.archs[b].weight_space.vectors)
          CHECK(dot(va, vb) == Rat(0));
    }
  }
}

TEST_CASE("inclusion_candidates") {
  SUBCASE("rotation group: the sign-twisted architecture degenerates into the plain one") {
    auto C6 = rotation2d_group(6);
    auto e = enumerate_architectures(C6);
    auto names = edge_names(e.archs, inclusion_candidates(C6, e.archs));
    CHECK(names.count({"1.1", "0.0"}) == 1);
  }
  SUBCASE("cyclic permutation group contains the nested chain edges") {
    auto C6 = cyclic_perm_group<Rat>(6);
    auto e = enumerate_architectures(C6);
    auto names = edge_names(e.archs, inclusion_candidates(C6, e.archs));
    CHECK(names.count({"1.1", "0.0"}) == 1);
    CHECK(names.count({"3.1", "1.1"}) == 1);
    for (const auto& [a, b] : names) CHECK(a != b);
  }
  SUBCASE("the candidate graph is a DAG layered by |H|") {
    for (const char* preset : {"C6", "D6"}) {
      auto G = group_from_spec<Rat>(preset_by_name(preset).spec);
      auto e = enumerate_architectures(G);
      for (const auto& [a, b] : inclusion_candidates(G, e.archs))
        CHECK(e.archs[a].H.order() > e.archs[b].H.order());
    }
  }
  SUBCASE("cyclic permutation group is 3-partite: no arcs between the middle orders") {
    auto C6 = cyclic_perm_group<Rat>(6);
    auto e = enumerate_architectures(C6);
    for (const auto& [a, b] : inclusion_candidates(C6, e.archs)) {
      int ha = e.archs[a].H.order(), hb = e.archs[b].H.order();
      CHECK(ha != hb);
      CHECK_FALSE((ha == 2 && hb == 3));
      CHECK_FALSE((ha == 3 && hb == 2));
    }
  }
}

TEST_CASE("build_morphism_graph") {
  auto C6 = cyclic_perm_group<Rat>(6);
  auto e = enumerate_architectures(C6);
  MorphismGraph g = build_morphism_graph(C6, e.archs);
  CHECK(g.nodes.size() == 6);
  CHECK(g.tunnel_edges.size() == 2);
  CHECK(g.layers.size() == 4);  // |H| in {6, 3, 2, 1}
  CHECK(g.layers.front().first == 6);
  CHECK(g.layers.back().first == 1);

  std::string dot = morphism_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"1.1\" -> \"0.0\"") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
  CHECK(dot.find("dir=both") != std::string::npos);

  SUBCASE("single architecture gives an edgeless graph") {
    auto T = trivial_group<Rat>(1);
    auto et = enumerate_architectures(T);
    MorphismGraph gt = build_morphism_graph(T, et.archs);
    CHECK(gt.nodes.size() == 1);
    CHECK(gt.inclusion_edges.empty());
    CHECK(gt.tunnel_edges.empty());
  }
}

TEST_CASE("width_semigroup") {
  SUBCASE("rotation group widths avoid 1 mod 3") {
    auto widths = width_semigroup({6, 3}, 13);
    CHECK(widths == std::set<int>{0, 2, 3, 5, 6, 8, 9, 11, 12});
    for (int w : widths) CHECK(w % 3 != 1);
  }
  SUBCASE("the trivial group achieves every width") {
    auto widths = width_semigroup({1}, 10);
    CHECK(widths.size() == 11);
  }
  SUBCASE("no architectures leaves only the affine option") {
    CHECK(width_semigroup({}, 10) == std::set<int>{0, 2});
  }
  SUBCASE("closed under adding any architecture size") {
    auto widths = width_semigroup({6, 3}, 30);
    for (int w : widths)
      for (int s : {3, 6})
        if (w + s <= 30) CHECK(widths.count(w + s) == 1);
  }
}
