#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsnn/architect.hpp"

namespace gsnn {

// Architecture relationship graph. Inclusion edges point from the
// degeneration limit to the architecture that can approach it; tunnel edges
// join same-row architectures with distinct sign classes.
struct MorphismGraph {
  std::vector<std::string> nodes;
  std::vector<int> node_h_order;
  std::vector<std::pair<int, int>> inclusion_edges;
  std::vector<std::pair<int, int>> tunnel_edges;
  std::vector<std::pair<int, std::vector<int>>> layers;  // (|H|, node ids), |H| descending
};

template <class S>
std::vector<std::pair<int, int>> tunnel_edges(const std::vector<ArchitectureSpec<S>>& archs) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(archs.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(archs.size()); ++b)
      if (archs[a].row == archs[b].row && archs[a].col != archs[b].col) out.emplace_back(a, b);
  return out;
}

// Sufficient condition for "A is reachable as a limit of B": some common
// conjugate of (H_B, K_B) nests inside (H_A, K_A) and A's weight space lies
// inside the conjugated weight space of B. Emitted edges are candidates; the
// condition is sound but not proven complete.
template <class S>
std::vector<std::pair<int, int>> inclusion_candidates(const FiniteGroup<S>& G,
                                                      const std::vector<ArchitectureSpec<S>>& archs) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < static_cast<int>(archs.size()); ++a) {
    for (int b = 0; b < static_cast<int>(archs.size()); ++b) {
      if (a == b) continue;
      const ArchitectureSpec<S>& A = archs[a];
      const ArchitectureSpec<S>& B = archs[b];
      if (B.H.order() > A.H.order() || B.K.order() > A.K.order()) continue;
      bool found = false;
      for (int g = 0; g < G.order() && !found; ++g) {
        Subgroup Hb = conjugate_subgroup(G.table, B.H, g);
        if (!subgroup_leq(Hb, A.H)) continue;
        Subgroup Kb = conjugate_subgroup(G.table, B.K, g);
        if (!subgroup_leq(Kb, A.K)) continue;
        SubspaceBasis<S> wsb = weight_space_of(G, Hb, Kb);
        if (subspace_leq(A.weight_space, wsb, G.tol.eq)) found = true;
      }
      if (found) out.emplace_back(a, b);
    }
  }
  return out;
}

template <class S>
MorphismGraph build_morphism_graph(const FiniteGroup<S>& G,
                                   const std::vector<ArchitectureSpec<S>>& archs) {
  MorphismGraph g;
  for (const auto& a : archs) {
    g.nodes.push_back(a.name);
    g.node_h_order.push_back(a.H.order());
  }
  g.inclusion_edges = inclusion_candidates(G, archs);
  g.tunnel_edges = tunnel_edges(archs);

  std::set<int, std::greater<int>> orders(g.node_h_order.begin(), g.node_h_order.end());
  for (int o : orders) {
    std::vector<int> layer;
    for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i)
      if (g.node_h_order[i] == o) layer.push_back(i);
    g.layers.emplace_back(o, std::move(layer));
  }
  return g;
}

// Hidden widths realizable by sums of the given architecture sizes plus an
// optional affine term counted as two neurons.
std::set<int> width_semigroup(const std::vector<int>& sizes, int max_width);

std::string morphism_dot(const MorphismGraph& g);

}  // namespace gsnn
