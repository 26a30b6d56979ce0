#include "gsnn/morphisms.hpp"

namespace gsnn {

std::set<int> width_semigroup(const std::vector<int>& sizes, int max_width) {
  std::vector<bool> reach(max_width + 1, false);
  reach[0] = true;
  for (int s : sizes) {
    if (s <= 0) continue;
    for (int w = s; w <= max_width; ++w)
      if (reach[w - s]) reach[w] = true;
  }
  std::set<int> out;
  for (int w = 0; w <= max_width; ++w) {
    if (!reach[w]) continue;
    out.insert(w);
    if (w + 2 <= max_width) out.insert(w + 2);  // optional affine term
  }
  return out;
}

std::string morphism_dot(const MorphismGraph& g) {
  std::ostringstream os;
  os << "digraph morphisms {\n  rankdir=BT;\n";
  for (const auto& [order, ids] : g.layers) {
    os << "  { rank=same;";
    for (int i : ids) os << " \"" << g.nodes[i] << "\";";
    os << " }  // |H| = " << order << "\n";
  }
  for (const auto& [a, b] : g.inclusion_edges)
    os << "  \"" << g.nodes[a] << "\" -> \"" << g.nodes[b] << "\" [color=black];\n";
  for (const auto& [a, b] : g.tunnel_edges)
    os << "  \"" << g.nodes[a] << "\" -> \"" << g.nodes[b]
       << "\" [color=red, dir=both, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace gsnn
