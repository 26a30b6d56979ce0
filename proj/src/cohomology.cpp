#include "gsnn/cohomology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gsnn {

Cocycle cocycle_of(const GroupTable& t, const SignedPermRep& rho) {
  RecoveredPair p = recover_pair(t, rho);
  RepFactorization f = factor_rho(rho);
  Cocycle c;
  c.H = p.H;
  c.values.resize(t.order());
  for (int g = 0; g < t.order(); ++g) {
    c.values[g].resize(rho.degree);
    for (int j = 0; j < rho.degree; ++j) c.values[g][j] = f.zeta_left[g][j] == -1 ? 1 : 0;
  }
  return c;
}

bool cocycle_condition_holds(const GroupTable& t, const std::vector<std::vector<int>>& pi,
                             const Cocycle& c) {
  const int n = static_cast<int>(c.values[0].size());
  for (int a = 0; a < t.order(); ++a) {
    for (int b = 0; b < t.order(); ++b) {
      const std::vector<uint8_t>& za = c.values[a];
      const std::vector<uint8_t>& zb = c.values[b];
      const std::vector<uint8_t>& zab = c.values[t.mul(a, b)];
      for (int i = 0; i < n; ++i) {
        // (pi(a) zb)[pi_a[i]] = zb[i]
        uint8_t rhs = za[pi[a][i]] ^ zb[i];
        if (zab[pi[a][i]] != rhs) return false;
      }
    }
  }
  return true;
}

CohomologyGroup cohomology_group(const GroupTable& t, const Subgroup& H,
                                 const std::vector<Subgroup>& all_subgroups) {
  CohomologyGroup ring;
  ring.H = H;
  ring.T = transversal(t, H, H);

  std::vector<Subgroup> ks{H};
  for (const Subgroup& K : index2_subgroups(t, H, all_subgroups)) ks.push_back(K);
  std::sort(ks.begin() + 1, ks.end());

  for (const Subgroup& K : ks) {
    Transversal T = ring.T;
    if (K.order() < H.order()) {
      for (int h : H.members)
        if (!K.contains(h)) { T.h_flip = h; break; }
    } else {
      T.h_flip.reset();
    }
    SignedPermRep rho = build_rho(t, H, K, T);
    if (ring.pi.empty()) ring.pi = factor_rho(rho).pi;
    CohomologyClass cls;
    cls.H = H;
    cls.K = K;
    cls.representative = cocycle_of(t, rho);
    cls.is_zero = (K == H);
    ring.classes.push_back(std::move(cls));
  }

  // Addition law: [K1] + [K2] is labeled by K1 n K2 together with the part of
  // H lying outside both.
  std::map<Subgroup, int> class_of_k;
  for (int i = 0; i < static_cast<int>(ring.classes.size()); ++i)
    class_of_k[ring.classes[i].K] = i;

  const int m = static_cast<int>(ring.classes.size());
  ring.addition.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Subgroup& K1 = ring.classes[i].K;
      const Subgroup& K2 = ring.classes[j].K;
      std::vector<int> members;
      for (int h : H.members) {
        bool in1 = K1.contains(h), in2 = K2.contains(h);
        if ((in1 && in2) || (!in1 && !in2)) members.push_back(h);
      }
      auto it = class_of_k.find(Subgroup{members});
      if (it == class_of_k.end())
        throw std::runtime_error("cohomology addition left the class set");
      ring.addition[i][j] = it->second;
    }
  }
  return ring;
}

std::vector<std::vector<int>> aut_orbits(const GroupTable& t, const CohomologyGroup& ring) {
  const int m = static_cast<int>(ring.classes.size());
  std::vector<int> orbit_of(m, -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < m; ++i) {
    if (orbit_of[i] >= 0) continue;
    std::vector<int> orbit{i};
    orbit_of[i] = static_cast<int>(orbits.size());
    for (int j = i + 1; j < m; ++j) {
      if (orbit_of[j] >= 0) continue;
      if (pairs_conjugate(t, ring.H, ring.classes[i].K, ring.H, ring.classes[j].K)) {
        orbit_of[j] = orbit_of[i];
        orbit.push_back(j);
      }
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::string cohomology_dot(const SignedPermRep& rho, const std::vector<int>& generators,
                           const std::string& graph_name) {
  static const char* kPalette[] = {"red", "blue", "green", "orange", "purple", "brown"};
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n";
  os << "  layout=circo;\n";
  for (int i = 0; i < rho.degree; ++i) os << "  n" << i << " [label=\"" << (i + 1) << "\"];\n";
  for (size_t gi = 0; gi < generators.size(); ++gi) {
    const SignedPerm& img = rho.images[generators[gi]];
    const char* color = kPalette[gi % (sizeof(kPalette) / sizeof(kPalette[0]))];
    for (int i = 0; i < rho.degree; ++i) {
      os << "  n" << i << " -> n" << img.perm[i] << " [color=" << color;
      if (img.sign[i] == -1) os << ", style=dashed";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace gsnn
