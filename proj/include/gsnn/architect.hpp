#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsnn/cohomology.hpp"
#include "gsnn/group.hpp"
#include "gsnn/linalg.hpp"
#include "gsnn/reps.hpp"

namespace gsnn {

struct ZeroWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroOutputScale : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedMode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weight-sharing pattern of the canonical weight family: cells carrying the
// same color are constrained equal (sign -1: constrained opposite); cells
// with color < 0 are identically zero.
struct PatternCell {
  int color = -1;
  int sign = 0;
};
struct ConstraintPattern {
  int rows = 0;
  int cols = 0;
  std::vector<PatternCell> cells;  // row-major

  const PatternCell& at(int i, int j) const { return cells[static_cast<size_t>(i) * cols + j]; }
  PatternCell& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }
};

template <class S>
struct ArchitectureSpec {
  std::string name;  // "i.j"
  int row = -1;      // i
  int col = -1;      // j
  Subgroup H;        // representative pair, common to all architectures of a row
  Subgroup K;
  int tau = 0;  // |H:K| - 1
  int hidden = 0;
  Transversal transversal;
  SignedPermRep rep;
  SubspaceBasis<S> weight_space;  // ran(P_K - tau P_H) in R^m
  int H_id = -1;                  // subgroup ids labeling the cohomology ring/class
  int K_id = -1;
  bool cohomology_zero = false;
  std::optional<ConstraintPattern> pattern;

  int type() const { return tau + 1; }
};

template <class S>
struct SNNInstance {
  Mat<S> W;           // hidden x input
  std::vector<S> a;   // hidden
  std::vector<S> b;   // hidden
  std::vector<S> c;   // input
  S d = S(0);
};

struct AdmissibilityResult {
  bool admissible = false;
  Subgroup stabilizer;  // witness: st of the weight-space projector (G when the space is zero)
};

// A pair class together with its naming slot in the enumeration.
template <class S>
struct ClassSlot {
  SubgroupPairClass cls;
  int h_class = -1;  // subgroup-class index of H
  int row = -1;      // -1 when the whole row has no admissible class
  int col = -1;      // j, counted over all candidate classes of the row
  AdmissibilityResult adm;
  SubspaceBasis<S> weight_space;
};

template <class S>
struct Enumeration {
  SubgroupClasses sub_classes;
  std::vector<ClassSlot<S>> slots;            // all pair classes, naming order
  std::vector<ArchitectureSpec<S>> archs;     // admissible ones, naming order
};

// st_G(projector onto ran(P_K - tau P_H)) = K, with a nonzero weight space.
template <class S>
AdmissibilityResult admissible(const FiniteGroup<S>& G, const Subgroup& H, const Subgroup& K) {
  const int tau = (H.order() == K.order()) ? 0 : 1;
  Mat<S> M = projector(G, K);
  if (tau == 1) M = M - projector(G, H);
  SubspaceBasis<S> V = range_basis(M, G.tol.pivot);
  if (V.dim() == 0) return {false, G.whole()};
  Subgroup st = stabilizer_of_matrix(G, projector_onto(V));
  return {st == K, st};
}

template <class S>
SubspaceBasis<S> weight_space_of(const FiniteGroup<S>& G, const Subgroup& H, const Subgroup& K) {
  const int tau = (H.order() == K.order()) ? 0 : 1;
  Mat<S> M = projector(G, K);
  if (tau == 1) M = M - projector(G, H);
  return range_basis(M, G.tol.pivot);
}

// Exact mode only: group the entries of the canonical weight family by the
// linear functional they carry over the weight-space coordinates.
template <class S>
ConstraintPattern constraint_pattern(const FiniteGroup<S>& G, const ArchitectureSpec<S>& arch) {
  if constexpr (!ScalarTraits<S>::exact)
    throw UnsupportedMode("constraint patterns require exact arithmetic");
  else {
    const int n = arch.hidden;
    const int m = G.dim;
    const int d = arch.weight_space.dim();
    ConstraintPattern pat;
    pat.rows = n;
    pat.cols = m;
    pat.cells.resize(static_cast<size_t>(n) * m);

    std::map<std::vector<S>, std::pair<int, int>> color_of;  // functional -> (color, sign of rep)
    int next_color = 0;
    for (int i = 0; i < n; ++i) {
      std::vector<std::vector<S>> moved;  // g_i v_k for each basis vector
      for (int k = 0; k < d; ++k) moved.push_back(G.elems[arch.transversal.reps[i]].apply(arch.weight_space.vectors[k]));
      for (int j = 0; j < m; ++j) {
        std::vector<S> f(d);
        bool zero = true;
        for (int k = 0; k < d; ++k) {
          f[k] = moved[k][j];
          if (sgn(f[k]) != 0) zero = false;
        }
        if (zero) continue;
        int sign = 1;
        for (int k = 0; k < d; ++k) {
          if (sgn(f[k]) == 0) continue;
          if (sgn(f[k]) < 0) sign = -1;
          break;
        }
        if (sign < 0)
          for (int k = 0; k < d; ++k) f[k] = -f[k];
        auto [it, inserted] = color_of.try_emplace(f, next_color, sign);
        if (inserted) ++next_color;
        pat.at(i, j).color = it->second.first;
        pat.at(i, j).sign = sign * it->second.second;  // relative to the color's first occurrence
      }
    }
    return pat;
  }
}

template <class S>
Enumeration<S> enumerate_architectures(const FiniteGroup<S>& G) {
  Enumeration<S> e;
  e.sub_classes = subgroup_classes(G.table);
  std::vector<SubgroupPairClass> pcs = pair_classes(G.table);

  auto h_class_of = [&](const Subgroup& s) {
    auto it = std::lower_bound(e.sub_classes.subgroups.begin(), e.sub_classes.subgroups.end(), s);
    return e.sub_classes.class_of[it - e.sub_classes.subgroups.begin()];
  };

  for (SubgroupPairClass& cls : pcs) {
    ClassSlot<S> slot;
    slot.h_class = h_class_of(cls.H);
    slot.adm = admissible(G, cls.H, cls.K);
    if (slot.adm.admissible) slot.weight_space = weight_space_of(G, cls.H, cls.K);
    slot.cls = std::move(cls);
    e.slots.push_back(std::move(slot));
  }

  // Columns: j = 0 for K = H, then the index-2 classes in enumeration order.
  std::map<int, std::vector<int>> rows_by_class;  // h_class -> slot indices
  for (int i = 0; i < static_cast<int>(e.slots.size()); ++i)
    rows_by_class[e.slots[i].h_class].push_back(i);
  std::vector<int> admissible_h_classes;
  for (auto& [hc, slot_ids] : rows_by_class) {
    std::stable_sort(slot_ids.begin(), slot_ids.end(), [&](int a, int b) {
      return (e.slots[a].cls.index == 1) > (e.slots[b].cls.index == 1);
    });
    for (int j = 0; j < static_cast<int>(slot_ids.size()); ++j) e.slots[slot_ids[j]].col = j;
    bool any = false;
    for (int id : slot_ids) any = any || e.slots[id].adm.admissible;
    if (any) admissible_h_classes.push_back(hc);
  }
  std::sort(admissible_h_classes.begin(), admissible_h_classes.end());
  for (int r = 0; r < static_cast<int>(admissible_h_classes.size()); ++r)
    for (int id : rows_by_class[admissible_h_classes[r]]) e.slots[id].row = r;

  for (const ClassSlot<S>& slot : e.slots) {
    if (!slot.adm.admissible) continue;
    ArchitectureSpec<S> a;
    a.row = slot.row;
    a.col = slot.col;
    a.name = std::to_string(slot.row) + "." + std::to_string(slot.col);
    a.H = slot.cls.H;
    a.K = slot.cls.K;
    a.tau = slot.cls.index - 1;
    a.hidden = G.order() / a.H.order();
    a.transversal = transversal(G.table, a.H, a.K);
    a.rep = build_rho(G.table, a.H, a.K, a.transversal);
    a.weight_space = slot.weight_space;
    auto sub_id = [&](const Subgroup& s) {
      auto it = std::lower_bound(e.sub_classes.subgroups.begin(), e.sub_classes.subgroups.end(), s);
      return static_cast<int>(it - e.sub_classes.subgroups.begin());
    };
    a.H_id = sub_id(a.H);
    a.K_id = sub_id(a.K);
    a.cohomology_zero = (a.K == a.H);
    if constexpr (ScalarTraits<S>::exact) a.pattern = constraint_pattern(G, a);
    e.archs.push_back(std::move(a));
  }
  std::sort(e.archs.begin(), e.archs.end(),
            [](const ArchitectureSpec<S>& x, const ArchitectureSpec<S>& y) {
              return std::make_pair(x.row, x.col) < std::make_pair(y.row, y.col);
            });
  return e;
}

template <class S>
struct InstanceScalars {
  S a = S(1);
  S b = S(0);
  std::vector<S> c;  // projected onto ran(P_G); empty means zero
  S d = S(0);
};

namespace detail {

inline void unit_normalize_weight(std::vector<double>& w, double) {
  double n = norm2(w);
  for (double& x : w) x /= n;
}

// Exact rows stay exact: rescale only when the squared norm is a perfect
// rational square, otherwise keep the raw representative (G-invariance is
// scale independent).
inline void unit_normalize_weight(std::vector<Rat>& w, double) {
  Rat n2(0);
  for (const Rat& x : w) n2 += x * x;
  if (sgn(n2) == 0) return;
  mpz_class num = n2.get_num(), den = n2.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat inv(rd, rn);
    inv.canonicalize();
    for (Rat& x : w) x *= inv;
  }
}

}  // namespace detail

template <class S>
SNNInstance<S> sample_instance(const FiniteGroup<S>& G, const ArchitectureSpec<S>& arch,
                               const InstanceScalars<S>& scalars,
                               std::vector<S> w_coeffs = {}, bool unit_normalize = true) {
  if (ScalarTraits<S>::is_zero(scalars.a, 0.0))
    throw ZeroOutputScale("output scale a must be nonzero");
  const int d = arch.weight_space.dim();
  if (d == 0) throw ZeroWeight("architecture has an empty weight space");
  if (w_coeffs.empty()) {
    w_coeffs.assign(d, S(0));
    w_coeffs[0] = S(1);
  }
  std::vector<S> w(G.dim, S(0));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < G.dim; ++i) w[i] += w_coeffs[k] * arch.weight_space.vectors[k][i];
  bool all_zero = true;
  for (const S& x : w)
    if (!ScalarTraits<S>::is_zero(x, 0.0)) all_zero = false;
  if (all_zero) throw ZeroWeight("weight coefficients give the zero vector");
  if (unit_normalize) detail::unit_normalize_weight(w, G.tol.eq);

  const int n = arch.hidden;
  SNNInstance<S> inst;
  inst.W = Mat<S>(n, G.dim);
  for (int i = 0; i < n; ++i) inst.W.set_row(i, G.elems[arch.transversal.reps[i]].apply(w));
  inst.a.assign(n, scalars.a);
  // Type 1 keeps a free constant bias; the sign twist of type 2 forces zero.
  inst.b.assign(n, arch.tau == 0 ? scalars.b : S(0));

  std::vector<S> c_sup = scalars.c.empty() ? std::vector<S>(G.dim, S(0)) : scalars.c;
  if (static_cast<int>(c_sup.size()) != G.dim) throw DimensionMismatch("c has wrong length");
  std::vector<S> c = projector(G, G.whole()).apply(c_sup);
  if (arch.tau == 1) {
    // c* = -1/2 W^T a* + (projected) c
    std::vector<S> wa = inst.W.transpose().apply(inst.a);
    S half;
    if constexpr (ScalarTraits<S>::exact)
      half = ratio(1, 2);
    else
      half = 0.5;
    for (int i = 0; i < G.dim; ++i) c[i] -= half * wa[i];
  }
  inst.c = std::move(c);
  inst.d = scalars.d;
  return inst;
}

// Pairwise orthogonality of the weight spaces of same-row architectures.
template <class S>
std::vector<std::vector<bool>> orthogonality_check(const FiniteGroup<S>& G,
                                                   const std::vector<const ArchitectureSpec<S>*>& row) {
  const int k = static_cast<int>(row.size());
  std::vector<std::vector<bool>> ok(k, std::vector<bool>(k, true));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      for (const auto& va : row[a]->weight_space.vectors)
        for (const auto& vb : row[b]->weight_space.vectors)
          if (!ScalarTraits<S>::is_zero(dot(va, vb), G.tol.orth)) ok[a][b] = false;
    }
  return ok;
}

// Per-type admissible/total counts in the style of a survey table: one row
// per subgroup class, K running over the literal index-<=2 subgroups of the
// class representative.
struct TableCounts {
  int type1_admissible = 0;
  int type1_total = 0;
  int type2_admissible = 0;
  int type2_total = 0;
};

template <class S>
TableCounts table_counts(const FiniteGroup<S>& G) {
  TableCounts tc;
  SubgroupClasses sc = subgroup_classes(G.table);
  for (const auto& cls : sc.classes) {
    const Subgroup& H = sc.subgroups[cls[0]];
    ++tc.type1_total;
    if (admissible(G, H, H).admissible) ++tc.type1_admissible;
    for (const Subgroup& K : index2_subgroups(G.table, H, sc.subgroups)) {
      ++tc.type2_total;
      if (admissible(G, H, K).admissible) ++tc.type2_admissible;
    }
  }
  return tc;
}

}  // namespace gsnn
