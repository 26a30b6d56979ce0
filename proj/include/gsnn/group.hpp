#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "gsnn/group_table.hpp"
#include "gsnn/linalg.hpp"
#include "gsnn/matrix.hpp"

namespace gsnn {

struct NonOrthogonalGenerator : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OrderBoundExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kDefaultMaxGroupOrder = 48;

// Finite group of m x m orthogonal matrices, closed under multiplication,
// with elems[0] = identity. perm_image[i] is set when elems[i] is a
// permutation matrix (0-indexed image form: e_j -> e_{img[j]}).
template <class S>
struct FiniteGroup {
  int dim = 0;
  std::vector<Mat<S>> elems;
  std::vector<std::optional<std::vector<int>>> perm_image;
  std::vector<int> generators;  // element indices
  GroupTable table;
  Tolerances tol;

  int order() const { return table.order(); }
  Subgroup whole() const {
    std::vector<int> m(order());
    for (int i = 0; i < order(); ++i) m[i] = i;
    return Subgroup{std::move(m)};
  }
};

template <class S>
Mat<S> perm_matrix(const std::vector<int>& image0) {
  const int n = static_cast<int>(image0.size());
  Mat<S> m(n, n);
  for (int j = 0; j < n; ++j) m(image0[j], j) = S(1);
  return m;
}

template <class S>
std::optional<std::vector<int>> as_perm_image(const Mat<S>& m, double eps) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::vector<int> img(m.cols(), -1);
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i < m.rows(); ++i) {
      const S& v = m(i, j);
      if (ScalarTraits<S>::is_zero(v, eps)) continue;
      if (img[j] >= 0 || !ScalarTraits<S>::eq(v, S(1), eps)) return std::nullopt;
      img[j] = i;
    }
    if (img[j] < 0) return std::nullopt;
  }
  return img;
}

template <class S>
FiniteGroup<S> close_generators(const std::vector<Mat<S>>& gens, int dim,
                                int max_order = kDefaultMaxGroupOrder, Tolerances tol = {}) {
  FiniteGroup<S> G;
  G.dim = dim;
  G.tol = tol;

  for (const auto& g : gens) {
    if (g.rows() != dim || g.cols() != dim)
      throw NonOrthogonalGenerator("generator dimension mismatch");
    if (!(g.transpose() * g).approx_eq(Mat<S>::identity(dim), tol.eq))
      throw NonOrthogonalGenerator("generator is not orthogonal");
  }

  auto find = [&](const Mat<S>& m) -> int {
    for (int i = 0; i < static_cast<int>(G.elems.size()); ++i)
      if (G.elems[i].approx_eq(m, tol.eq)) return i;
    return -1;
  };
  auto add = [&](const Mat<S>& m) -> int {
    if (static_cast<int>(G.elems.size()) >= max_order)
      throw OrderBoundExceeded("group closure exceeds max order " + std::to_string(max_order));
    G.elems.push_back(m);
    G.perm_image.push_back(as_perm_image(m, tol.eq));
    return static_cast<int>(G.elems.size()) - 1;
  };

  add(Mat<S>::identity(dim));
  for (const auto& g : gens) {
    int i = find(g);
    if (i < 0) i = add(g);
    G.generators.push_back(i);
  }

  // BFS closure over products with generators.
  for (size_t head = 0; head < G.elems.size(); ++head) {
    for (int gi : G.generators) {
      Mat<S> p = G.elems[head] * G.elems[gi];
      if (find(p) < 0) add(p);
    }
  }

  const int n = static_cast<int>(G.elems.size());
  G.table.mult.assign(n, std::vector<int>(n, -1));
  G.table.inv.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int k = find(G.elems[i] * G.elems[j]);
      if (k < 0) throw OrderBoundExceeded("closure incomplete; raise max order");
      G.table.mult[i][j] = k;
      if (k == 0) {
        G.table.inv[i] = j;
        if (G.table.inv[j] < 0) G.table.inv[j] = i;
      }
    }
  }
  return G;
}

// --- named constructors ------------------------------------------------

inline std::vector<int> to_zero_indexed(const std::vector<int>& image1) {
  std::vector<int> img(image1.size());
  for (size_t j = 0; j < image1.size(); ++j) img[j] = image1[j] - 1;
  return img;
}

template <class S>
FiniteGroup<S> trivial_group(int dim = 1) {
  return close_generators<S>({}, dim);
}

template <class S>
FiniteGroup<S> cyclic_perm_group(int n, int max_order = kDefaultMaxGroupOrder) {
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j) img[j] = (j + 1) % n;
  return close_generators<S>({perm_matrix<S>(img)}, n, max_order);
}

template <class S>
FiniteGroup<S> dihedral_perm_group(int n, int max_order = kDefaultMaxGroupOrder) {
  std::vector<int> rot(n), rev(n);
  for (int j = 0; j < n; ++j) {
    rot[j] = (j + 1) % n;
    rev[j] = n - 1 - j;
  }
  return close_generators<S>({perm_matrix<S>(rot), perm_matrix<S>(rev)}, n, max_order);
}

// Direct product acting on the direct sum of the factors' spaces.
template <class S>
FiniteGroup<S> product_group(const std::vector<FiniteGroup<S>>& factors,
                             int max_order = kDefaultMaxGroupOrder) {
  int dim = 0;
  for (const auto& f : factors) dim += f.dim;
  std::vector<Mat<S>> gens;
  int offset = 0;
  for (const auto& f : factors) {
    for (int gi : f.generators) {
      Mat<S> g = Mat<S>::identity(dim);
      for (int i = 0; i < f.dim; ++i)
        for (int j = 0; j < f.dim; ++j) g(offset + i, offset + j) = f.elems[gi](i, j);
      gens.push_back(std::move(g));
    }
    offset += f.dim;
  }
  return close_generators<S>(gens, dim, max_order);
}

inline MatD rotation2d_matrix(double theta) {
  MatD m(2, 2);
  m(0, 0) = std::cos(theta);
  m(0, 1) = -std::sin(theta);
  m(1, 0) = std::sin(theta);
  m(1, 1) = std::cos(theta);
  return m;
}

inline MatD reflection2d_matrix(double axis_angle) {
  MatD m(2, 2);
  m(0, 0) = std::cos(2 * axis_angle);
  m(0, 1) = std::sin(2 * axis_angle);
  m(1, 0) = std::sin(2 * axis_angle);
  m(1, 1) = -std::cos(2 * axis_angle);
  return m;
}

inline FiniteGroup<double> rotation2d_group(int n, int max_order = kDefaultMaxGroupOrder) {
  return close_generators<double>({rotation2d_matrix(2 * std::numbers::pi / n)}, 2, max_order);
}

inline FiniteGroup<double> dihedral2d_group(int n, double axis_deg,
                                            int max_order = kDefaultMaxGroupOrder) {
  double phi = axis_deg * std::numbers::pi / 180.0;
  return close_generators<double>(
      {rotation2d_matrix(2 * std::numbers::pi / n), reflection2d_matrix(phi)}, 2, max_order);
}

// --- matrix-facing queries ----------------------------------------------

// Orthogonal projector onto the subspace fixed pointwise by A: average of
// the member matrices.
template <class S>
Mat<S> projector(const FiniteGroup<S>& G, const Subgroup& A) {
  Mat<S> sum(G.dim, G.dim);
  for (int i : A.members) sum = sum + G.elems[i];
  if constexpr (ScalarTraits<S>::exact) {
    return sum.scaled(ratio(1, A.order()));
  } else {
    return sum.scaled(1.0 / A.order());
  }
}

// {g in G : g P = P}, verified closed.
template <class S>
Subgroup stabilizer_of_matrix(const FiniteGroup<S>& G, const Mat<S>& P) {
  std::vector<int> members;
  for (int i = 0; i < G.order(); ++i)
    if ((G.elems[i] * P).approx_eq(P, G.tol.eq)) members.push_back(i);
  Subgroup st{std::move(members)};
  if (!is_subgroup(G.table, st))
    throw std::runtime_error("stabilizer is not closed; tolerance too coarse");
  return st;
}

}  // namespace gsnn
